"""Release checklist.

Ten numbered criteria, each a single test that prints one
``[criterion NN] PASS/FAIL`` line before asserting, so a plain
``pytest -v tests/test_acceptance.py`` doubles as the sign-off record.
Criterion 08 is expected to fail for the narrow-band parameter set; see
the note inside the test.
"""

import math
from dataclasses import replace

import numpy as np
import pytest
import scipy.optimize

from omband import (
    DriveParams,
    LatticeParams,
    QuenchSchedule,
    QuenchTimeRule,
    band_energies,
    bloch_grid_energies,
    bloch_hamiltonian,
    finite_lattice_spectrum,
    gap,
    gap_extrema,
    hybrid_basis,
    integrate_interaction_picture,
    magnus_propagator,
    quench_scan,
    quench_trace,
    reduced_coeffs,
    solve_meanfield,
)


def _verdict(num, ok, detail):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} - {detail}")


def _circ_dist(a, b):
    d = abs(a - b) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


# 01 ------------------------------------------------------------------


def test_01_flat_set_gap_extrema_values(coupling_dominated):
    p = replace(coupling_dominated, theta=math.pi)
    ext = gap_extrema(p)
    minima = [e for e in ext if e.kind == "minimum"]
    maxima = [e for e in ext if e.kind == "maximum"]
    min_val_ok = all(abs(e.value - 0.172) <= 1e-6 for e in minima)
    min_loc_ok = sorted(round(e.kd / math.pi, 6) for e in minima) == [-0.5, 0.5]
    max_val_ok = all(abs(e.value - 0.1935) <= 5e-4 for e in maxima)
    ok = len(minima) == 2 and len(maxima) == 2 and min_val_ok and min_loc_ok and max_val_ok
    _verdict(
        1,
        ok,
        "narrow-band set, theta=pi: gap range "
        f"[{minima[0].value:.6f}, {maxima[0].value:.6f}] vs [0.172, 0.1935]",
    )
    assert ok, (minima, maxima)


# 02 ------------------------------------------------------------------


def test_02_gap_minima_locations_track_phase(hopping_dominated, coupling_dominated):
    cases = [
        (coupling_dominated, 0.25 * math.pi, (0.25, -0.75)),
        (coupling_dominated, 0.50 * math.pi, (0.0, -1.0)),
        (hopping_dominated, 0.25 * math.pi, (0.13, -0.87)),
        (hopping_dominated, 0.50 * math.pi, (-0.13, 0.87)),
    ]
    worst = 0.0
    for base, theta, targets in cases:
        p = replace(base, theta=theta)
        minima = [e.kd for e in gap_extrema(p) if e.kind == "minimum"]
        for t in targets:
            dev = min(_circ_dist(kd, t * math.pi) for kd in minima)
            worst = max(worst, dev / math.pi)
    ok = worst <= 0.01
    _verdict(2, ok, f"worst minima-location deviation {worst:.5f} pi (allow 0.01 pi)")
    assert ok


# 03 ------------------------------------------------------------------


def test_03_zone_centre_weight_swap(hopping_dominated):
    a0 = hybrid_basis(hopping_dominated, 0.0).alpha_A
    api = hybrid_basis(replace(hopping_dominated, theta=math.pi), 0.0).alpha_A
    ok = abs(a0 - 0.0257) <= 1e-3 and abs(api - 0.995) <= 1e-3
    _verdict(3, ok, f"alpha_A at kd=0: theta=0 -> {a0:.4f}, theta=pi -> {api:.4f}")
    assert ok


# 04 ------------------------------------------------------------------


def test_04_randomized_invariants():
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(1000):
        p = LatticeParams(
            omega_m=rng.uniform(0.5, 8.0),
            Delta=rng.uniform(-8.0, 8.0),
            J=rng.uniform(0.0, 2.0),
            K=rng.uniform(0.0, 2.0),
            g=rng.uniform(1e-3, 2.0),
            theta=rng.uniform(-math.pi, math.pi),
        )
        kd = rng.uniform(-math.pi, math.pi)
        hb = hybrid_basis(p, kd)
        R = hb.R
        wp, wm = band_energies(p, kd)
        devs = [
            abs(hb.alpha_A + hb.beta_A - 1.0),
            abs(hb.alpha_B - hb.beta_A),
            np.max(np.abs(R @ R.T - np.eye(2))),
            np.max(np.abs(R @ bloch_hamiltonian(p, kd) @ R.T - np.diag([wp, wm]))),
            abs(gap(p, kd) - gap(replace(p, theta=-p.theta), -kd)),
        ]
        worst = max(worst, max(devs))
    ok = worst <= 1e-10
    _verdict(4, ok, f"1000 draws, worst invariant deviation {worst:.2e} (allow 1e-10)")
    assert ok


# 05 ------------------------------------------------------------------


def test_05_propagator_vs_integrator(hopping_dominated):
    p0 = hopping_dominated
    max_unit = 0.0
    max_dev = 0.0
    for theta in (0.0, 0.25 * math.pi, math.pi, 0.8 * math.pi):
        p = replace(p0, theta=theta)
        for kd in np.linspace(-math.pi, math.pi, 64):
            kd = float(kd)
            s = QuenchSchedule(g0=p.g, t_q=1e-4 / gap(p, kd))
            rep = integrate_interaction_picture(p, kd, s, 1024)
            S = magnus_propagator(p.g, reduced_coeffs(p, kd).delta, s.t_q, s.t_q)
            max_unit = max(max_unit, float(np.max(np.abs(S @ S.conj().T - np.eye(2)))))
            max_dev = max(max_dev, rep.magnus_deviation)
    kd = 0.48 * math.pi
    s = QuenchSchedule(g0=p0.g, t_q=2.0 / gap(p0, kd))
    U = {n: integrate_interaction_picture(p0, kd, s, n).U for n in (64, 128, 256)}
    ratio = float(
        np.max(np.abs(U[64] - U[128])) / np.max(np.abs(U[128] - U[256]))
    )
    ok = max_unit <= 1e-12 and max_dev <= 1e-6 and 12.0 <= ratio <= 20.0
    _verdict(
        5,
        ok,
        f"unitarity {max_unit:.1e} (<=1e-12), closed-form vs RK4 {max_dev:.1e} "
        f"(<=1e-6), step-halving ratio {ratio:.1f} (in [12, 20])",
    )
    assert ok


# 06 ------------------------------------------------------------------


def test_06_conservation_and_thermal_scale_invariance(
    hopping_dominated, coupling_dominated
):
    from omband.quench import BathParams

    worst_cons = 0.0
    worst_scale = 0.0  # fraction of the allowed envelope actually used
    for base in (hopping_dominated, coupling_dominated):
        for theta in (0.0, math.pi):
            for kd in (0.48 * math.pi, 0.2 * math.pi):
                p = replace(base, theta=theta)
                s = QuenchSchedule(g0=p.g, t_q=1e-4 / gap(p, kd))
                lo = quench_trace(p, kd, s, n_t=64)
                hi = quench_trace(
                    p, kd, s, n_t=64, bath=BathParams(n_th=1000.0)
                )
                tot0 = lo[0].N_A + lo[0].N_B
                for a, b in zip(lo, hi):
                    worst_cons = max(worst_cons, abs(a.N_A + a.N_B - tot0))
                    for x, y in (
                        (a.N_A, b.N_A), (a.N_B, b.N_B),
                        (a.Nq_A, b.Nq_A), (a.Nq_B, b.Nq_B),
                    ):
                        # 1e-12 relative, with an absolute floor for values
                        # crossing zero (no purely relative bound can hold
                        # there in floating point)
                        allowed = max(1e-12 * max(abs(x), abs(y)), 1e-15)
                        worst_scale = max(worst_scale, abs(x - y) / allowed)
    ok = worst_cons <= 1e-10 and worst_scale <= 1.0
    _verdict(
        6,
        ok,
        f"population drift {worst_cons:.1e} (<=1e-10), occupancy-scale "
        f"shift at {worst_scale:.2f} of the 1e-12-relative envelope",
    )
    assert ok


# 07 ------------------------------------------------------------------


def test_07_phase_flips_mode_dominance(hopping_dominated):
    kd = 0.48 * math.pi
    ends = {}
    for theta in (0.0, math.pi):
        p = replace(hopping_dominated, theta=theta)
        s = QuenchSchedule(g0=p.g, t_q=1e-4 / gap(p, kd))
        ends[theta] = quench_trace(p, kd, s, n_t=2)[-1]
    ok = ends[0.0].Nq_B > ends[0.0].Nq_A and ends[math.pi].Nq_A > ends[math.pi].Nq_B
    _verdict(
        7,
        ok,
        f"end-of-ramp Nq at kd=0.48pi: theta=0 -> (A {ends[0.0].Nq_A:+.5f}, "
        f"B {ends[0.0].Nq_B:+.5f}); theta=pi -> (A {ends[math.pi].Nq_A:+.5f}, "
        f"B {ends[math.pi].Nq_B:+.5f})",
    )
    assert ok


# 08 ------------------------------------------------------------------


def _dominant_peaks(records):
    """kd of every local maximum of |Nq_A| within 1% of the global one."""
    finite = [(r.kd, abs(r.Nq_A)) for r in records if math.isfinite(r.Nq_A)]
    kds = np.array([kd for kd, _ in finite])
    y = np.array([v for _, v in finite])
    if kds[-1] - kds[0] >= 2.0 * math.pi - 1e-9:  # drop duplicated endpoint
        kds, y = kds[:-1], y[:-1]
    up = y >= np.roll(y, 1)
    down = y >= np.roll(y, -1)
    peaks = kds[up & down & (y >= 0.99 * y.max())]
    return list(peaks)


def test_08_transfer_peaks_sit_at_gap_minima(hopping_dominated, coupling_dominated):
    # Expected to FAIL on the narrow-band half.  There g exceeds every
    # detuning, so the sudden transfer probability g^2/r^2 is nearly flat
    # in kd and the net excitation is dominated by the thermal contrast
    # between the hybrid modes, which peaks where the gap is WIDEST --
    # exactly 0.5 pi away from the minima checked here.  The wide-band
    # half (theta = 0.8 pi) does place its dominant peaks at the band
    # crossings and passes on its own.
    rule = QuenchTimeRule(mode="per-k", scale=1e-4)
    worst_a = 0.0
    for theta in (0.0, 0.25 * math.pi, 0.5 * math.pi, math.pi):
        records = quench_scan(coupling_dominated, rule, theta=theta, n_k=512)
        p = replace(coupling_dominated, theta=theta)
        minima = [e.kd for e in gap_extrema(p) if e.kind == "minimum"]
        for peak in _dominant_peaks(records):
            dev = min(_circ_dist(peak, m) for m in minima)
            worst_a = max(worst_a, dev / math.pi)
    ok_a = worst_a <= 0.05

    records = quench_scan(hopping_dominated, rule, theta=0.8 * math.pi, n_k=512)
    peaks = _dominant_peaks(records)
    worst_b = max(
        min(_circ_dist(p, t * math.pi) for p in peaks) for t in (-0.4, 0.6)
    ) / math.pi
    ok_b = worst_b <= 0.05

    ok = ok_a and ok_b
    _verdict(
        8,
        ok,
        f"peak-to-minimum distance: narrow-band set {worst_a:.3f} pi, "
        f"wide-band set (theta=0.8pi) {worst_b:.3f} pi (allow 0.05 pi)",
    )
    assert ok, (
        "narrow-band transfer peaks sit at the gap maxima for these bath "
        f"defaults (off by {worst_a:.3f} pi); see comment above"
    )


# 09 ------------------------------------------------------------------


def test_09_finite_rings_match_band_multisets(hopping_dominated):
    worst = 0.0
    for N in (2, 4, 8, 16):
        for m in (0, 1, N // 2):
            p = replace(hopping_dominated, theta=2.0 * math.pi * m / N)
            spec = finite_lattice_spectrum(p, N, m)
            dev = float(np.max(np.abs(spec.eigenvalues - bloch_grid_energies(p, N))))
            worst = max(worst, dev)
    ok = worst <= 1e-10
    _verdict(9, ok, f"ring spectra vs analytic bands, worst {worst:.1e} (<=1e-10)")
    assert ok


# 10 ------------------------------------------------------------------


def test_10_meanfield_closed_forms_and_oracle():
    d0 = DriveParams()
    plain = solve_meanfield(replace(d0, G=0.0))
    lat = d0.lattice
    den = lat.Delta + 0.5j * d0.kappa + 2.0 * lat.J * math.cos(lat.theta)
    exact_ok = plain.alpha == d0.Omega_d / den and plain.beta == 0.0

    sol = solve_meanfield(d0)

    def residual(v):
        a = v[0] + 1j * v[1]
        b = v[2] + 1j * v[3]
        den_a = den + d0.G * (b + b.conjugate())
        den_b = lat.omega_m - 0.5j * d0.gamma_m - 2.0 * lat.K
        ra = a - d0.Omega_d / den_a
        rb = b - d0.G * abs(a) ** 2 / den_b
        return [ra.real, ra.imag, rb.real, rb.imag]

    root = scipy.optimize.root(residual, [0.1, 0.0, 0.0, 0.0], tol=1e-14)
    a_ref = root.x[0] + 1j * root.x[1]
    oracle_dev = abs(sol.alpha - a_ref)

    undriven = solve_meanfield(replace(d0, Omega_d=0.0))
    ok = exact_ok and oracle_dev <= 1e-9 and undriven.g_enhanced == 0.0
    _verdict(
        10,
        ok,
        f"G=0 exact: {exact_ok}; root-finder deviation {oracle_dev:.1e} "
        f"(<=1e-9); undriven g = {undriven.g_enhanced}",
    )
    assert ok
