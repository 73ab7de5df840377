"""Band structure and ramp dynamics of a phase-driven optomechanical ring.

The public surface re-exported here covers the Bloch model and its
hybridized bands, the classical mean-field working point, the
steady-state thermal occupations, the closed-form Magnus treatment of a
linear coupling ramp, and the brute-force cross-checks.
"""

from .model import LatticeParams, ReducedCoeffs, bloch_hamiltonian, reduced_coeffs
from .bands import (
    BAND_SCAN_COLUMNS,
    DegeneratePointError,
    GapExtremum,
    HybridBasis,
    band_energies,
    band_scan,
    gap,
    gap_extrema,
    hybrid_basis,
)
from .meanfield import (
    DriveParams,
    MeanFieldConvergenceError,
    MeanFieldSolution,
    SingularParameterError,
    solve_meanfield,
)
from .quench import (
    DEFAULT_BATH,
    MAGNUS_SERIES_CROSSOVER,
    BathParams,
    MagnusTerms,
    QuenchRecord,
    QuenchSchedule,
    QuenchTimeRule,
    SingularBathError,
    ThermalPopulations,
    coupling_schedule,
    magnus_phi,
    magnus_propagator,
    magnus_terms,
    magnus_theta,
    mode_populations,
    net_excitations,
    quench_map,
    quench_scan,
    quench_trace,
    thermal_populations,
)
from .oracle import (
    CommensurabilityError,
    IntegrationReport,
    LatticeSpectrum,
    bloch_grid_energies,
    finite_lattice_spectrum,
    integrate_interaction_picture,
)

from ._version import __version__

__all__ = [
    "LatticeParams",
    "ReducedCoeffs",
    "reduced_coeffs",
    "bloch_hamiltonian",
    "BAND_SCAN_COLUMNS",
    "DegeneratePointError",
    "GapExtremum",
    "HybridBasis",
    "band_energies",
    "band_scan",
    "gap",
    "gap_extrema",
    "hybrid_basis",
    "DriveParams",
    "MeanFieldConvergenceError",
    "MeanFieldSolution",
    "SingularParameterError",
    "solve_meanfield",
    "DEFAULT_BATH",
    "MAGNUS_SERIES_CROSSOVER",
    "BathParams",
    "MagnusTerms",
    "QuenchRecord",
    "QuenchSchedule",
    "QuenchTimeRule",
    "SingularBathError",
    "ThermalPopulations",
    "coupling_schedule",
    "magnus_phi",
    "magnus_propagator",
    "magnus_terms",
    "magnus_theta",
    "mode_populations",
    "net_excitations",
    "quench_map",
    "quench_scan",
    "quench_trace",
    "thermal_populations",
    "CommensurabilityError",
    "IntegrationReport",
    "LatticeSpectrum",
    "bloch_grid_energies",
    "finite_lattice_spectrum",
    "integrate_interaction_picture",
    "__version__",
]
