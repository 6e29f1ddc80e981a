from specgap.spectra.bounds import (
    ShiftedBoundResult,
    closed_form_f,
    cut_values,
    energy,
    path_mu,
    rayleigh,
    relaxation_time,
    shifted_bound,
    test_vector_H00,
)
from specgap.spectra.eigen import (
    SpectralReport,
    algebraic_connectivity,
    eigen_sym,
    mu_of,
    orient_by_cell,
)

__all__ = [
    # Eigensolver
    "SpectralReport",
    "eigen_sym",
    "algebraic_connectivity",
    "mu_of",
    "orient_by_cell",
    # Bounds
    "ShiftedBoundResult",
    "energy",
    "rayleigh",
    "shifted_bound",
    "relaxation_time",
    # Closed forms
    "path_mu",
    "cut_values",
    "closed_form_f",
    "test_vector_H00",
]
