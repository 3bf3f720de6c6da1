"""Spectra, polariton poles and disorder ensembles for the Tavis-Cummings model."""

from ._core import (
    DomainError,
    InvalidParameter,
    Model,
    Model2Coupling,
    ModelParams,
    PoleKind,
    SingularityError,
    SpectralGrid,
    SpectrumKind,
    __version__,
    absorption_partition,
    dawson,
    dawson_derivative,
    eigensystem,
    ensemble_average,
    existence_check,
    find_poles,
    params_for_coupling,
    sample_detunings,
    sigma_analytic,
    sigma_empirical,
    spectrum,
)

__all__ = [
    "DomainError",
    "InvalidParameter",
    "Model",
    "Model2Coupling",
    "ModelParams",
    "PoleKind",
    "SingularityError",
    "SpectralGrid",
    "SpectrumKind",
    "__version__",
    "absorption_partition",
    "dawson",
    "dawson_derivative",
    "eigensystem",
    "ensemble_average",
    "existence_check",
    "find_poles",
    "params_for_coupling",
    "sample_detunings",
    "sigma_analytic",
    "sigma_empirical",
    "spectrum",
]
