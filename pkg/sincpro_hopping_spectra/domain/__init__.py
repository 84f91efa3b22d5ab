"""
Dominio - Tipos inmutables, errores y contratos
"""

from .config import CurveOptions, RunConfig, SolverOptions, SpectraOptions
from .errors import (
    ConfigurationError,
    InvalidAmplitudeError,
    InvalidWordError,
    OutOfDomainError,
    ParameterOutOfRangeError,
    SolverFailureError,
    SpectraError,
    WindowError,
)
from .operators import (
    Classification,
    DecayReport,
    DenseMatrix,
    Region,
    RegionMembership,
    RegionParams,
    TraceData,
    Transfer2x2,
)
from .polynomials import IntPolynomial
from .sequences import DiagWord, GammaImage, SeqWindow, SignWord
from .spectra import CheckResult, InclusionReport, SpectrumCloud

__all__ = [
    "Classification",
    "CheckResult",
    "ConfigurationError",
    "CurveOptions",
    "DecayReport",
    "DenseMatrix",
    "DiagWord",
    "GammaImage",
    "InclusionReport",
    "IntPolynomial",
    "InvalidAmplitudeError",
    "InvalidWordError",
    "OutOfDomainError",
    "ParameterOutOfRangeError",
    "Region",
    "RegionMembership",
    "RegionParams",
    "RunConfig",
    "SeqWindow",
    "SignWord",
    "SolverFailureError",
    "SolverOptions",
    "SpectraError",
    "SpectraOptions",
    "SpectrumCloud",
    "TraceData",
    "Transfer2x2",
    "WindowError",
]
