"""Quantum state-space geometry, speed, entanglement and phases of spin models."""

from __future__ import annotations

from .errors import BranchError, ConsistencyError, ConvergenceError, DomainError, ResourceError, SpinfoldError
from .evolution import EvolvedFamily, build_family, evolve_exact
from .models import ModelSpec, Variant
from .statespace import BasisDescriptor, DensityMatrix, PureState

__version__ = "0.1.0"

__all__ = [
    "BasisDescriptor",
    "BranchError",
    "ConsistencyError",
    "ConvergenceError",
    "DensityMatrix",
    "DomainError",
    "EvolvedFamily",
    "ModelSpec",
    "PureState",
    "ResourceError",
    "SpinfoldError",
    "Variant",
    "build_family",
    "evolve_exact",
    "__version__",
]
