"""Exact Legendre, PIPCIR and polar Legendre polynomials with an identity auditor."""
from .families import FamilyKind, family, legendre, pipcir, polar
from .kernels import KernelSpec, christoffel_darboux, kernel_value, reproduce
from .extremal import oracle_minimize, solve_extremal
from .poly import Interval, Polynomial, X
from .weighted import NotReducible, WeightKind, inner_product, norm_squared

__version__ = "0.1.0"

__all__ = [
    "FamilyKind",
    "Interval",
    "KernelSpec",
    "NotReducible",
    "Polynomial",
    "WeightKind",
    "X",
    "christoffel_darboux",
    "family",
    "inner_product",
    "kernel_value",
    "legendre",
    "norm_squared",
    "oracle_minimize",
    "pipcir",
    "polar",
    "reproduce",
    "solve_extremal",
]
