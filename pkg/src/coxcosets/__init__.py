"""Finite Coxeter groups, parabolic double-coset systems and Bruhat-graph checks."""

from .classification import CoxeterMatrix, classify, load_matrix, make_matrix, validate_matrix
from .cosets import (
    CosetSystem,
    DoubleCoset,
    MarkedCoset,
    build_system,
    coatom_data,
    component,
    double_coset,
    maximal_presentation,
    parabolic,
    presentations,
    project_and_fiber,
    structural_checks,
)
from .errors import CoxeterError
from .group import DescentData, Group, build_group
from .orders import OrderKind, covers, interval, leq, lifting_check, up_covers
from .polynomials import MultiPoly, eulerian4, inout_poincare, poincare, projections

__all__ = [
    "CosetSystem",
    "CoxeterError",
    "CoxeterMatrix",
    "DescentData",
    "DoubleCoset",
    "Group",
    "MarkedCoset",
    "MultiPoly",
    "OrderKind",
    "build_group",
    "build_system",
    "classify",
    "coatom_data",
    "component",
    "covers",
    "double_coset",
    "eulerian4",
    "inout_poincare",
    "interval",
    "leq",
    "lifting_check",
    "load_matrix",
    "make_matrix",
    "maximal_presentation",
    "parabolic",
    "poincare",
    "presentations",
    "project_and_fiber",
    "projections",
    "structural_checks",
    "up_covers",
    "validate_matrix",
]
