"""Exact-arithmetic kernel for graded algebras, their derivations and quotients."""

from .algebra import FinAlgebra, build_algebra
from .fields import GF, QI2, QQ, TOWER, Field
from .fixtures import Fixture, load_fixture, save_fixture
from .grading import ZGrading, validate_grading
from .linalg import Matrix, Subspace, solve_linear
from .report import Report
from .suites import run_suite

__all__ = [
    "GF", "QQ", "TOWER", "Field", "QI2",
    "Matrix", "Subspace", "solve_linear",
    "FinAlgebra", "build_algebra",
    "ZGrading", "validate_grading",
    "Fixture", "load_fixture", "save_fixture",
    "Report", "run_suite",
]
