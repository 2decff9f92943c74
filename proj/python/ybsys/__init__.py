"""Exact Yang-Baxter systems from entwining structures."""

from ._ybsys import (
    DimensionMismatch,
    DivisionByZero,
    Error,
    InvalidArgument,
    ParseError,
    PreconditionFailed,
    SingularMap,
    build_wxz,
    check_algebra,
    check_coalgebra,
    check_entwining,
    check_wxz,
    example,
    list_examples,
    run_cli,
    simplify,
)

__all__ = [
    "DimensionMismatch",
    "DivisionByZero",
    "Error",
    "InvalidArgument",
    "ParseError",
    "PreconditionFailed",
    "SingularMap",
    "build_wxz",
    "check_algebra",
    "check_coalgebra",
    "check_entwining",
    "check_wxz",
    "example",
    "list_examples",
    "run_cli",
    "simplify",
]


def passed(report):
    """True when every check in a report list holds."""
    return all(item["passed"] for item in report)
