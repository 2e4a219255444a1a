"""Exception hierarchy for the caw package.

Two families matter for the CLI exit-code contract: input problems
(``InvalidInput``, ``ParseError``, ``ValidationError``) map to exit code 2,
solver problems (``SolverError`` and subclasses) map to exit code 3.
"""

from __future__ import annotations


class CawError(Exception):
    """Base class for all package errors."""


class InvalidInput(CawError, ValueError):
    """An argument violates an operation's preconditions."""


class ParseError(CawError):
    """A scenario document is malformed (bad JSON, wrong types, unknown keys)."""


class ValidationError(CawError):
    """A parsed scenario violates model invariants.

    Carries the full list of violations so callers can report all of them
    at once instead of one per run.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


class SolverError(CawError):
    """Base class for failures of equilibrium/root-finding routines."""


class NoEquilibrium(SolverError):
    """The market has no clearing price (e.g. no sign change in excess demand)."""


class NoConvergence(SolverError):
    """Iteration limit reached before tolerances were met."""

    def __init__(self, message: str, residual: float, iterations: int):
        self.residual = residual
        self.iterations = iterations
        super().__init__(f"{message} (residual={residual:.3e}, iterations={iterations})")


class DegenerateCeiling(SolverError):
    """Wage ceiling is zero while labor demand is unbounded as the wage falls to zero."""


class Infeasible(SolverError):
    """No input bundle can reach the requested output level."""


class CeilingNotBinding(SolverError):
    """A ceiling passed to a binding-only analysis lies above the uncapped clearing wage."""
