"""Exceptions raised at degenerate points of the model family."""


class PTSymError(ValueError):
    """Base class for all parameter/operator degeneracies."""


class DegenerateParameter(PTSymError):
    """A closed form divides by a parameter that is zero (b for r, c for R±)."""


class ExceptionalPoint(PTSymError):
    """c² = b²: eigenvalues coalesce and 1/√(c²−b²) diverges."""


class ZeroVector(PTSymError):
    pass


class SingularMatrix(PTSymError):
    pass


class SingularSum(SingularMatrix):
    """The completeness sum Σ|φ⟩⟨φ| cannot be inverted."""
