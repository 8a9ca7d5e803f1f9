"""Exception types shared across the library."""


class AlgebroidError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(AlgebroidError):
    """Inversion of the zero element of a field."""


class FieldMismatch(AlgebroidError):
    """Two scalars (or a scalar and a ring) disagree on their field."""


class SolverLimitation(AlgebroidError):
    """An exact computation is out of the supported range (for instance
    factoring a rootless univariate of degree eight or more over Q, or a
    nested field tower).  Raised instead of returning unverified output."""


class UnitIdeal(AlgebroidError):
    """The ideal contains a unit where a proper ideal is required."""


class ZeroPoly(AlgebroidError):
    """A nonzero polynomial argument is required."""


class AllInfinite(AlgebroidError):
    """Every entry of the weight vector is infinite."""


class NotPrimitive(AlgebroidError):
    """The weight entries have gcd bigger than one."""


class TruncationExhausted(AlgebroidError):
    """A truncated computation hit its precision cap before a decision."""


class InfinitePivot(AlgebroidError):
    """The chosen pivot variable has infinite intersection number."""


class UnequalBase(AlgebroidError):
    """The two polynomials compared parametrically have different
    intersection numbers, so the comparison is ill-posed."""


class ContextViolation(AlgebroidError):
    """The parametric test hit its unguarded case: the unique exceptional
    value gives infinite intersection number yet the combination lies in the
    radical, which cannot happen in the decision loop's calling context."""


class WrongDimension(AlgebroidError):
    """The input ideal does not define a curve (dimension is not one)."""


class InfiniteWeight(AlgebroidError):
    """Some coordinate has infinite intersection number after
    normalization; the input violates the unmixedness contract."""


class NotPrime(AlgebroidError):
    """The ideal claimed prime by the caller demonstrably is not."""


class NonRadicalSuspected(AlgebroidError):
    """An iteration cap was hit in a loop that terminates on radical
    inputs; the input is probably not radical."""


class CertificateSearchFailed(AlgebroidError):
    """Reducibility was established but no checkable certificate of the
    supported kinds could be constructed."""


class ParseError(AlgebroidError):
    """Malformed polynomial text or ideal file."""
