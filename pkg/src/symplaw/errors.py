"""Exception types raised by the library.

Everything derives from ValueError so callers that only care about
"bad input" can catch that.
"""


class SymplawError(ValueError):
    """Base class for all library errors."""


class DimensionError(SymplawError):
    """Matrix shape does not fit the operation."""


class VariableError(SymplawError):
    """Unknown or clashing polynomial variable name."""


class StructureError(SymplawError):
    """Input violates a required algebraic structure (alternating, j-symmetric, ...)."""


class NotASimilitudeError(SymplawError):
    """M^j M is not a nonzero scalar multiple of the identity."""


class SpectrumError(SymplawError):
    """Lambda coefficients are not the square of a degree-d polynomial (recursion residual)."""


class GeneratorError(SymplawError):
    """Group word uses a generator unknown to the representation."""


class ArityError(SymplawError):
    """Invariant-function arity does not match the argument tuple."""


class MembershipError(SymplawError):
    """Matrix entry lies outside the declared block span of a GMA."""


class CapacityError(SymplawError):
    """Requested computation exceeds the configured size guard."""


class UnsupportedKindError(SymplawError):
    """Operation requires the GSp similitude structure but the object is plain Sp."""


class SchemaError(SymplawError):
    """JSON input does not match the expected schema."""
