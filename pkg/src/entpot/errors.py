"""Exception types shared across the package.

Every failure mode a caller may want to handle separately gets its own
class; the CLI maps these onto stable exit codes (see entpot.cli).
"""


class EntpotError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(EntpotError):
    """Matrix shapes are inconsistent, or a composite dimension exceeds the cap."""


class TruncationError(EntpotError):
    """The requested Fock truncation cannot hold the state within tolerance."""

    def __init__(self, message, required_dim=None, deficit=None):
        super().__init__(message)
        self.required_dim = required_dim
        self.deficit = deficit


class ParameterError(EntpotError):
    """A scalar parameter is outside its admissible range."""


class NumericError(EntpotError):
    """A numerical routine failed to converge or produced an inconsistent result."""


class DegenerateStateError(EntpotError):
    """A state specification has (numerically) zero norm."""


class UnsupportedInputError(EntpotError):
    """The operation is only defined for a subset of inputs (e.g. pure states)."""


class SpecParseError(EntpotError):
    """A textual state spec failed to parse; carries the offset of the first error."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
