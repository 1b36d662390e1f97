"""Exception taxonomy.

Every error carries a stable ``code`` which the command-line tool uses as its
exit status.  Codes below 64 are reserved for search outcomes.
"""


class RGDError(Exception):
    code = 65


class FormatError(RGDError, ValueError):
    """Malformed graph6, edge-list, design, base-block or GDD input."""

    code = 65


class GraphError(RGDError, ValueError):
    """Unknown generator or parameters out of range."""

    code = 66


class NotRegular(RGDError, ValueError):
    code = 67


class GirthTooSmall(RGDError, ValueError):
    code = 68


class DimensionMismatch(RGDError, ValueError):
    code = 69


class RecoveryFailed(RGDError):
    code = 70


class DuplicateBlock(RGDError):
    code = 71


class UnknownTable(RGDError, KeyError):
    code = 72

    def __str__(self):
        return Exception.__str__(self)


class SearchExhausted(RGDError):
    code = 73


class Unsupported(RGDError):
    code = 74


class PreconditionViolated(RGDError, ValueError):
    code = 75


class GenerationFailed(RGDError):
    code = 76


class GddError(RGDError, ValueError):
    """Invalid GDD input, or a Wilson fill-in whose ingredients do not fit."""

    code = 77


class NoDesignExists(RGDError):
    """Raised by constructors asked for an order with a known refutation."""

    code = 2


class VerificationFailed(RGDError):
    """A design or GDD was checked and found invalid."""

    code = 78


class UsageError(RGDError):
    code = 64
