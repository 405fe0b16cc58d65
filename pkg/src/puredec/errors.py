"""Exception hierarchy.

Two families matter to callers: :class:`InputError` for malformed arguments
(bad sequences, bad files) and :class:`Rejection` for well-formed inputs that
are mathematically rejected (outside the cone, inconsistent facet data).
The command line maps them to exit codes 1 and 2 respectively.
"""


class PuredecError(Exception):
    pass


class InputError(PuredecError, ValueError):
    pass


class Rejection(PuredecError):
    pass


class NotStrictlyIncreasing(InputError):
    pass


class NotStrictlyDecreasing(InputError):
    pass


class ZeroColumnGap(Rejection):
    pass


class MismatchedSupport(Rejection):
    pass


class NotInCone(Rejection):
    pass


class WindowTooLarge(PuredecError):
    pass


class SupportOutsideWindow(InputError):
    pass


class InvalidFacet(InputError):
    pass


class InvalidPattern(InputError):
    pass


class InsufficientTableRange(InputError):
    pass


class TruncatedTable(Rejection):
    pass


class RangeTooSmall(InputError):
    pass


class TooManyParts(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
