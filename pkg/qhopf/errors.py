# qhopf/errors.py: exception types raised across the package.
#
# Verification failures carry the full report dict so callers (CLI, server)
# can print the witnesses instead of a bare message.


class QHopfError(Exception):
    """Base class for every error raised by qhopf."""


class ScalarError(QHopfError, ArithmeticError):
    pass


class ScalarZeroDivision(ScalarError, ZeroDivisionError):
    pass


class OrderMismatchError(ScalarError):
    """Two non-rational scalars live in different cyclotomic fields."""


class GroupError(QHopfError, ValueError):
    pass


class CocycleError(QHopfError, ValueError):
    pass


class ShapeError(QHopfError, ValueError):
    """Leg counts or leg spaces do not line up."""


class SingularMapError(QHopfError, ArithmeticError):
    pass


class FormatError(QHopfError, ValueError):
    """Malformed JSON dump or command-line input."""


class VerificationError(QHopfError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstructionError(VerificationError):
    pass


class MorphismError(VerificationError):
    pass


class BosonisationError(QHopfError):
    pass
