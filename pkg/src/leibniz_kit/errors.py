"""Exception hierarchy for leibniz_kit."""


class LeibnizKitError(Exception):
    """Base class for all library errors."""


class FieldMismatch(LeibnizKitError):
    pass


class DivisionByZero(LeibnizKitError, ZeroDivisionError):
    pass


class InfiniteField(LeibnizKitError):
    pass


class ZeroLambda(LeibnizKitError, ValueError):
    pass


class NonSquare(LeibnizKitError, ValueError):
    pass


class AmbientMismatch(LeibnizKitError, ValueError):
    pass


class AlgebraMismatch(LeibnizKitError, ValueError):
    pass


class NotLeibniz(LeibnizKitError, ValueError):
    """Raised by the validated constructor; carries the violating triples."""

    def __init__(self, violations, field=None):
        self.violations = violations
        self.field = field
        super().__init__(f"left Leibniz identity fails on {len(violations)} basis triple(s)")


class NotSubalgebra(LeibnizKitError, ValueError):
    pass


class NotInvariant(LeibnizKitError, ValueError):
    pass


class NotEndomorphism(LeibnizKitError, ValueError):
    pass


class NotExtraspecial(LeibnizKitError, ValueError):
    pass


class BadGenerator(LeibnizKitError, ValueError):
    pass


class DimensionMismatch(LeibnizKitError, ValueError):
    pass


class GuardExceeded(LeibnizKitError):
    pass


class NotSubset(LeibnizKitError, ValueError):
    pass


class Degenerate(LeibnizKitError, ValueError):
    pass


class NotAutomorphism(LeibnizKitError, ValueError):
    pass
