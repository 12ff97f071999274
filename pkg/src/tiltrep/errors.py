"""Exception hierarchy for tiltrep."""


class TiltrepError(Exception):
    pass


class FieldMismatch(TiltrepError):
    """Operands live over different fields."""


class ShapeError(TiltrepError, ValueError):
    pass


class UnsupportedType(TiltrepError, ValueError):
    """Quiver or algebra parameters outside the supported list."""


class UnsupportedAlgebra(TiltrepError):
    """Operation requires a different kind of algebra (e.g. a path algebra)."""


class TiltingMismatch(TiltrepError):
    """Tilting data does not match the target quiver."""


class InternalInconsistency(TiltrepError, AssertionError):
    """A postcondition that should be impossible to violate failed."""
