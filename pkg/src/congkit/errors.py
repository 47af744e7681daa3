"""Exception hierarchy. Every error the library raises derives from CongkitError."""


class CongkitError(Exception):
    pass


class InputError(CongkitError):
    """Malformed or invalid user input (CLI exit code 2)."""


class InvalidSize(InputError):
    pass


class NotAssociative(InputError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"not associative at (i, j, k) = {self.triple}")


class NotACongruence(InputError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not a congruence, witness (x, y, z, side) = {witness}")


class NotAnEquivalence(InputError):
    def __init__(self, axiom, pair):
        self.axiom = axiom
        self.pair = pair
        super().__init__(f"relation is not {axiom} at {pair}")


class CarrierMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class FieldMismatch(InputError):
    pass


class AlgebraMismatch(InputError):
    pass


class GuardExceeded(CongkitError):
    """An exhaustive enumeration would exceed its configured bound (CLI exit code 3)."""

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds guard {bound}")


class InternalInvariant(CongkitError):
    """A mathematical invariant that must always hold was violated; indicates a bug."""
