"""Exception hierarchy.

Every domain error carries the name of the module that raised it and, where
one exists, a concrete witness (a value that demonstrates the failure).
"""


class LforgeError(Exception):
    module = "lforge"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_dict(self):
        out = {"error": type(self).__name__, "module": self.module, "message": str(self)}
        if self.witness is not None:
            out["witness"] = repr(self.witness)
        return out


class InexactDivisionError(LforgeError):
    module = "exact_algebra"


class NonUnitError(LforgeError):
    module = "exact_algebra"


class NonSymmetricError(LforgeError):
    module = "symmetric_universal"


class FeasibilityError(LforgeError):
    """A request beyond a configured resource limit."""

    module = "symmetric_universal"


class NonEnumerableError(LforgeError):
    module = "monoid_core"


class NotMonicError(LforgeError):
    module = "f1_closure"


class UnstableGeneratorError(LforgeError):
    module = "f1_closure"


class IntegralityError(LforgeError):
    """A Witt component that should be integral was not. Never expected to fire."""

    module = "witt_core"


class TruncationError(LforgeError):
    module = "witt_core"


class EnumerationError(LforgeError):
    module = "f1_modules"


class ZetaDomainError(LforgeError):
    module = "zeta_engine"


class ParseError(LforgeError):
    module = "cli"
