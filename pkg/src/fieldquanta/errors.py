"""Exception hierarchy shared by all fieldquanta modules."""


class FieldQuantaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FieldQuantaError):
    """Malformed numeric input: non-finite entries, bad shapes, bad arguments."""


class NoPositiveSolution(FieldQuantaError):
    """The invariant-metric solve found no positive-definite solution.

    Signals a non-compact group action, which the classification refuses.
    """


class IrreducibilityViolated(FieldQuantaError):
    """An operation requiring a real-irreducible representation got a reducible one."""


class NotSecretlyComplex(FieldQuantaError):
    """The supplied complex structure fails its invariants against the representation."""


class NeitherCommutesNorAnticommutes(FieldQuantaError):
    """A discrete candidate neither commutes nor anticommutes with J.

    For genuine symmetries of an irreducible action this cannot happen, so it
    signals an invalid candidate or a violated irreducibility assumption.
    """


class DegenerateQuartic(FieldQuantaError):
    """alpha = 0 requested with strict vacuum classification: flat directions at the origin."""


class NotAMinimum(FieldQuantaError):
    """Hessian requested at a point that is not a local minimum of the potential."""


class ZeroModeSingular(FieldQuantaError):
    """Cauchy data has content in a zero-frequency lattice mode that must be excluded."""


class DimensionMismatch(FieldQuantaError):
    """Lattice or internal dimensions of two states do not match."""


class UnknownName(FieldQuantaError):
    """Requested builtin theory name is not in the catalog."""


class ParseError(FieldQuantaError):
    """Spec document is structurally malformed (shapes, types, missing keys)."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ValidationError(FieldQuantaError):
    """Spec document parsed but violates semantic invariants.

    Carries the full list of violations, not just the first one found.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InconsistencyError(FieldQuantaError):
    """Cross-module consistency check disagreed. Should never fire; bug trap."""
