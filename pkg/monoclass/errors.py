from __future__ import annotations


class MonoclassError(RuntimeError):
    pass


class DimensionError(MonoclassError):
    """Shapes do not fit: non-square matrix, ambient mismatch, odd graph rows."""


class ArgumentError(MonoclassError):
    pass


class PreconditionError(MonoclassError):
    """The input is valid but the operation's hypotheses do not hold (e.g. not monotone)."""


class DomainError(MonoclassError):
    pass


class ConvergenceError(MonoclassError):
    pass


class InvariantError(MonoclassError):
    """An internal consistency identity failed; indicates a numerical regime problem."""


class InputError(MonoclassError):
    pass


class ConfigError(MonoclassError):
    pass
