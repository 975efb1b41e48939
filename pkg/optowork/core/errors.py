class Error(Exception):
    r"""Base class of all :mod:`optowork` exceptions."""


class DomainError(Error, ValueError):
    r"""Input lies outside the domain of a formula."""


class MaxWorkUndefined(DomainError):
    r"""Maximum work bound is not defined for the given variances."""


class UnstableSystem(DomainError):
    r"""Drift matrix has an eigenvalue with non-negative real part."""


class SingularSystem(Error, RuntimeError):
    r"""Vectorized Lyapunov system is rank deficient."""


class NotPositiveDefinite(Error, ValueError):
    r"""Matrix is not symmetric positive definite."""


class PatternMismatch(Error, ValueError):
    r"""Two-mode covariance matrix is not in standard form."""


class IndexOutOfRange(Error, IndexError):
    r"""Mode index is out of range or repeated."""


class ConfigError(Error, ValueError):
    r"""Sweep configuration is invalid."""


class UnknownPreset(ConfigError, KeyError):
    r"""Figure preset is not known."""

    def __str__(self):  # noqa: D105
        # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class IoError(Error, OSError):
    r"""Reading or writing a file failed."""
