"""Exception types shared across the package."""


class CrcError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(CrcError):
    """Evaluation of a rational function where its denominator vanishes."""


class DivisionByNonUnit(CrcError):
    """Truncated-series division by a series with zero constant term."""


class UnboundSymbol(CrcError):
    """Polynomial substitution is missing an assignment for a variable."""


class NonTerminatingReduction(CrcError):
    """Normal-form rewriting exceeded its step bound."""


class SingularMetric(CrcError):
    """A pairing matrix that should be invertible is not."""


class InconsistentPairing(CrcError):
    """No class in the untwisted sector realizes a required pairing."""


class OutOfTableRange(CrcError):
    """Invariant lookup for a curve class beyond the computed closure."""


class NotApplicable(CrcError):
    """Divisor reduction requested for a key it does not apply to."""


class InconsistentDerivation(CrcError):
    """Two derivation paths assign different values to the same invariant."""


class Underdetermined(CrcError):
    """An invariant is not reachable from the seeds within the given bounds."""


class UnderdeterminedDual(CrcError):
    """Pairing constraints do not pin down a unique dual class."""


class UnsupportedInstance(CrcError):
    """A consistency-equation variant outside the implemented range."""
