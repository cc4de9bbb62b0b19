"""Exception types raised by the library."""


class SiegelError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatch(SiegelError, ValueError):
    """Operands have incompatible shapes."""


class NotHermitian(SiegelError, ValueError):
    """Matrix fails the Hermitian precondition."""


class NotSymmetric(SiegelError, ValueError):
    """Matrix fails the (plain-transpose) symmetry precondition."""


class NotUnitary(SiegelError, ValueError):
    """Matrix fails the unitarity precondition."""


class EigFailure(SiegelError, RuntimeError):
    """The eigenvalue decomposition did not converge."""


class Singular(SiegelError, ValueError):
    """A matrix that must be inverted is numerically singular."""


class DenominatorSingular(Singular):
    """The Moebius denominator block is numerically singular.

    Signals either an input that is not actually in the group x disc
    domain, or numerical breakdown near the disc boundary.
    """


class SpectrumAtOne(SiegelError, ValueError):
    """Operator norm too close to 1 for the inverse hyperbolic scaling."""


class UnknownSuite(SiegelError, ValueError):
    """Requested verification suite does not exist."""


class ConfigInvalid(SiegelError, ValueError):
    """Suite configuration violates its invariants."""
