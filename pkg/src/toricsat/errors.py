"""Exception hierarchy shared by all toricsat modules.

Three families, matching the CLI exit-code contract: bad input (exit 1),
capability limits such as dimension or enumeration budget (exit 2), and
internal self-check failures that should never fire on valid input (exit 3).
"""


class InputError(ValueError):
    """Invalid user-supplied data."""


class EmptyGenerators(InputError):
    pass


class NonCoprime(InputError):
    """Generators of a numerical semigroup must have gcd 1."""


class GcdNotOne(InputError):
    """Exponent data does not describe a reduced branch."""


class ZeroGenerator(InputError):
    pass


class NegativeCoordinate(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class InvalidSpec(InputError):
    """Hypersurface exponent triple violates alpha,beta >= 1, N >= 2, gcd(beta,N)=1."""


class EvenExponent(InputError):
    pass


class BadExponent(InputError):
    """Requested witness target is not refutable by this arc family."""


class BadRange(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class UnsupportedError(Exception):
    """Valid input outside the implemented capability envelope."""


class UnsupportedDimension(UnsupportedError):
    pass


class ConeNotFull(UnsupportedError):
    """Hull complement is unbounded: some coordinate axis carries no generator."""


class BoxTooLarge(UnsupportedError):
    """Membership table would exceed the cell budget; rescale the query."""


class BudgetExceeded(UnsupportedError):
    pass


class NotClosed(RuntimeError):
    """A computed element set failed closure validation; unreachable on valid input."""


class SelfCheckFailed(RuntimeError):
    """A result violated one of its own declared invariants."""
