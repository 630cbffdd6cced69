"""The imaginary quadratic field Q(sqrt(-p)) for an odd prime p."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError, is_prime, jacobi, primes_below

# Rational brackets around pi (40 correct digits), for boundary comparisons.
_PI_LO = Fraction("3.141592653589793238462643383279502884197")
_PI_HI = Fraction("3.141592653589793238462643383279502884198")


class TwoSplitting(enum.Enum):
    RAMIFIED = "ramified"
    INERT = "inert"
    SPLIT = "split"


@dataclass(frozen=True)
class QuadField:
    p: int
    residue_class: int
    D: int
    two_splitting: TwoSplitting

    @property
    def minkowski_factor(self) -> int:
        """k such that the Minkowski bound is (k/pi) * sqrt(p)."""
        return 4 if self.p % 4 == 1 else 2

    @property
    def minkowski_bound(self) -> float:
        return self.minkowski_factor / math.pi * math.sqrt(self.p)

    def below_minkowski(self, q: int) -> bool:
        """Exact test of q < (k/pi) sqrt(p), i.e. q^2 pi^2 < k^2 p."""
        rhs = self.minkowski_factor**2 * self.p
        lhs = q * q * math.pi**2
        if lhs < rhs - 1:
            return True
        if lhs > rhs + 1:
            return False
        if q * q * _PI_HI**2 < rhs:
            return True
        if q * q * _PI_LO**2 >= rhs:
            return False
        raise ArithmeticError(f"cannot separate {q} from the Minkowski bound of p={self.p}")


def make_field(p: int) -> QuadField:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    r = p % 8
    if p % 4 == 1:
        D, two = -4 * p, TwoSplitting.RAMIFIED
    elif r == 3:
        D, two = -p, TwoSplitting.INERT
    else:
        D, two = -p, TwoSplitting.SPLIT
    return QuadField(p, r, D, two)


def split_odd_primes(K: QuadField, limit: float) -> list[int]:
    """Odd primes q < limit with (-p|q) = +1, ascending."""
    top = math.ceil(limit)
    return [q for q in primes_below(top) if q > 2 and q < limit and jacobi(-K.p, q) == 1]


def split_below_minkowski(K: QuadField) -> list[int]:
    """Odd split primes strictly below the Minkowski bound, compared exactly."""
    top = math.ceil(K.minkowski_bound) + 2
    return [q for q in primes_below(top) if q > 2 and K.below_minkowski(q) and jacobi(-K.p, q) == 1]
