"""Ono invariant of Q(sqrt(-p)) for primes p = 7 (mod 8), and the Sasaki inequality."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .arith import DomainError, is_prime, primes_below, sqrt_mod_prime
from .quadform import class_number

# Values ((2n+1)^2 + p)/4 must fit in int64.
MAX_P = 1 << 33
DEFAULT_CHUNK = 1 << 15


@dataclass(frozen=True)
class OnoResult:
    p: int
    d: int
    argmax_n: int
    h: int
    complete: bool = True


def _check(p: int) -> None:
    if p % 8 != 7 or p < 7 or not is_prime(p):
        raise DomainError(f"Ono invariant is defined here only for primes p = 7 mod 8, got {p}")
    if p >= MAX_P:
        raise DomainError(f"p={p} too large for the int64 sieve")


def ono_terms(p: int) -> int:
    """Number of n in the range 0 <= n <= (p-7)/4."""
    return (p - 7) // 4 + 1


class _OmegaSieve:
    """Computes Omega(n^2 + n + k), k = (p+1)/4, over blocks of consecutive n."""

    def __init__(self, p: int) -> None:
        self.k = (p + 1) // 4
        top = ono_terms(p) - 1
        max_value = top * top + top + self.k
        self.roots: list[tuple[int, int, int]] = []
        for q in primes_below(isqrt(max_value) + 1):
            if q == 2:
                continue
            s = sqrt_mod_prime(-p, q)
            if s is None:
                continue
            inv2 = (q + 1) // 2
            self.roots.append((q, (s - 1) * inv2 % q, (-s - 1) * inv2 % q))

    def block(self, n0: int, n1: int) -> np.ndarray:
        n = np.arange(n0, n1, dtype=np.int64)
        vals = n * n + n + self.k
        # every value is even: strip the power of two in one step
        twos = np.log2(vals & -vals).astype(np.int64)
        counts = twos.copy()
        vals >>= twos
        size = n1 - n0
        for q, r1, r2 in self.roots:
            for r in (r1, r2):
                start = (r - n0) % q
                if start >= size:
                    continue
                v = vals[start::q]
                c = counts[start::q]
                v //= q
                c += 1
                more = np.flatnonzero(v % q == 0)
                while more.size:
                    v[more] //= q
                    c[more] += 1
                    more = more[v[more] % q == 0]
        counts += vals > 1
        return counts


def ono_omegas(p: int) -> np.ndarray:
    """Omega(((2n+1)^2 + p)/4) for every n in [0, (p-7)/4]."""
    _check(p)
    sieve = _OmegaSieve(p)
    total = ono_terms(p)
    return np.concatenate(
        [sieve.block(n0, min(n0 + DEFAULT_CHUNK, total)) for n0 in range(0, total, DEFAULT_CHUNK)]
    )


def ono_invariant(p: int, stop_at: int | None = None, chunk: int = DEFAULT_CHUNK) -> OnoResult:
    """The Ono invariant d with its smallest maximizing n.

    With ``stop_at`` set, enumeration halts after the first chunk in which
    d >= stop_at; the result is then marked incomplete unless the range was
    exhausted anyway.
    """
    _check(p)
    h = class_number(-p)
    sieve = _OmegaSieve(p)
    total = ono_terms(p)
    best, best_n = -1, 0
    n0 = 0
    while n0 < total:
        n1 = min(n0 + chunk, total)
        counts = sieve.block(n0, n1)
        i = int(np.argmax(counts))
        if counts[i] > best:
            best, best_n = int(counts[i]), n0 + i
        n0 = n1
        if stop_at is not None and best >= stop_at:
            break
    return OnoResult(p, best, best_n, h, complete=n0 >= total)


def sasaki_check(p: int) -> bool:
    """True iff the Ono invariant does not exceed the class number h(-p)."""
    r = ono_invariant(p)
    return r.d <= r.h
