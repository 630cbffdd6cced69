"""Exact integer arithmetic: primality, factorization, length functions, Jacobi symbol."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

MAX_INPUT = 1 << 62

# Deterministic Miller-Rabin witnesses: the first 12 primes suffice below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return [i for i, flag in enumerate(sieve) if flag]


TRIAL_PRIMES = _small_primes(1 << 16)
_TRIAL_LIMIT_SQ = (1 << 16) ** 2


def _check_range(n: int) -> None:
    if not 1 <= n <= MAX_INPUT:
        raise DomainError(f"expected 1 <= n <= 2^62, got {n}")


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization (ascending primes)."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def big_omega(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def small_omega(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    def product(self) -> int:
        out = 1
        for q, e in self.factors:
            out *= q**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test for 1 <= n <= 2^62."""
    _check_range(n)
    if n < 2:
        return False
    for q in TRIAL_PRIMES[:25]:
        if n % q == 0:
            return n == q
    if n < 101 * 101:
        return True
    return _miller_rabin(n)


def _brent_rho(n: int) -> int:
    """Return a non-trivial factor of the odd composite n.

    The polynomial constant runs through c = 1, 2, 3, ... so results are
    reproducible; a run that collapses to gcd == n restarts with the next c.
    """
    c = 0
    while True:
        c += 1
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # backtrack one step at a time from the saved position
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _brent_rho(m)
        stack.extend((d, m // d))


def factor(n: int) -> FactoredInteger:
    """Prime factorization of 1 <= n <= 2^62."""
    _check_range(n)
    found: dict[int, int] = {}
    m = n
    for q in TRIAL_PRIMES:
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            found[q] = e
    if m > 1:
        if m < _TRIAL_LIMIT_SQ:
            found[m] = found.get(m, 0) + 1
        else:
            _split_large(m, found)
    return FactoredInteger(n, tuple(sorted(found.items())))


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity; 0 for n = 1."""
    return factor(n).big_omega


def small_omega(n: int) -> int:
    """Number of distinct prime factors of n; 0 for n = 1."""
    return factor(n).small_omega


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if k == 2:
        return isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n: int) -> bool:
    """True iff n = q^e for a prime q and e >= 1."""
    if n < 2:
        return False
    for q in TRIAL_PRIMES[:50]:
        if n % q == 0:
            while n % q == 0:
                n //= q
            return n == 1
    if is_prime(n):
        return True
    # no prime factor below 233, so any root q^e = n has e <= log_233(n)
    k = 2
    while 233**k <= n:
        r = integer_root(n, k)
        if r**k == n:
            return is_prime(r)
        k += 1
    return False


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a|m) for odd m >= 1."""
    if m < 1 or m % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def sqrt_mod_prime(a: int, q: int) -> int | None:
    """A square root of a modulo the odd prime q (Tonelli-Shanks), or None."""
    a %= q
    if a == 0:
        return 0
    if jacobi(a, q) != 1:
        return None
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while jacobi(z, q) != -1:
        z += 1
    x = pow(a, (s + 1) // 2, q)
    b = pow(a, s, q)
    g = pow(z, s, q)
    r = e
    while b != 1:
        t, i = b, 0
        while t != 1:
            t = t * t % q
            i += 1
        gs = pow(g, 1 << (r - i - 1), q)
        x = x * gs % q
        g = gs * gs % q
        b = b * g % q
        r = i
    return x


def primes_below(limit: int) -> list[int]:
    """All primes p < limit."""
    if limit <= 2:
        return []
    if limit <= 1 << 16:
        return [q for q in TRIAL_PRIMES if q < limit]
    return _small_primes(limit)
