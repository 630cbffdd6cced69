"""Primes p with omega(p + x^2) <= 2 for every odd x with x^2 < p.

Survivors are found by a sharded range search; each survivor carries its
witness factorizations, class group data and the structural checks that
hold for its residue class mod 8.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field, replace
from math import isqrt

import numpy as np

from .arith import (
    DomainError,
    FactoredInteger,
    big_omega,
    factor,
    is_prime,
    is_prime_power,
)
from .field import make_field, split_below_minkowski, split_odd_primes
from .ono import ono_invariant
from .quadform import class_group

# Survivor lists by residue class mod 8, as stated for Theorem 1.1.
EXPECTED_SURVIVORS: dict[int, tuple[int, ...]] = {
    5: (5, 13, 37),
    1: (17, 73, 97, 193),
    3: (3, 11, 19, 43, 67, 163),
    7: (7, 23, 31, 47, 79, 103, 127, 151, 223, 463, 487, 823, 1087, 1423),
}

MAX_SEARCH = 1 << 40
DEFAULT_BLOCK = 1 << 16


@dataclass(frozen=True)
class WitnessEntry:
    x: int
    value: int
    factorization: FactoredInteger

    @property
    def omega(self) -> int:
        return self.factorization.small_omega


@dataclass(frozen=True)
class SurvivorRecord:
    p: int
    residue_class: int
    witnesses: tuple[WitnessEntry, ...]
    h: int
    invariant_factors: tuple[int, ...]
    ono_d: int | None = None
    # (x, t) with p + x^2 = 8t^2, or (x, y) with p + x^2 = 2y^2
    witness: tuple[int, int] | None = None
    # odd primes q < sqrt(p) with (-p|q) = 1
    split_below_sqrt: tuple[int, ...] = ()
    case_checks: dict[str, bool] = dc_field(default_factory=dict)
    exceptional: bool = False

    @property
    def case_check(self) -> bool:
        return bool(self.case_checks) and all(self.case_checks.values())

    @property
    def group_label(self) -> str:
        return "x".join(map(str, self.invariant_factors))


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def _omega_at_most_two(n: int) -> bool:
    # n = p + x^2 is even, so 2 already accounts for one prime
    odd = n >> ((n & -n).bit_length() - 1)
    return odd == 1 or is_prime_power(odd)


def first_failing_x(p: int) -> int | None:
    """Smallest odd x with x^2 < p and omega(p + x^2) > 2, or None."""
    _require_odd_prime(p)
    x = 1
    while x * x < p:
        if not _omega_at_most_two(p + x * x):
            return x
        x += 2
    return None


def witness_entry(p: int, x: int) -> WitnessEntry:
    value = p + x * x
    return WitnessEntry(x, value, factor(value))


def first_failure(p: int) -> WitnessEntry | None:
    """The failing witness that rejects p, for diagnostics."""
    x = first_failing_x(p)
    return None if x is None else witness_entry(p, x)


def witness_8t2(p: int) -> tuple[int, int] | None:
    """Smallest odd x with x^2 < p and p + x^2 = 8t^2, as (x, t)."""
    if p % 8 != 7:
        raise DomainError(f"p={p} is not 7 mod 8")
    x = 1
    while x * x < p:
        q, r = divmod(p + x * x, 8)
        if r == 0:
            t = isqrt(q)
            if t * t == q:
                return x, t
        x += 2
    return None


def witness_2y2(p: int) -> tuple[int, int] | None:
    """Smallest odd x with x^2 < p and p + x^2 = 2y^2, as (x, y)."""
    if p % 8 != 1:
        raise DomainError(f"p={p} is not 1 mod 8")
    x = 1
    while x * x < p:
        half = (p + x * x) // 2
        y = isqrt(half)
        if y * y == half:
            return x, y
        x += 2
    return None


def _is_twice_prime(w: WitnessEntry) -> bool:
    f = w.factorization.factors
    return len(f) == 2 and f[0] == (2, 1) and f[1][1] == 1


def _is_twice_prime_or_prime_square(w: WitnessEntry) -> bool:
    f = w.factorization.factors
    return len(f) == 2 and f[0] == (2, 1) and f[1][1] in (1, 2)


def _require_class(rec: SurvivorRecord, r: int) -> None:
    if rec.residue_class != r:
        raise DomainError(f"p={rec.p} is in class {rec.residue_class} mod 8, not {r}")


def _components_5(rec: SurvivorRecord) -> dict[str, bool]:
    return {
        "values_twice_prime": all(map(_is_twice_prime, rec.witnesses)),
        "h_is_2": rec.h == 2,
    }


def _components_1(rec: SurvivorRecord) -> dict[str, bool]:
    return {
        "values_twice_prime_or_square": all(map(_is_twice_prime_or_prime_square, rec.witnesses)),
        "group_cyclic_4": rec.invariant_factors == (4,),
        "witness_2y2": witness_2y2(rec.p) is not None,
    }


def _components_3(rec: SurvivorRecord) -> dict[str, bool]:
    return {
        "no_split_below_minkowski": not split_below_minkowski(make_field(rec.p)),
        "h_is_1": rec.h == 1,
    }


def _components_7(rec: SurvivorRecord) -> dict[str, bool]:
    return {
        "ono_equals_h": rec.ono_d == rec.h,
        "witness_8t2": witness_8t2(rec.p) is not None,
    }


_COMPONENTS = {5: _components_5, 1: _components_1, 3: _components_3, 7: _components_7}


def check_case_5mod8(rec: SurvivorRecord) -> bool:
    _require_class(rec, 5)
    return all(_components_5(rec).values())


def check_case_1mod8(rec: SurvivorRecord) -> bool:
    _require_class(rec, 1)
    return all(_components_1(rec).values())


def check_case_3mod8(rec: SurvivorRecord) -> bool:
    _require_class(rec, 3)
    return all(_components_3(rec).values())


def check_case_7mod8(rec: SurvivorRecord) -> bool:
    _require_class(rec, 7)
    return all(_components_7(rec).values())


def build_record(p: int) -> SurvivorRecord:
    """Fully populated record for a prime already known to survive."""
    K = make_field(p)
    x_max = isqrt(p - 1)
    witnesses = tuple(witness_entry(p, x) for x in range(1, x_max + 1, 2))
    group = class_group(K.D)
    r = p % 8
    ono_d = ono_invariant(p).d if r == 7 else None
    if r == 7:
        wit = witness_8t2(p)
    elif r == 1:
        wit = witness_2y2(p)
    else:
        wit = None
    split = tuple(split_odd_primes(K, math.sqrt(p))) if p % 4 == 1 else ()
    rec = SurvivorRecord(
        p=p,
        residue_class=r,
        witnesses=witnesses,
        h=group.h,
        invariant_factors=group.invariant_factors,
        ono_d=ono_d,
        witness=wit,
        split_below_sqrt=split,
        exceptional=r == 7 and p not in EXPECTED_SURVIVORS[7],
    )
    return replace(rec, case_checks=_COMPONENTS[r](rec))


def survivor_predicate(p: int) -> SurvivorRecord | None:
    """Record for p if omega(p + x^2) <= 2 for all odd x with x^2 < p, else None.

    Use :func:`first_failure` to see why a prime was rejected.
    """
    if first_failing_x(p) is not None:
        return None
    return build_record(p)


def primes_in_range(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi] by a segmented sieve."""
    lo = max(lo, 2)
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    root = isqrt(hi)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for i in range(2, isqrt(root) + 1):
        if base[i]:
            base[i * i :: i] = False
    seg = np.ones(hi - lo + 1, dtype=bool)
    for q in np.flatnonzero(base).tolist():
        start = max(q * q, -(-lo // q) * q)
        seg[start - lo :: q] = False
    return np.flatnonzero(seg).astype(np.int64) + lo


def _search_block(bounds: tuple[int, int]) -> list[SurvivorRecord]:
    lo, hi = bounds
    out = []
    for p in primes_in_range(max(lo, 3), hi).tolist():
        if first_failing_x(p) is None:
            out.append(build_record(p))
    return out


def _blocks(lo: int, hi: int, width: int) -> list[tuple[int, int]]:
    return [(a, min(a + width - 1, hi)) for a in range(lo, hi + 1, width)]


def search_range(lo: int, hi: int, jobs: int = 1, block: int = DEFAULT_BLOCK) -> list[SurvivorRecord]:
    """All survivors p in [lo, hi], ascending.

    The range is cut into fixed-width blocks; with jobs > 1 the blocks are
    handed to a process pool and merged back in block order.
    """
    if lo < 2 or hi > MAX_SEARCH:
        raise DomainError(f"range must satisfy 2 <= lo <= hi <= 2^40, got [{lo}, {hi}]")
    if hi < lo:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if jobs < 1 or block < 1:
        raise DomainError("jobs and block must be positive")
    blocks = _blocks(lo, hi, block)
    if jobs == 1 or len(blocks) == 1:
        parts = map(_search_block, blocks)
        return [rec for part in parts for rec in part]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_search_block, blocks)
        return [rec for part in parts for rec in part]


def even_length_partition(n: int) -> tuple[int, int]:
    """Smallest a with a + b = n, a <= b and Omega(ab) even."""
    if n <= 3:
        raise DomainError(f"n must exceed 3, got {n}")
    for a in range(1, n // 2 + 1):
        b = n - a
        if big_omega(a * b) % 2 == 0:
            return a, b
    raise ArithmeticError(f"no even-length partition of {n}")
