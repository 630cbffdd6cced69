"""Positive definite binary quadratic forms: reduction, composition, class groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import DomainError, factor


@dataclass(frozen=True, order=True)
class QuadraticForm:
    """The form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.c <= 0 or self.discriminant >= 0:
            raise DomainError(f"{self.as_tuple()} is not positive definite")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if b < 0 and (-b == a or a == c):
            return False
        return True

    def inverse(self) -> QuadraticForm:
        return reduce(QuadraticForm(self.a, -self.b, self.c))

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise DomainError(f"{D} is not a negative discriminant")


def principal_form(D: int) -> QuadraticForm:
    _check_discriminant(D)
    b = D % 2
    return QuadraticForm(1, b, (b - D) // 4)


def reduce(f: QuadraticForm) -> QuadraticForm:
    """The unique reduced form equivalent to f."""
    a, b, c = f.a, f.b, f.c
    while True:
        # normalize: -a < b <= a
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QuadraticForm(a, b, c)


def reduced_forms(D: int) -> list[QuadraticForm]:
    """Primitive reduced forms of discriminant D, sorted by (a, b)."""
    _check_discriminant(D)
    out = []
    parity = D % 2
    for a in range(1, isqrt(-D // 3) + 1):
        four_a = 4 * a
        for b in range(parity, a + 1, 2):
            num = b * b - D
            if num % four_a:
                continue
            c = num // four_a
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            out.append(QuadraticForm(a, b, c))
            if 0 < b < a and a != c:
                out.append(QuadraticForm(a, -b, c))
    out.sort(key=lambda f: (f.a, f.b))
    return out


def class_number(D: int) -> int:
    """Number of classes of primitive positive definite forms of discriminant D."""
    return len(reduced_forms(D))


def is_fundamental(D: int) -> bool:
    _check_discriminant(D)
    if D % 4 == 1:
        return _squarefree(-D)
    m = D // 4
    return m % 4 in (2, 3) and _squarefree(-m)


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor(n).factors)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def compose(f: QuadraticForm, g: QuadraticForm) -> QuadraticForm:
    """Reduced representative of the Gauss composition of the classes of f and g."""
    D = f.discriminant
    if g.discriminant != D:
        raise DomainError(f"discriminants differ: {D} vs {g.discriminant}")
    if f.a > g.a:
        f, g = g, f
    a1, b1, _ = f.a, f.b, f.c
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - D) // (4 * a3)
    return reduce(QuadraticForm(a3, b3, c3))


def form_power(f: QuadraticForm, k: int) -> QuadraticForm:
    result = principal_form(f.discriminant)
    base = reduce(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def form_order(f: QuadraticForm) -> int:
    """Order of the class of the primitive form f in its class group."""
    if not f.is_primitive():
        raise DomainError(f"{f} is not primitive")
    identity = principal_form(f.discriminant)
    start = reduce(f)
    g, k = start, 1
    while g != identity:
        g = compose(g, start)
        k += 1
    return k


def invariant_factors_from_orders(orders: list[int]) -> list[int]:
    """Invariant factors d1 | d2 | ... of the finite abelian group whose
    element orders are given (one entry per element)."""
    h = len(orders)
    if h == 1:
        return [1]
    # For each prime l | h, |G[l^k]| = l^(sum_i min(e_i, k)) determines the
    # exponents e_i of the l-primary part.
    components: list[list[int]] = []
    for ell, total in factor(h).factors:
        counts = [0]
        k = 1
        while counts[-1] < total:
            size = sum(1 for o in orders if ell**k % o == 0)
            exp = 0
            while size > 1:
                if size % ell:
                    raise DomainError("orders do not come from an abelian group")
                size //= ell
                exp += 1
            counts.append(exp)
            k += 1
        # counts[k] - counts[k-1] = number of cyclic factors of order >= l^k
        at_least = [counts[k] - counts[k - 1] for k in range(1, len(counts))]
        exps = []
        for k, num in enumerate(at_least, start=1):
            above = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (num - above))
        components.append(sorted((ell**e for e in exps), reverse=True))
    width = max(len(c) for c in components)
    factors = [1] * width
    for comp in components:
        for i, q in enumerate(comp):
            factors[width - 1 - i] *= q
    return factors


@dataclass(frozen=True)
class ClassGroup:
    D: int
    reduced_forms: tuple[QuadraticForm, ...]
    invariant_factors: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.reduced_forms)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) == 1

    def label(self) -> str:
        return "x".join(map(str, self.invariant_factors))


def class_group(D: int) -> ClassGroup:
    forms = reduced_forms(D)
    orders = [form_order(f) for f in forms]
    return ClassGroup(D, tuple(forms), tuple(invariant_factors_from_orders(orders)))
