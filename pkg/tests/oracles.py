"""Brute-force reference computations used by the tests.

Nothing here calls into the reduction or composition code under test.
"""

from itertools import product
from math import gcd


def brute_reduced_forms(D):
    """Primitive reduced forms of discriminant D by plain triple enumeration."""
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a, a + 1):
            for c in range(a, (b * b - D) // 4 + 1):
                if b * b - 4 * a * c != D:
                    continue
                if b < 0 and (-b == a or a == c):
                    continue
                if gcd(gcd(a, b), c) == 1:
                    out.append((a, b, c))
        a += 1
    return sorted(out)


def brute_class_number(D):
    return len(brute_reduced_forms(D))


def transform(f, m):
    """Image of the form f under the substitution (x, y) -> (al x + be y, ga x + de y)."""
    a, b, c = f
    al, be, ga, de = m
    return (
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def sl2_matrices(bound):
    r = range(-bound, bound + 1)
    return [m for m in product(r, r, r, r) if m[0] * m[3] - m[1] * m[2] == 1]


def is_reduced(f):
    a, b, c = f
    return abs(b) <= a <= c and not (b < 0 and (-b == a or a == c))


def reduced_images(f, bound=4):
    return {g for g in map(lambda m: transform(f, m), sl2_matrices(bound)) if is_reduced(g)}


def dirichlet_compose(f, g, bound=3):
    """A (non-reduced) form in the product class, via united forms found by search."""
    D = f[1] ** 2 - 4 * f[0] * f[2]
    a1, b1, _ = f
    for m in sl2_matrices(bound):
        a2, b2, _ = transform(g, m)
        if a2 <= 0 or gcd(gcd(a1, a2), (b1 + b2) // 2) != 1:
            continue
        A = a1 * a2
        for B in range(2 * A):
            if (B - b1) % (2 * a1) == 0 and (B - b2) % (2 * a2) == 0 and (B * B - D) % (4 * A) == 0:
                return (A, B, (B * B - D) // (4 * A))
    raise AssertionError(f"no united representative found for {f}, {g}")
