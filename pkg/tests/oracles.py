"""Independent reference computations used only by the tests.

None of these import from the package; each reaches its answer by a
different route than the code it checks.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def partitions_bruteforce(n: int) -> set[tuple[int, ...]]:
    """All partitions via compositions (2^(n-1) of them), sorted and deduplicated."""
    out = set()
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


# -- polynomials in x, y as {(i, j): coef} ---------------------------------------

def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def reduce_poly(p: dict, n: int, a: int) -> dict:
    """Rewrite with x^2 = 0 and y^n = a x y^(n-1) until nothing changes."""
    p = dict(p)
    while True:
        bad = next((k for k in p if k[0] >= 2 or k[1] >= n), None)
        if bad is None:
            return {k: v for k, v in p.items() if v}
        c = p.pop(bad)
        i, j = bad
        if i >= 2:
            continue
        # y^j = y^(j-n) * a x y^(n-1)
        key = (i + 1, j - 1)
        p[key] = p.get(key, 0) + a * c


def poly_pow(p: dict, k: int) -> dict:
    out = {(0, 0): 1}
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def graded_part(p: dict, deg: int) -> dict:
    return {k: v for k, v in p.items() if k[0] + k[1] == deg}


def product_space_chern_numbers(n: int) -> dict[tuple[int, ...], int]:
    """Chern numbers of CP^1 x CP^(n-1) from c = (1+x)^2 (1+y)^n, x^2 = y^n = 0."""
    one_x = {(0, 0): 1, (1, 0): 1}
    one_y = {(0, 0): 1, (0, 1): 1}
    c = reduce_poly(poly_mul(poly_pow(one_x, 2), poly_pow(one_y, n)), n, 0)
    out = {}
    for parts in partitions_bruteforce(n):
        prod = {(0, 0): 1}
        for i in parts:
            prod = reduce_poly(poly_mul(prod, graded_part(c, i)), n, 0)
        out[parts] = prod.get((1, n - 1), 0)
    return out


def closed_form_fraction(n: int, parts) -> int:
    """``2 prod C(n, i_s) * sum i_q / (n + 1 - i_q)`` evaluated in rationals."""
    from fractions import Fraction

    prod = 1
    for i in parts:
        prod *= math.comb(n, i)
    s = sum(Fraction(i, n + 1 - i) for i in parts)
    value = 2 * prod * s
    assert value.denominator == 1
    return int(value)


# -- integer matrices --------------------------------------------------------------

def det_leibniz(M) -> int:
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= M[i][p]
        total += term
    return total


def determinantal_divisors(M) -> list[int]:
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    m = len(M)
    n = len(M[0]) if m else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, det_leibniz([[M[r][c] for c in cols] for r in rows]))
        divisors.append(g)
    out = []
    for k in range(1, len(divisors)):
        if divisors[k] == 0:
            out.append(0)
        else:
            out.append(divisors[k] // divisors[k - 1])
    return out


def part_of_basis_by_minors(vectors, rank) -> bool:
    """r vectors extend to a Z-basis iff their r x r minors have gcd 1."""
    r = len(vectors)
    if r > rank:
        return False
    if r == 0:
        return True
    g = 0
    for rows in itertools.combinations(range(rank), r):
        g = math.gcd(g, det_leibniz([[v[i] for v in vectors] for i in rows]))
    return g == 1
