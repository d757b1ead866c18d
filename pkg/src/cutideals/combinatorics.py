"""Stirling and Eulerian numbers, the closed-form counts for cut ideals of
cycles and trees, and brute-force oracles for each.

Everything is exact integer arithmetic.  The ``brute_*`` functions enumerate
set partitions or permutations directly; they are independent of the
recurrences and only meant for small arguments.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

TABLE_LIMIT = 30


@lru_cache(maxsize=None)
def _stirling_row(n):
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """S(n, k): partitions of an n-set into k nonempty blocks (0 when k > n)."""
    if not (0 <= n <= TABLE_LIMIT) or k < 0:
        raise ValueError(f"argument out of range: n={n}, k={k}")
    if k > n:
        return 0
    return _stirling_row(n)[k]


def stirling2_k4_closed(n: int) -> int:
    """(4^n - 4*3^n + 6*2^n - 4) / 24, exact for n >= 1."""
    num = 4**n - 4 * 3**n + 6 * 2**n - 4
    if num % 24:
        raise ArithmeticError(f"closed form not integral at n={n}")
    return num // 24


@lru_cache(maxsize=None)
def _eulerian_row(n):
    # A(n, k) for k = 1..n, stored at index k-1
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = []
    for i in range(n):
        # A(n, i+1) = (n - i) A(n-1, i) + (i + 1) A(n-1, i+1)
        left = prev[i - 1] if 1 <= i <= n - 1 else 0
        right = prev[i] if i < n - 1 else 0
        row.append((n - i) * left + (i + 1) * right)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """A(n, k): permutations of n letters with k-1 descents (1 <= k <= n)."""
    if not (1 <= n <= TABLE_LIMIT and 1 <= k <= n):
        raise ValueError(f"argument out of range: n={n}, k={k}")
    return _eulerian_row(n)[k - 1]


def eulerian_row(n: int) -> list[int]:
    if not 1 <= n <= TABLE_LIMIT:
        raise ValueError(f"argument out of range: n={n}")
    return list(_eulerian_row(n))


def cycle_generator_count(cycle_length: int) -> int:
    """Number of minimal quadric generators of the cut ideal of a cycle."""
    if cycle_length < 3:
        raise ValueError("a cycle has length at least 3")
    return 3 * stirling2(cycle_length, 4)


def tree_generator_count(n_edges: int) -> int:
    """Number of minimal quadric generators of the cut ideal of a tree."""
    if n_edges < 1:
        raise ValueError("a tree here has at least one edge")
    return 2 * 4 ** (n_edges - 1) + 2 ** (n_edges - 1) - 3**n_edges


def claw_hilbert_degree2(n: int) -> int:
    """Degree-2 Hilbert function of the claw-tree ring: 3/2*3^n - 2^n + 1/2."""
    if n < 1:
        raise ValueError("need at least one leaf")
    value = Fraction(3, 2) * 3**n - 2**n + Fraction(1, 2)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form not integral at n={n}")
    return int(value)


def claw_hilbert_degree2_recursive(n: int) -> int:
    """Same value from h(1) = 3 and h(n) = h(n-1) + 3^n - 2^(n-1)."""
    if n < 1:
        raise ValueError("need at least one leaf")
    h = 3
    for m in range(2, n + 1):
        h += 3**m - 2 ** (m - 1)
    return h


def claw_generator_count(n: int) -> int:
    """C(2^n + 1, 2) - h(2): quadrics in the ideal of the claw with n leaves."""
    return comb(2**n + 1, 2) - claw_hilbert_degree2(n)


def tree_hilbert(n_edges: int, i: int) -> int:
    if n_edges < 1 or i < 0:
        raise ValueError("need n_edges >= 1 and i >= 0")
    return (i + 1) ** n_edges


# -- brute-force oracles ------------------------------------------------------------

def brute_set_partitions(n: int, k: int) -> int:
    """Count partitions of {1..n} into k blocks by restricted-growth strings."""
    if k > n:
        return 0
    count = 0

    def grow(pos, used):
        nonlocal count
        if pos == n:
            count += used == k
            return
        if used + (n - pos) < k:
            return
        for b in range(min(used + 1, k)):
            grow(pos + 1, max(used, b + 1))

    if n == 0:
        return int(k == 0)
    grow(0, 0)
    return count


def brute_eulerian_row(n: int) -> list[int]:
    """Descent counts over all permutations of n letters."""
    row = [0] * n
    for perm in permutations(range(n)):
        d = sum(perm[i] > perm[i + 1] for i in range(n - 1))
        row[d] += 1
    return row
