"""Hilbert functions and series of toric rings.

Two independent routes are provided: direct enumeration of the affine
semigroup generated by the columns of an exponent matrix, and the rational
Hilbert series read off an initial ideal.  Agreement between them is the
main consistency check of the toric computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb, factorial

from .errors import BudgetExceeded

SEMIGROUP_BUDGET = 5_000_000


@dataclass(frozen=True)
class HilbertFunctionTable:
    values: tuple[int, ...]
    source: str  # "enumeration" or "series-expansion"


@dataclass(frozen=True)
class HilbertSeries:
    """``(h_0 + h_1 t + ... + h_s t^s) / (1 - t)^d`` in lowest terms."""

    numerator: tuple[int, ...]
    denominator_power: int

    @property
    def h_vector(self) -> tuple[int, ...]:
        return self.numerator

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator) - 1


@dataclass(frozen=True)
class RegularityReport:
    reg_ring: int
    reg_variety: int
    bound_e_plus_1: int
    within_bound: bool


# -- semigroup enumeration --------------------------------------------------------

def semigroup_hilbert(matrix, d: int, budget: int = SEMIGROUP_BUDGET) -> int:
    """Number of distinct sums of ``d`` columns (with repetition)."""
    return len(_semigroup_level(matrix, d, budget))


def _semigroup_level(matrix, d, budget):
    cols = sorted(set(matrix.column_vectors()))
    level = {tuple(0 for _ in matrix.rows)}
    for _ in range(d):
        nxt = set()
        for v in level:
            for c in cols:
                nxt.add(tuple(a + b for a, b in zip(v, c)))
            if len(nxt) > budget:
                raise BudgetExceeded(f"semigroup enumeration exceeded {budget} points")
        level = nxt
    return level


def semigroup_table(matrix, window: int, budget: int = SEMIGROUP_BUDGET) -> HilbertFunctionTable:
    cols = sorted(set(matrix.column_vectors()))
    level = {tuple(0 for _ in matrix.rows)}
    values = [1]
    for _ in range(window):
        level = {tuple(a + b for a, b in zip(v, c)) for v in level for c in cols}
        if len(level) > budget:
            raise BudgetExceeded(f"semigroup enumeration exceeded {budget} points")
        values.append(len(level))
    return HilbertFunctionTable(tuple(values), "enumeration")


# -- series from a monomial ideal ----------------------------------------------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _support(g):
    return frozenset(i for i, x in enumerate(g) if x)


def _numerator(gens, memo):
    """K-polynomial of S/I w.r.t. ``(1 - t)^nvars``; ``gens`` minimal, as a tuple."""
    if not gens:
        return [1]
    if gens in memo:
        return memo[gens]
    # split into groups sharing no variables: numerators multiply
    groups = []
    for g in gens:
        s = _support(g)
        merged = [(s, [g])]
        rest = []
        for sup, members in groups:
            if sup & s:
                merged[0] = (merged[0][0] | sup, merged[0][1] + members)
            else:
                rest.append((sup, members))
        groups = rest + merged
    if len(groups) > 1:
        out = [1]
        for _, members in sorted(groups, key=lambda t: min(t[1])):
            out = _poly_mul(out, _numerator(tuple(sorted(members)), memo))
        memo[gens] = out
        return out
    if len(gens) == 1:
        out = [1] + [0] * (sum(gens[0]) - 1) + [-1]
        memo[gens] = out
        return out
    # pivot on the variable occurring in the most generators
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    x = max(range(n), key=lambda i: (counts[i], -i))
    unit = tuple(int(i == x) for i in range(n))
    plus = tuple(sorted(_minimalize([g for g in gens if not g[x]] + [unit])))
    colon = tuple(sorted(_minimalize(
        [tuple(v - 1 if (i == x and v) else v for i, v in enumerate(g)) for g in gens])))
    out = _poly_add(_numerator(plus, memo), [0] + _numerator(colon, memo))
    out = _trim(out)
    memo[gens] = out
    return out


def hilbert_series_from_initial(leads, num_vars: int) -> HilbertSeries:
    """Hilbert series of ``S / (leads)`` with ``S`` a polynomial ring in ``num_vars`` variables."""
    gens = tuple(sorted(_minimalize([tuple(g) for g in leads])))
    if any(sum(g) == 0 for g in gens):
        return HilbertSeries((0,), 0)
    num = _trim(_numerator(gens, {}))
    d = num_vars
    while d > 0 and sum(num) == 0:
        # synthetic division by (1 - t)
        q, acc = [], 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = _trim(q)
        d -= 1
    return HilbertSeries(tuple(num), d)


# -- evaluation --------------------------------------------------------------------

def hilbert_function_value(series: HilbertSeries, j: int) -> int:
    """Coefficient of ``t^j`` in the expanded series."""
    d = series.denominator_power
    if d == 0:
        return series.numerator[j] if j < len(series.numerator) else 0
    return sum(h * comb(j - k + d - 1, d - 1) for k, h in enumerate(series.numerator) if k <= j)


def series_table(series: HilbertSeries, window: int) -> HilbertFunctionTable:
    return HilbertFunctionTable(tuple(hilbert_function_value(series, j) for j in range(window + 1)),
                                "series-expansion")


def _binomial_poly(x: int, r: int) -> int:
    """``C(x + r, r)`` evaluated as a polynomial in ``x`` (valid for negative ``x``)."""
    num = 1
    for i in range(1, r + 1):
        num *= x + i
    return num // factorial(r)


def hilbert_polynomial_value(series: HilbertSeries, j: int) -> int:
    d = series.denominator_power
    if d == 0:
        return 0
    return sum(h * _binomial_poly(j - k, d - 1) for k, h in enumerate(series.numerator))


def default_window(series: HilbertSeries) -> int:
    return max(4, series.numerator_degree + 2)


def is_hilbertian(matrix, series: HilbertSeries, window: int | None = None,
                  budget: int = SEMIGROUP_BUDGET) -> bool:
    """Hilbert function (by enumeration) equals the Hilbert polynomial in degrees 0..window."""
    if window is None:
        window = default_window(series)
    table = semigroup_table(matrix, window, budget)
    return all(table.values[j] == hilbert_polynomial_value(series, j) for j in range(window + 1))


def regularity(series: HilbertSeries, edges: int) -> RegularityReport:
    """Regularity read off the numerator degree; meaningful for Cohen-Macaulay rings."""
    s = series.numerator_degree
    return RegularityReport(s, s + 1, edges + 1, s + 1 <= edges + 1)


def degree_from_series(series: HilbertSeries) -> int:
    return sum(series.numerator)


def h_vector_symmetric(series: HilbertSeries) -> bool:
    h = series.numerator
    return all(h[i] == h[len(h) - 1 - i] for i in range(len(h)))


def standard_monomial_count(leads, num_vars: int, j: int) -> int:
    """Degree-``j`` monomials divisible by no element of ``leads`` (brute force)."""
    leads = [tuple(g) for g in leads]
    count = 0
    for combo in combinations_with_replacement(range(num_vars), j):
        m = [0] * num_vars
        for i in combo:
            m[i] += 1
        if not any(all(a <= b for a, b in zip(g, m)) for g in leads):
            count += 1
    return count


def format_report(items) -> str:
    """``key = value`` lines in the given order; booleans lower-case, sequences comma-joined."""
    lines = []
    for key, value in items:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"
