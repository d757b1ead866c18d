"""Toric ideals of exponent matrices and their generator/shape analysis."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..errors import BudgetExceeded
from .binomials import DEFAULT_BUDGET, Binomial, Budget, GroebnerBasis, buchberger
from .lattice import lattice_kernel
from .orders import MonomialOrder

MAX_COLUMNS = 64
# Intermediate bases of the lattice ideal run well above the degree of the
# final toric basis, so saturation gets this multiple of the degree budget.
SATURATION_DEGREE_FACTOR = 3


def _check_size(matrix):
    if len(matrix.columns) > MAX_COLUMNS:
        raise BudgetExceeded(f"toric computations limited to {MAX_COLUMNS} variables, "
                             f"got {len(matrix.columns)}")


def lattice_binomials(matrix) -> list[Binomial]:
    return [Binomial.from_vector(v) for v in lattice_kernel(matrix)]


def _saturation_order(n, var) -> MonomialOrder:
    perm = tuple(i for i in range(n) if i != var) + (var,)
    return MonomialOrder.degrevlex(n, perm)


def _divide_out(b: Binomial, var: int):
    k = min(b.plus[var], b.minus[var])
    if not k:
        return b
    p, m = list(b.plus), list(b.minus)
    p[var] -= k
    m[var] -= k
    return Binomial(tuple(p), tuple(m))


def saturate(gens, n, variables, budget: Budget = DEFAULT_BUDGET, deadline=None):
    """``(gens) : (prod of variables)^inf`` for a homogeneous binomial ideal.

    One variable at a time: a degree-reverse-lexicographic basis with that
    variable cheapest, then every element divided by the largest power of the
    variable it is divisible by.
    """
    current = list(gens)
    if deadline is None:
        deadline = budget.deadline()
    for var in variables:
        gb = buchberger(current, _saturation_order(n, var), budget, deadline=deadline)
        current = [_divide_out(b, var) for b in gb.elements]
    return current


_cache: dict = {}


def toric_ideal(matrix, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the kernel of the monomial map of ``matrix``."""
    _check_size(matrix)
    n = len(matrix.columns)
    if order is None:
        order = MonomialOrder.degrevlex(n)
    if order.nvars != n:
        raise ValueError("order and matrix disagree on the number of variables")
    # the limits are part of the key so a tighter budget never sees a result it could not compute
    key = (matrix.entries, order, budget.max_degree, budget.max_pairs)
    if key in _cache:
        return _cache[key]
    deadline = budget.deadline()
    gens = toric_generators(matrix, budget, deadline)
    gb = buchberger(gens, order, budget, deadline=deadline)
    for b in gb.elements:
        if not b.check_toric(matrix):
            raise ArithmeticError("computed element is not in the toric ideal")
    _cache[key] = gb
    return gb


_gen_cache: dict = {}


def toric_generators(matrix, budget: Budget = DEFAULT_BUDGET, deadline=None) -> list[Binomial]:
    """Some generating set of the toric ideal (the saturated lattice ideal)."""
    key = (matrix.entries, budget.max_degree, budget.max_pairs)
    if key in _gen_cache:
        return list(_gen_cache[key])
    _check_size(matrix)
    n = len(matrix.columns)
    gens = lattice_binomials(matrix)
    if gens:
        loose = Budget(budget.max_degree * SATURATION_DEGREE_FACTOR if budget.max_degree else 0,
                       budget.max_pairs, budget.time_limit)
        gens = saturate(gens, n, range(n), loose, deadline)
    _gen_cache[key] = tuple(gens)
    return list(gens)


def clear_caches():
    _cache.clear()
    _gen_cache.clear()


# -- generator and shape analysis -------------------------------------------------

def fibers(matrix, j):
    """Degree-``j`` monomials grouped by their image, in first-seen order."""
    cols = matrix.column_vectors()
    zero = tuple(0 for _ in matrix.rows)
    out = {}
    for combo in combinations_with_replacement(range(len(cols)), j):
        img = zero
        for i in combo:
            img = tuple(a + b for a, b in zip(img, cols[i]))
        m = [0] * len(cols)
        for i in combo:
            m[i] += 1
        out.setdefault(img, []).append(tuple(m))
    return out


def _components_sharing_variable(monos):
    parent = list(range(len(monos)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    first = {}
    for k, m in enumerate(monos):
        for i, x in enumerate(m):
            if x:
                if i in first:
                    ra, rb = find(first[i]), find(k)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    first[i] = k
    return len({find(k) for k in range(len(monos))})


def betti0_in_degree(matrix, j) -> int:
    """``dim I_j - dim (R_1 I_{j-1})`` for the toric ideal of ``matrix``.

    Inside one fiber both spaces are spanned by differences of its monomials.
    ``R_1 I_{j-1}`` is spanned by the differences of monomials sharing a
    variable, so its dimension is ``|fiber| - components`` of the
    share-a-variable graph, while ``I_j`` has ``|fiber| - 1``.  The difference
    is the number of components minus one, summed over fibers.
    """
    total = 0
    for monos in fibers(matrix, j).values():
        if len(monos) > 1:
            total += _components_sharing_variable(monos) - 1
    return total


def minimal_generator_degrees(matrix, budget: Budget = DEFAULT_BUDGET) -> dict[int, int]:
    """Graded Betti numbers beta_{0,j}: minimal generators of the toric ideal by degree."""
    gb = toric_ideal(matrix, budget=budget)
    out = {}
    for j in range(1, gb.max_degree + 1):
        b = betti0_in_degree(matrix, j)
        if b:
            out[j] = b
    return out


@dataclass(frozen=True)
class ShapeReport:
    squarefree: bool          # every element a difference of squarefree monomials
    quadratic: bool           # every element of degree <= 2
    initial_squarefree: bool  # leading terms squarefree

    @property
    def koszul_by_quadratic_gb(self) -> bool:
        return self.quadratic

    def __iter__(self):
        return iter((self.squarefree, self.quadratic))


def is_squarefree_quadratic(gb: GroebnerBasis) -> ShapeReport:
    sq = all(max(b.plus, default=0) <= 1 and max(b.minus, default=0) <= 1 for b in gb.elements)
    init = all(max(b.plus, default=0) <= 1 for b in gb.elements)
    quad = all(b.degree <= 2 for b in gb.elements)
    return ShapeReport(sq, quad, init)


@dataclass(frozen=True)
class OrderTrial:
    name: str
    order: MonomialOrder
    max_degree: int
    non_squarefree: int
    size: int

    @property
    def success(self) -> bool:
        return self.max_degree <= 2 and self.non_squarefree == 0


@dataclass(frozen=True)
class OrderSearchResult:
    found: bool
    order: MonomialOrder | None
    gb: GroebnerBasis | None
    tried: tuple[OrderTrial, ...] = field(default=())

    @property
    def best(self) -> OrderTrial | None:
        if not self.tried:
            return None
        return min(self.tried, key=lambda t: (t.max_degree, t.non_squarefree, t.size))


def cut_weights(matrix) -> list[int]:
    """Cut cardinality of each column, read from the ``s[...]`` rows."""
    srows = [k for k, r in enumerate(matrix.rows) if r.startswith("s[")]
    return [sum(matrix.entries[k][j] for k in srows) for j in range(len(matrix.columns))]


def candidate_orders(matrix):
    """The search family: lex then degrevlex over four variable rankings."""
    n = len(matrix.columns)
    w = cut_weights(matrix)
    bit = list(range(n))
    card = sorted(range(n), key=lambda j: (w[j], j))
    perms = [("bitstring", bit), ("cut-size", card),
             ("bitstring-reversed", bit[::-1]), ("cut-size-reversed", card[::-1])]
    out = []
    for kind in ("lex", "degrevlex"):
        for name, perm in perms:
            out.append((f"{kind}/{name}", MonomialOrder(kind, tuple(perm))))
    return out


def _trial(name, order, matrix, budget):
    try:
        gb = toric_ideal(matrix, order, budget)
    except BudgetExceeded as exc:
        part = exc.partial
        md = part.max_degree if part is not None else -1
        return OrderTrial(name + " (budget)", order, max(md, budget.max_degree + 1), -1, 0), None
    nsq = sum(1 for b in gb.elements if max(b.plus + b.minus, default=0) > 1)
    return OrderTrial(name, order, gb.max_degree, nsq, len(gb)), gb


def _badness(trial):
    if trial.non_squarefree < 0:
        return (1, 0, 0)
    return (0, trial.max_degree > 2, trial.non_squarefree)


def order_search(matrix, budget: Budget = DEFAULT_BUDGET, local_steps: int = 1000,
                 seed: int = 0) -> OrderSearchResult:
    """First order whose reduced basis is squarefree and quadratic.

    The fixed candidate family is tried first.  If it fails, a seeded
    swap search starts from the best lexicographic candidate: two variables
    are exchanged and the swap is kept unless the basis gets worse (more
    elements of degree above two, then more non-squarefree elements).  The
    walk is deterministic for a given seed.
    """
    tried = []
    for name, order in candidate_orders(matrix):
        trial, gb = _trial(name, order, matrix, budget)
        tried.append(trial)
        if trial.success:
            return OrderSearchResult(True, order, gb, tuple(tried))
    lex_trials = [t for t in tried if t.order.kind == "lex"]
    if local_steps <= 0 or not lex_trials:
        return OrderSearchResult(False, None, None, tuple(tried))

    def score(order):
        t, gb = _trial("", order, matrix, budget)
        over = -1 if gb is None else sum(1 for b in gb.elements if b.degree > 2)
        return (over < 0, over, t.non_squarefree), gb

    start = min(lex_trials, key=_badness)
    perm = list(start.order.perm)
    best, gb = score(start.order)
    rng = random.Random(seed)
    n = len(perm)
    for step in range(1, local_steps + 1):
        a, b = rng.sample(range(n), 2)
        cand = perm[:]
        cand[a], cand[b] = cand[b], cand[a]
        order = MonomialOrder("lex", tuple(cand))
        sc, cgb = score(order)
        if sc <= best:
            perm, best, gb = cand, sc, cgb
            if best == (False, 0, 0):
                trial = OrderTrial(f"lex/swap-search(seed {seed}, step {step})", order,
                                   cgb.max_degree, 0, len(cgb))
                tried.append(trial)
                return OrderSearchResult(True, order, cgb, tuple(tried))
    order = MonomialOrder("lex", tuple(perm))
    trial, _ = _trial(f"lex/swap-search(seed {seed}, {local_steps} steps)", order, matrix, budget)
    tried.append(trial)
    return OrderSearchResult(False, None, None, tuple(tried))
