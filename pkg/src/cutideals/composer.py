"""Cut ideals of disjoint unions built from the ideal of the 0-sum.

For graphs ``g1`` and ``g2`` with chosen vertices ``x`` in ``g1`` and ``y`` in
``g2``, the partitions of the disjoint union split into ``P1`` (``x`` and ``y``
on the same side) and ``P2`` (opposite sides).  Flipping the sides of every
``g2`` vertex swaps the two classes without changing the cut, so the two
columns of the exponent matrix agree and ``q_p - q_eps(p)`` lies in the ideal.
Gluing ``x`` to ``y`` gives the 0-sum ``G0``, whose partitions embed onto
``P1``.  The union's ideal is generated by the embedded ideal of ``G0`` and
those linear forms; this module builds that generating set and checks it
against the directly computed toric ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cuts import ExponentMatrix, VertexPartition, cut_exponent_matrix, cut_set, enumerate_partitions
from .errors import BudgetExceeded
from .graph import Graph, clique_sum, disjoint_union
from .hilbert import HilbertSeries, h_vector_symmetric, hilbert_series_from_initial
from .toric.binomials import DEFAULT_BUDGET, Binomial, Budget, buchberger, is_groebner_basis
from .toric.ideal import fibers, toric_ideal
from .toric.orders import MonomialOrder


@dataclass(frozen=True)
class UnionSplit:
    g1: Graph
    g2: Graph
    x: int  # vertex of g1
    y: int  # vertex of g2, in g2's own labels

    def __post_init__(self):
        if not 1 <= self.x <= self.g1.vertex_count:
            raise ValueError(f"x = {self.x} is not a vertex of the first graph")
        if not 1 <= self.y <= self.g2.vertex_count:
            raise ValueError(f"y = {self.y} is not a vertex of the second graph")

    @property
    def v1(self) -> int:
        return self.g1.vertex_count

    @property
    def v2(self) -> int:
        return self.g2.vertex_count

    @property
    def union(self) -> Graph:
        return disjoint_union(self.g1, self.g2)

    @property
    def y_union(self) -> int:
        return self.y + self.v1

    @property
    def second_mask(self) -> int:
        """Bits of the ``g2`` vertices inside the union."""
        return ((1 << self.v2) - 1) << self.v1

    def in_p1(self, p: VertexPartition) -> bool:
        return p.side(self.x) == p.side(self.y_union)


def p1_partitions(split: UnionSplit) -> list[VertexPartition]:
    return [p for p in enumerate_partitions(split.v1 + split.v2) if split.in_p1(p)]


def p2_partitions(split: UnionSplit) -> list[VertexPartition]:
    return [p for p in enumerate_partitions(split.v1 + split.v2) if not split.in_p1(p)]


def epsilon(p: VertexPartition, split: UnionSplit) -> VertexPartition:
    """Keep the ``g1`` sides, swap the ``g2`` sides: ``P1 -> P2``.

    Vertex 1 belongs to ``g1``, so the result stays canonical.
    """
    if p.n != split.v1 + split.v2:
        raise ValueError("partition does not live on the disjoint union")
    if not split.in_p1(p):
        raise ValueError("x and y must lie on the same side")
    return VertexPartition(p.side_mask ^ split.second_mask, p.n)


def epsilon_inverse(p: VertexPartition, split: UnionSplit) -> VertexPartition:
    if split.in_p1(p):
        raise ValueError("x and y must lie on opposite sides")
    return VertexPartition(p.side_mask ^ split.second_mask, p.n)


@dataclass(frozen=True)
class ZeroSum:
    graph: Graph
    relabel: dict  # g2 vertex -> vertex of the 0-sum
    split: UnionSplit

    def union_vertices(self, u: int) -> tuple[int, ...]:
        """Vertices of the disjoint union that the 0-sum vertex ``u`` stands for."""
        s = self.split
        out = [u] if u <= s.v1 else []
        out += [w + s.v1 for w, img in self.relabel.items() if img == u]
        return tuple(sorted(out))


def zero_sum(split: UnionSplit) -> ZeroSum:
    g0, relabel = clique_sum(split.g1, split.g2, [(split.x, split.y)])
    return ZeroSum(g0, relabel, split)


def alpha_embed(p: VertexPartition, z: ZeroSum) -> VertexPartition:
    """Partition of the 0-sum pulled apart onto the union; the glued vertex lands on both ``x`` and ``y``."""
    if p.n != z.graph.vertex_count:
        raise ValueError("partition does not live on the 0-sum")
    mask = 0
    for u in range(1, p.n + 1):
        if p.side(u):
            for v in z.union_vertices(u):
                mask |= 1 << (v - 1)
    return VertexPartition(mask, z.split.v1 + z.split.v2)


def edge_correspondence(z: ZeroSum) -> dict[int, int]:
    """Edge ``k`` of the 0-sum is edge ``k`` of the union (both list ``g1`` edges first)."""
    m = z.graph.edge_count
    if m != z.split.union.edge_count:
        raise AssertionError("edge counts of the 0-sum and the union differ")
    return {k: k for k in range(1, m + 1)}


def _var(p: VertexPartition) -> int:
    return p.side_mask >> 1


def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _embed(mono, index, n):
    out = [0] * n
    for i, e in enumerate(mono):
        out[index[i]] += e
    return tuple(out)


@dataclass(frozen=True)
class DisjointUnionConstruction:
    split: UnionSplit
    zero_sum: ZeroSum
    alpha_index: tuple[int, ...]  # 0-sum variable -> union variable
    epsilon_index: dict           # P1 variable -> P2 variable
    embedded: tuple[Binomial, ...]
    linear_forms: tuple[Binomial, ...]

    @property
    def generators(self) -> list[Binomial]:
        return list(self.embedded) + list(self.linear_forms)

    @property
    def nvars(self) -> int:
        return 1 << (self.split.v1 + self.split.v2 - 1)

    @property
    def p1_count(self) -> int:
        return len(self.epsilon_index)

    @property
    def count_from_statement(self) -> int:
        return 1 << (self.split.v1 + self.split.v2 - 2)

    @property
    def count_from_proof(self) -> int:
        return 1 << (self.split.v1 + self.split.v2 - 1)

    def matching_count(self) -> str:
        """Which of the two candidate exponents the direct count agrees with."""
        hits = []
        if self.p1_count == self.count_from_statement:
            hits.append("v1+v2-2")
        if self.p1_count == self.count_from_proof:
            hits.append("v1+v2-1")
        return ",".join(hits) or "neither"


def disjoint_union_ideal(g1: Graph, g2: Graph, join: tuple[int, int],
                         budget: Budget = DEFAULT_BUDGET,
                         order: MonomialOrder | None = None) -> DisjointUnionConstruction:
    """Embedded basis of the 0-sum ideal plus the linear forms ``q_p - q_eps(p)``.

    ``order`` is the order on the 0-sum ring used for its basis (default
    degree reverse lexicographic).
    """
    split = UnionSplit(g1, g2, *join)
    z = zero_sum(split)
    n = 1 << (split.v1 + split.v2 - 1)
    alpha = tuple(_var(alpha_embed(p, z)) for p in enumerate_partitions(z.graph))
    eps = {_var(p): _var(epsilon(p, split)) for p in p1_partitions(split)}
    if sorted(alpha) != sorted(eps):
        raise AssertionError("the embedded partitions are not exactly P1")
    gb0 = toric_ideal(cut_exponent_matrix(z.graph), order, budget)
    embedded = tuple(Binomial(_embed(b.plus, alpha, n), _embed(b.minus, alpha, n)) for b in gb0.elements)
    linear = tuple(Binomial(_unit(n, p), _unit(n, q)) for p, q in sorted(eps.items()))
    return DisjointUnionConstruction(split, z, alpha, eps, embedded, linear)


# -- ideal comparison --------------------------------------------------------------

@dataclass(frozen=True)
class IdealComparison:
    same_reduced_basis: bool  # reduced bases under a common order coincide
    first_in_second: bool     # every generator of the first reduces to 0 mod the second
    second_in_first: bool

    @property
    def equal(self) -> bool:
        return self.first_in_second and self.second_in_first


def compare_ideals(gens_a, gens_b, order: MonomialOrder, budget: Budget = DEFAULT_BUDGET) -> IdealComparison:
    gb_a = buchberger(gens_a, order, budget)
    gb_b = buchberger(gens_b, order, budget)
    return IdealComparison(
        set(gb_a.elements) == set(gb_b.elements),
        all(gb_b.reduces_to_zero(b) for b in gens_a),
        all(gb_a.reduces_to_zero(b) for b in gens_b),
    )


def compare_with_toric(gens, matrix, order: MonomialOrder | None = None,
                       budget: Budget = DEFAULT_BUDGET) -> IdealComparison:
    if order is None:
        order = MonomialOrder.degrevlex(len(matrix.columns))
    direct = toric_ideal(matrix, order, budget)
    return compare_ideals(list(gens), list(direct.elements), order, budget)


@dataclass(frozen=True)
class TruncatedComparison:
    degree: int
    inside: bool                    # every generator is a toric binomial
    connected: tuple[bool, ...]     # per degree 1..degree: generators connect every fiber

    @property
    def equal_up_to_degree(self) -> bool:
        return self.inside and all(self.connected)


def truncated_compare(gens, matrix, degree: int) -> TruncatedComparison:
    """Compare ``(gens)`` with the toric ideal in degrees ``1..degree``.

    Both ideals are spanned, degree by degree, by differences of monomials.
    For the toric ideal these are the differences inside a fiber; for a
    binomial ideal they are the differences of monomials joined by a chain of
    moves ``m*u <-> m*v``.  The two degree-``j`` parts coincide exactly when the
    moves of the generators connect every degree-``j`` fiber.
    """
    gens = list(gens)
    inside = all(b.check_toric(matrix) for b in gens)
    moves = []
    for b in gens:
        moves.append((b.plus, b.minus))
        moves.append((b.minus, b.plus))
    flags = []
    for j in range(1, degree + 1):
        ok = True
        for monos in fibers(matrix, j).values():
            if len(monos) > 1 and not _fiber_connected(monos, moves):
                ok = False
                break
        flags.append(ok)
    return TruncatedComparison(degree, inside, tuple(flags))


def _fiber_connected(monos, moves) -> bool:
    members = set(monos)
    start = monos[0]
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        for u, v in moves:
            if all(a >= b for a, b in zip(m, u)):
                nb = tuple(a - b + c for a, b, c in zip(m, u, v))
                if nb not in seen and nb in members:
                    seen.add(nb)
                    stack.append(nb)
    return len(seen) == len(members)


@dataclass(frozen=True)
class UnionVerdict:
    full: IdealComparison | None        # None when the full comparison ran out of budget
    truncated: TruncatedComparison | None
    reason: str = ""

    @property
    def equal(self) -> bool:
        if self.full is not None:
            return self.full.equal
        return self.truncated is not None and self.truncated.equal_up_to_degree


def verify_union(construction: DisjointUnionConstruction, budget: Budget = DEFAULT_BUDGET,
                 fallback_degree: int = 3) -> UnionVerdict:
    """Constructed generators versus the toric ideal of the union, with a degree-truncated fallback."""
    matrix = cut_exponent_matrix(construction.split.union)
    try:
        return UnionVerdict(compare_with_toric(construction.generators, matrix, budget=budget), None)
    except BudgetExceeded as exc:
        trunc = truncated_compare(construction.generators, matrix, fallback_degree)
        return UnionVerdict(None, trunc, str(exc))


# -- duplicated variables -----------------------------------------------------------

@dataclass(frozen=True)
class DoublingReport:
    ideal_equal: bool        # J*S + (x_i - y_i) equals the toric ideal of the full matrix
    groebner: bool           # the assembled set passes Buchberger's criterion
    matches_reduced: bool    # and is exactly the reduced basis of the toric ideal
    order: MonomialOrder
    assembled: tuple[Binomial, ...]


def _sub_matrix(matrix, cols):
    return ExponentMatrix(matrix.rows, tuple(matrix.columns[j] for j in cols),
                          tuple(tuple(r[j] for j in cols) for r in matrix.entries))


def _extended_order(inner: MonomialOrder, originals, duplicates, n) -> MonomialOrder:
    """Duplicates above everything, then the originals ranked as ``inner`` ranks them."""
    perm = list(duplicates) + [originals[i] for i in inner.perm]
    if inner.kind == "lex":
        return MonomialOrder.lex(n, perm)
    if inner.kind == "degrevlex":
        return MonomialOrder.elim(n, len(duplicates), perm)
    raise ValueError("inner order must be lex or degrevlex")


def verify_doubling(matrix, originals, duplicates, budget: Budget = DEFAULT_BUDGET,
                    inner_order: MonomialOrder | None = None) -> DoublingReport:
    """Check ``I = J*S + (x_i - y_i)`` when column ``duplicates[i]`` repeats column ``originals[i]``.

    ``J`` is the toric ideal of the original columns alone, computed under
    ``inner_order``.  The assembled set is tested against the toric ideal of
    the whole matrix under an order ranking every duplicate above every
    original.
    """
    originals, duplicates = list(originals), list(duplicates)
    n = len(matrix.columns)
    if len(set(originals + duplicates)) != n or len(originals) != len(duplicates):
        raise ValueError("originals and duplicates must pair up and cover every column")
    for o, d in zip(originals, duplicates):
        if matrix.column(o) != matrix.column(d):
            raise ValueError(f"column {d} does not repeat column {o}")
    sub = _sub_matrix(matrix, originals)
    if inner_order is None:
        inner_order = MonomialOrder.degrevlex(len(originals))
    j_gb = toric_ideal(sub, inner_order, budget)
    f = [Binomial(_embed(b.plus, originals, n), _embed(b.minus, originals, n)) for b in j_gb.elements]
    lin = [Binomial(_unit(n, d), _unit(n, o)) for o, d in zip(originals, duplicates)]
    order = _extended_order(inner_order, originals, duplicates, n)
    assembled = tuple(b.oriented(order) for b in f + lin)
    direct = toric_ideal(matrix, order, budget)
    gb_assembled = buchberger(list(assembled), order, budget)
    equal = (all(direct.reduces_to_zero(b) for b in assembled)
             and all(gb_assembled.reduces_to_zero(b) for b in direct.elements))
    return DoublingReport(
        equal,
        is_groebner_basis(assembled, order),
        set(assembled) == set(direct.elements),
        order,
        assembled,
    )


def verify_union_doubling(construction: DisjointUnionConstruction, budget: Budget = DEFAULT_BUDGET,
                          inner_order: MonomialOrder | None = None) -> DoublingReport:
    """The duplicated-variable statement on the union: ``P2`` columns repeat ``P1`` columns."""
    matrix = cut_exponent_matrix(construction.split.union)
    originals = sorted(construction.epsilon_index)
    duplicates = [construction.epsilon_index[p] for p in originals]
    return verify_doubling(matrix, originals, duplicates, budget, inner_order)


def cut_preserved(split: UnionSplit) -> bool:
    g = split.union
    return all(cut_set(p, g) == cut_set(epsilon(p, split), g) for p in p1_partitions(split))


def epsilon_is_bijection(split: UnionSplit) -> bool:
    p1 = p1_partitions(split)
    images = [epsilon(p, split) for p in p1]
    return (sorted(images) == p2_partitions(split)
            and all(epsilon_inverse(q, split) == p for p, q in zip(p1, images)))


# -- forests -------------------------------------------------------------------------

def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(g.components())


def distinct_column_series(g: Graph, budget: Budget = DEFAULT_BUDGET) -> HilbertSeries:
    """Hilbert series of the cut ring computed on the distinct columns only.

    Repeated columns only add linear forms, so the coordinate ring, and hence
    its Hilbert series, is unchanged.
    """
    m = cut_exponent_matrix(g).distinct_columns()
    gb = toric_ideal(m, budget=budget)
    return hilbert_series_from_initial(gb.leads, len(m.columns))


def forest_symmetric(g: Graph, budget: Budget = DEFAULT_BUDGET) -> bool:
    if not is_forest(g):
        raise ValueError("graph is not a forest")
    return h_vector_symmetric(distinct_column_series(g, budget))
