"""Mechanical checks of the cut-ideal results, grouped into suites.

Every check yields one line ``STATUS  claim-id :: detail :: statement``.
Running out of budget marks a check ``SKIPPED``, never ``FAIL``.  Nothing
time-dependent is printed, so identical configurations give identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from pathlib import Path

from . import combinatorics as cb
from . import corpus
from .composer import (cut_preserved, disjoint_union_ideal, distinct_column_series, epsilon_is_bijection,
                       is_forest, truncated_compare, verify_doubling, verify_union,
                       verify_union_doubling)
from .cuts import (ExponentMatrix, claw_cycle_rename, cut_exponent_matrix, cut_set, enumerate_partitions,
                   phylo_exponent_matrix, phylo_indices, transported_cycle_matrix)
from .errors import BudgetExceeded
from .graph import Graph, cycle_graph, is_ring_graph, path_graph
from .hilbert import (HilbertSeries, default_window, degree_from_series, h_vector_symmetric,
                      hilbert_series_from_initial, is_hilbertian, regularity, semigroup_hilbert,
                      semigroup_table, series_table)
from .toric.binomials import Budget, GroebnerBasis, format_gb
from .toric.ideal import (betti0_in_degree, is_squarefree_quadratic, minimal_generator_degrees,
                          order_search, toric_ideal)
from .toric.orders import MonomialOrder

SUITES = ("formulas", "cycles", "trees", "unions", "ring")
PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class RunConfig:
    max_degree: int = 6
    time_limit: float = 0.0      # per computation; 0 disables
    stretch_time: float = 300.0  # cap for the stretch items (C6)
    window: int | None = None
    out: Path | None = None

    def budget(self, stretch=False) -> Budget:
        limit = self.time_limit
        if stretch and self.stretch_time:
            limit = min(limit, self.stretch_time) if limit else self.stretch_time
        return Budget(max_degree=self.max_degree, time_limit=limit)


@dataclass(frozen=True)
class Check:
    claim: str
    status: str
    detail: str
    statement: str

    def line(self) -> str:
        return f"{self.status:<7} {self.claim} :: {self.detail} :: {self.statement}"


@dataclass
class Session:
    config: RunConfig = field(default_factory=RunConfig)
    checks: list = field(default_factory=list)
    bases: dict = field(default_factory=dict)  # file name -> serialized basis

    def check(self, claim, statement, fn):
        """Run ``fn() -> (ok, detail)`` and record the outcome."""
        try:
            ok, detail = fn()
            status = PASS if ok else FAIL
        except BudgetExceeded as exc:
            status, detail = SKIPPED, f"budget: {exc.reason or exc}"
        self.checks.append(Check(claim, status, detail, statement))

    def record(self, name: str, matrix: ExponentMatrix, gb: GroebnerBasis):
        self.bases[f"{name}.{gb.order.kind}.gb"] = format_gb(gb, matrix.columns)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def report(self) -> str:
        lines = [c.line() for c in self.checks]
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, SKIPPED)}
        lines.append(f"# total {len(self.checks)}: " + ", ".join(f"{k.lower()} {v}" for k, v in counts.items()))
        return "\n".join(lines) + "\n"

    def write(self, out: Path):
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text(self.report())
        gbdir = out / "gb"
        gbdir.mkdir(exist_ok=True)
        for name in sorted(self.bases):
            (gbdir / name).write_text(self.bases[name])


def _fmt_degrees(d: dict) -> str:
    return "{" + ",".join(f"{k}:{v}" for k, v in sorted(d.items())) + "}"


def _series_text(s: HilbertSeries) -> str:
    return f"({','.join(map(str, s.numerator))})/(1-t)^{s.denominator_power}"


def _series(session, name, g_or_m, stretch=False):
    m = g_or_m if isinstance(g_or_m, ExponentMatrix) else cut_exponent_matrix(g_or_m)
    gb = toric_ideal(m, budget=session.config.budget(stretch))
    session.record(name, m, gb)
    return m, gb, hilbert_series_from_initial(gb.leads, len(m.columns))


# -- formulas ----------------------------------------------------------------------

def suite_formulas(s: Session):
    s.check("formulas.stirling-k4-closed-form", "S(n,4) recurrence equals (4^n-4*3^n+6*2^n-4)/24",
            lambda: (all(cb.stirling2(n, 4) == cb.stirling2_k4_closed(n) for n in range(1, 31)), "n=1..30"))
    s.check("formulas.stirling-set-partitions", "S(n,k) recurrence equals a direct count of set partitions",
            lambda: (all(cb.stirling2(n, k) == cb.brute_set_partitions(n, k)
                         for n in range(0, 9) for k in range(0, n + 2)), "n<=8, all k"))
    s.check("formulas.eulerian-descents", "Eulerian recurrence equals descent counts over permutations",
            lambda: (all(cb.eulerian_row(n) == cb.brute_eulerian_row(n) for n in range(1, 8)), "n=1..7"))
    s.check("formulas.eulerian-symmetry", "A(n,k) = A(n,n+1-k)",
            lambda: (all(cb.eulerian_row(n) == cb.eulerian_row(n)[::-1] for n in range(1, 31)), "n=1..30"))
    s.check("formulas.eulerian-row-sum", "Eulerian rows sum to n!",
            lambda: (all(sum(cb.eulerian_row(n)) == factorial(n) for n in range(1, 31)), "n=1..30"))
    s.check("formulas.claw-h2-recursion", "claw degree-2 closed form satisfies h(n) = h(n-1) + 3^n - 2^(n-1), h(1) = 3",
            lambda: (all(cb.claw_hilbert_degree2(n) == cb.claw_hilbert_degree2_recursive(n)
                         for n in range(1, 31)), "n=1..30"))

    def claw_semigroup():
        vals = [(n, semigroup_hilbert(phylo_exponent_matrix(n), 2), cb.claw_hilbert_degree2(n)) for n in range(1, 6)]
        return all(a == b for _, a, b in vals), " ".join(f"n={n}:{a}/{b}" for n, a, b in vals)

    s.check("formulas.claw-h2-semigroup", "claw degree-2 closed form equals semigroup enumeration", claw_semigroup)
    s.check("formulas.claw-quadric-count", "C(2^n+1,2) - h(2) = 3*S(n+1,4) for the claw ideal",
            lambda: (all(comb(2**n + 1, 2) - cb.claw_hilbert_degree2(n) == 3 * cb.stirling2(n + 1, 4)
                         for n in range(1, 30)), "n=1..29"))

    for length in (3, 4, 5, 6):
        def mu2(length=length):
            m = cut_exponent_matrix(cycle_graph(length))
            n = len(m.columns)
            dim_i2 = comb(n + 1, 2) - semigroup_hilbert(m, 2)
            beta = betti0_in_degree(m, 2)
            expect = cb.cycle_generator_count(length)
            return dim_i2 == beta == expect, f"C(N+1,2)-h(2)={dim_i2} beta02={beta} 3*S({length},4)={expect}"
        s.check(f"formulas.mu2-identity[C{length}]", "degree-2 generators equal C(N+1,2) - h(2) and 3*S(n,4) on cycles", mu2)


# -- cycles ------------------------------------------------------------------------

def suite_cycles(s: Session):
    for length in (3, 4, 5, 6):
        g = cycle_graph(length)
        s.check(f"cycles.even-cuts[C{length}]", "every cut of a cycle has even size",
                lambda g=g: (all(len(cut_set(p, g)) % 2 == 0 for p in enumerate_partitions(g)),
                             f"{2 ** (length - 1)} partitions"))

    for length in (3, 4, 5, 6):
        stretch = length == 6
        tag = " (stretch)" if stretch else ""

        def gens(length=length, stretch=stretch):
            g = cycle_graph(length)
            m = cut_exponent_matrix(g)
            got = minimal_generator_degrees(m, s.config.budget(stretch))
            expect = {2: cb.cycle_generator_count(length)} if cb.cycle_generator_count(length) else {}
            return got == expect, f"got {_fmt_degrees(got)} expected {_fmt_degrees(expect)}{tag}"
        s.check(f"cycles.minimal-generators[C{length}]", "cycle ideals are minimally generated by 3*S(n,4) quadrics", gens)

    for length in (4, 5, 6):
        stretch = length == 6

        def shape(length=length, stretch=stretch):
            m = cut_exponent_matrix(cycle_graph(length))
            r = order_search(m, s.config.budget(stretch))
            if not r.found:
                b = r.best
                return False, f"none found; best {b.name} max degree {b.max_degree}"
            s.record(f"C{length}.search", m, r.gb)
            sq = is_squarefree_quadratic(r.gb)
            return sq.squarefree and sq.quadratic, f"{r.tried[-1].name}, {len(r.gb)} elements"
        s.check(f"cycles.squarefree-quadratic-lex[C{length}]",
                "cycle ideals have a squarefree quadratic lexicographic Groebner basis", shape)

    for length, want in ((4, True), (5, False), (6, False)):
        stretch = length == 6

        def gor(length=length, want=want, stretch=stretch):
            _, _, ser = _series(s, f"C{length}", cycle_graph(length), stretch)
            sym = h_vector_symmetric(ser)
            return sym == want, f"h = {','.join(map(str, ser.numerator))}, symmetric = {str(sym).lower()}"
        s.check(f"cycles.h-vector-symmetric[C{length}]",
                "C4 is Gorenstein (h-vector symmetric), C5 and C6 are not", gor)

    for length in (3, 4, 5, 6):
        def dims(length=length):
            m, gb, ser = _series(s, f"C{length}", cycle_graph(length), length == 6)
            w = s.config.window or default_window(ser)
            enum = semigroup_table(m, w).values
            expand = series_table(ser, w).values
            ok = ser.denominator_power == m.rank() == length + 1 and enum == expand
            return ok, f"dim {ser.denominator_power}, rank {m.rank()}, h(0..{w}) agree = {str(enum == expand).lower()}"
        s.check(f"cycles.series-vs-semigroup[C{length}]",
                "series from the initial ideal matches semigroup counts; dimension is edges + 1", dims)

    for n in (2, 3, 4):
        def transport(n=n):
            same = transported_cycle_matrix(n).entries == phylo_exponent_matrix(n).entries
            return same, f"C{n + 1} cut matrix renamed equals claw matrix with {n} leaves"
        s.check(f"cycles.claw-matrix-transport[n={n}]",
                "claw phylogenetic matrix and cycle cut matrix agree after renaming", transport)

        def gbs(n=n):
            phylo = phylo_exponent_matrix(n)
            cyc = cut_exponent_matrix(cycle_graph(n + 1))
            rename = claw_cycle_rename(n)
            cyc_index = [rename[g].side_mask >> 1 for g in phylo_indices(n)]  # claw var -> cycle var
            g_phylo = toric_ideal(phylo, MonomialOrder.lex(len(cyc_index)))
            g_cyc = toric_ideal(cyc, MonomialOrder.lex(len(cyc_index), cyc_index))
            pulled = {(tuple(b.plus[j] for j in cyc_index), tuple(b.minus[j] for j in cyc_index))
                      for b in g_cyc.elements}
            mine = {(b.plus, b.minus) for b in g_phylo.elements}
            return pulled == mine, f"{len(mine)} elements under matched lex orders"
        s.check(f"cycles.claw-gb-transport[n={n}]",
                "claw ideal and cycle ideal have the same reduced basis under matched orders", gbs)

    def counts():
        ok = all(len(phylo_indices(n)) == 2 ** (len(cycle_graph(n + 1).vertices) - 1) for n in range(2, 6))
        wrong = any(len(phylo_indices(n)) == 2 ** (n - 1) for n in range(2, 6))
        return ok and not wrong, "claw with n leaves pairs with the (n+1)-cycle; the n-cycle has half the variables"
    s.check("cycles.claw-variable-count", "the claw with n leaves corresponds to the (n+1)-cycle", counts)


# -- trees ---------------------------------------------------------------------------

def _tree_shapes(n):
    if n == 1:
        return [("K2", corpus.load("K2"))]
    return [(f"path{n}", corpus.load(f"path{n}")), (f"star{n}", corpus.load(f"star{n}"))]


def suite_trees(s: Session):
    for n in range(1, 5):
        series_by_shape = {}
        for name, g in _tree_shapes(n):
            m = cut_exponent_matrix(g)

            def hfun(m=m, n=n):
                vals = semigroup_table(m, 4).values
                return vals == tuple((i + 1) ** n for i in range(5)), f"h(0..4) = {','.join(map(str, vals))}"
            s.check(f"trees.hilbert-function[{name}]", "tree rings have h(i) = (i+1)^n", hfun)

            def gens(m=m, n=n):
                got = minimal_generator_degrees(m, s.config.budget())
                expect = cb.tree_generator_count(n)
                ok = sum(got.values()) == expect and set(got) <= {2}
                return ok, f"got {_fmt_degrees(got)} expected {expect} quadrics"
            s.check(f"trees.minimal-generators[{name}]", "tree ideals need 2*4^(n-1)+2^(n-1)-3^n quadrics", gens)

            def package(name=name, g=g, n=n):
                m, gb, ser = _series(s, name, g)
                series_by_shape[name] = ser
                reg = regularity(ser, g.edge_count)
                parts = {
                    "h=eulerian": ser.numerator == tuple(cb.eulerian_row(n)),
                    "degree=n!": degree_from_series(ser) == factorial(n),
                    "reg=n": reg.reg_variety == n,
                    "dim=n+1": ser.denominator_power == n + 1,
                    "symmetric": h_vector_symmetric(ser),
                    "hilbertian": is_hilbertian(m, ser, s.config.window),
                }
                bad = [k for k, v in parts.items() if not v]
                return not bad, f"series {_series_text(ser)}" + (f"; failing {','.join(bad)}" if bad else "")
            s.check(f"trees.series-package[{name}]",
                    "tree rings: Eulerian h-vector, degree n!, regularity n, h-vector symmetric", package)
        if n > 1:
            def same(n=n):
                a, b = (series_by_shape.get(f"path{n}"), series_by_shape.get(f"star{n}"))
                return a is not None and a == b, "path and star series " + ("agree" if a == b else "differ")
            s.check(f"trees.shape-independence[n={n}]", "paths and stars with the same edge count give identical invariants", same)

    def product():
        k2 = cut_exponent_matrix(corpus.load("K2"))
        hk = semigroup_table(k2, 4).values
        ok = True
        for n in range(2, 5):
            small = semigroup_table(cut_exponent_matrix(path_graph(n - 1)), 4).values
            big = semigroup_table(cut_exponent_matrix(path_graph(n)), 4).values
            ok &= all(big[i] == small[i] * hk[i] for i in range(5))
        return ok, "n=2..4, i=0..4"
    s.check("trees.zero-sum-product", "gluing an edge at a vertex multiplies Hilbert functions", product)


# -- unions --------------------------------------------------------------------------

UNION_PAIRS = (("K2", "K2", (1, 1)), ("C3", "K2", (1, 1)), ("K2", "K1", (1, 1)))


def _load(name):
    if name == "K1":
        return Graph(1, ())
    return corpus.load(name)


def suite_unions(s: Session):
    for a, b, join in UNION_PAIRS:
        tag = f"{a}+{b}"
        g1, g2 = _load(a), _load(b)

        def build(g1=g1, g2=g2, join=join):
            return disjoint_union_ideal(g1, g2, join, s.config.budget())

        def count(build=build):
            c = build()
            ok = c.p1_count == c.count_from_statement and len(c.linear_forms) == c.p1_count
            return ok, (f"|P1| = {c.p1_count}; 2^(v1+v2-2) = {c.count_from_statement}, "
                        f"2^(v1+v2-1) = {c.count_from_proof}; matches {c.matching_count()}")
        s.check(f"unions.linear-form-count[{tag}]", "the union needs 2^(v1+v2-2) linear forms", count)

        def maps(build=build):
            c = build()
            alpha_ok = sorted(c.alpha_index) == sorted(c.epsilon_index)
            ok = alpha_ok and epsilon_is_bijection(c.split) and cut_preserved(c.split)
            return ok, f"alpha onto P1 = {str(alpha_ok).lower()}, epsilon bijective and cut preserving"
        s.check(f"unions.partition-maps[{tag}]", "epsilon is a cut-preserving bijection P1 -> P2; alpha hits P1", maps)

        def full(build=build):
            c = build()
            v = verify_union(c, s.config.budget())
            if v.full is None:
                raise BudgetExceeded(v.reason)
            return v.full.equal, (f"same reduced basis = {str(v.full.same_reduced_basis).lower()}, "
                                  f"mutual reduction = {str(v.full.equal).lower()}")
        s.check(f"unions.ideal-equality[{tag}]", "embedded 0-sum ideal plus linear forms is the union's cut ideal", full)

        def basis(build=build):
            c = build()
            v = verify_union(c, s.config.budget())
            if v.full is None:
                raise BudgetExceeded(v.reason)
            return v.full.same_reduced_basis, "reduced bases under degrevlex coincide"
        s.check(f"unions.same-reduced-basis[{tag}]", "embedded 0-sum ideal plus linear forms is the union's cut ideal", basis)

        def trunc(build=build):
            c = build()
            t = truncated_compare(c.generators, cut_exponent_matrix(c.split.union), 3)
            return t.equal_up_to_degree, f"fibers connected in degrees 1..3: {','.join(str(x).lower() for x in t.connected)}"
        s.check(f"unions.degree-truncated-equality[{tag}]", "the same equality, degree by degree up to 3", trunc)

        def doubling(build=build):
            c = build()
            d = verify_union_doubling(c, s.config.budget())
            return d.ideal_equal and d.groebner and d.matches_reduced, (
                f"order {d.order.describe()}; ideal equal = {str(d.ideal_equal).lower()}, "
                f"Groebner = {str(d.groebner).lower()}, reduced basis = {str(d.matches_reduced).lower()}")
        s.check(f"unions.duplicated-variables[{tag}]",
                "basis of J plus x_i - y_i is a Groebner basis under an elimination order", doubling)

        def transport(build=build, g1=g1, g2=g2, join=join):
            c = build()
            g0 = cut_exponent_matrix(c.zero_sum.graph)
            r = order_search(g0, s.config.budget())
            if not r.found:
                return False, "no squarefree order found for the 0-sum"
            d = verify_union_doubling(c, s.config.budget(), inner_order=r.order)
            sq = is_squarefree_quadratic(GroebnerBasis(d.assembled, d.order))
            return sq.squarefree and d.matches_reduced, f"0-sum order {r.tried[-1].name}; union basis squarefree"
        s.check(f"unions.squarefree-transport[{tag}]",
                "squarefree bases of the pieces give a squarefree basis of the union", transport)

    def toy():
        m = ExponentMatrix(("r",), ("x", "y"), ((1, 1),))
        d = verify_doubling(m, [0], [1])
        return d.ideal_equal and d.groebner and len(d.assembled) == 1, "I = (x - y)"
    s.check("unions.duplicated-variables[toy]", "one duplicated variable gives the ideal (x - y)", toy)

    def paths():
        p2 = corpus.load("path2")
        c = disjoint_union_ideal(p2, p2, (1, 1), s.config.budget())
        d = verify_union_doubling(c, s.config.budget())
        v = verify_union(c, s.config.budget())
        t = truncated_compare(c.generators, cut_exponent_matrix(c.split.union), 3)
        ok = d.ideal_equal and d.groebner and d.matches_reduced and v.equal and t.equal_up_to_degree
        return ok, f"{c.nvars} variables; full comparison and degree<=3 comparison agree"
    s.check("unions.duplicated-variables[path2+path2]",
            "basis of J plus x_i - y_i is a Groebner basis under an elimination order", paths)

    for name in corpus.forests():
        def forest(name=name):
            g = corpus.load(name)
            ser = distinct_column_series(g, s.config.budget())
            detail = f"h = {','.join(map(str, ser.numerator))}"
            ok = is_forest(g) and h_vector_symmetric(ser) and ser.numerator == tuple(cb.eulerian_row(g.edge_count))
            if g.vertex_count <= 6:
                _, _, direct = _series(s, name, g)
                ok &= direct == ser
                detail += ", full matrix agrees"
            return ok, detail
        s.check(f"unions.forest-gorenstein[{name}]", "forest cut rings are Gorenstein (h-vector symmetric)", forest)


# -- ring graphs ---------------------------------------------------------------------

RING_CORPUS = ("K2", "path2", "path3", "path4", "star2", "star3", "star4", "C3", "C4", "C5", "C6",
               "triangle_edge_C4", "triangle_vertex_C4", "C4_edge_C4")
NOT_RING = ("K4",)


def suite_ring(s: Session):
    for name in RING_CORPUS + NOT_RING:
        want = name in RING_CORPUS

        def recog(name=name, want=want):
            v = is_ring_graph(corpus.load(name))
            ev = ";".join(f"{e.primitive_cycle_count}/{e.cycle_rank}" for e in v.per_block)
            return v.is_ring == want, f"ring = {str(v.is_ring).lower()}, primitive/rank per block {ev}"
        s.check(f"ring.recognition[{name}]", "ring graphs are those whose blocks have as many primitive cycles as cycle rank", recog)

    for name in RING_CORPUS:
        g = corpus.load(name)

        def gb_shape(name=name, g=g):
            m = cut_exponent_matrix(g)
            r = order_search(m, s.config.budget())
            if not r.found:
                return False, f"none found; best {r.best.name}"
            s.record(f"{name}.search", m, r.gb)
            sq = is_squarefree_quadratic(r.gb)
            return sq.squarefree and sq.quadratic and sq.initial_squarefree, (
                f"{r.tried[-1].name}; koszul_by_quadratic_gb = {str(sq.koszul_by_quadratic_gb).lower()}")
        s.check(f"ring.squarefree-quadratic-gb[{name}]", "ring graphs have a squarefree quadratic Groebner basis", gb_shape)

        def quad(name=name, g=g):
            got = minimal_generator_degrees(cut_exponent_matrix(g), s.config.budget())
            return set(got) <= {2}, f"minimal generators {_fmt_degrees(got)}"
        s.check(f"ring.quadratic-generation[{name}]", "ring graph cut ideals have only quadric minimal generators", quad)

        def hilb(name=name, g=g):
            m, gb, ser = _series(s, name, g)
            w = s.config.window or max(3, default_window(ser))
            ok = is_hilbertian(m, ser, w)
            reg = regularity(ser, g.edge_count)
            dim_ok = ser.denominator_power == g.edge_count + 1
            return ok and reg.within_bound and dim_ok, (
                f"window {w}, series {_series_text(ser)}, reg = {reg.reg_variety} <= e+1 = {reg.bound_e_plus_1}")
        s.check(f"ring.hilbertian-and-regularity[{name}]",
                "ring graphs are Hilbertian with reg at most e+1 and dimension e+1", hilb)


def run(suites, config: RunConfig | None = None) -> Session:
    session = Session(config or RunConfig())
    table = {"formulas": suite_formulas, "cycles": suite_cycles, "trees": suite_trees,
             "unions": suite_unions, "ring": suite_ring}
    for name in suites:
        table[name](session)
    return session


def expand(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return SUITES
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return (suite,)
