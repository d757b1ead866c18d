"""Vertex bipartitions, edge cuts, and the exponent matrices of the cut and
phylogenetic monomial maps.

Partitions are bitmasks over vertices: bit ``v-1`` is set when ``v`` lies on
side B.  Vertex 1 always sits on side A, so each unordered partition has a
single representative and there are ``2**(n-1)`` of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BudgetExceeded, InputError
from .graph import Graph, cycle_graph

MAX_VERTICES = 16
MAX_EDGES = 32
MAX_LEAVES = 5


@dataclass(frozen=True, order=True)
class VertexPartition:
    side_mask: int
    n: int

    def __post_init__(self):
        if self.side_mask & 1:
            raise ValueError("vertex 1 must lie on side A (bit 0 clear)")
        if self.side_mask >> self.n:
            raise ValueError("mask has bits beyond the vertex count")

    @classmethod
    def from_sides(cls, side_b, n: int) -> "VertexPartition":
        """Canonical partition with ``side_b`` on one side (either side may hold vertex 1)."""
        mask = 0
        for v in side_b:
            mask |= 1 << (v - 1)
        if mask & 1:
            mask ^= (1 << n) - 1
        return cls(mask, n)

    def side(self, v: int) -> int:
        return (self.side_mask >> (v - 1)) & 1

    @property
    def side_a(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if not self.side(v))

    @property
    def side_b(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.side(v))

    @property
    def label(self) -> str:
        bits = "".join(str(self.side(v)) for v in range(self.n, 1, -1))
        return f"q[{bits}]"


@dataclass(frozen=True)
class CutSet:
    edge_mask: int

    def edges(self) -> tuple[int, ...]:
        """1-based indices of the cut edges."""
        out = []
        m, k = self.edge_mask, 1
        while m:
            if m & 1:
                out.append(k)
            m >>= 1
            k += 1
        return tuple(out)

    def __len__(self):
        return bin(self.edge_mask).count("1")


@dataclass(frozen=True)
class ExponentMatrix:
    """Exponent matrix of a monomial map: one column per ring variable."""

    rows: tuple[str, ...]
    columns: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.rows):
            raise ValueError("row count does not match row labels")
        for r in self.entries:
            if len(r) != len(self.columns):
                raise ValueError("row length does not match column labels")
            if any(x < 0 for x in r):
                raise ValueError("exponents must be nonnegative")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.shape)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def column_vectors(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(len(self.columns))]

    def column_degrees(self) -> list[int]:
        return [sum(c) for c in self.column_vectors()]

    def image(self, mono) -> tuple[int, ...]:
        """Image exponent of the monomial ``q^mono`` under the map."""
        return tuple(sum(a * m for a, m in zip(r, mono)) for r in self.entries)

    def rank(self) -> int:
        if not self.entries or not self.columns:
            return 0
        import sympy

        return sympy.Matrix(self.entries).rank()

    def distinct_columns(self) -> "ExponentMatrix":
        """Keep the first occurrence of each distinct column."""
        seen = set()
        keep = []
        for j, c in enumerate(self.column_vectors()):
            if c not in seen:
                seen.add(c)
                keep.append(j)
        return ExponentMatrix(
            self.rows,
            tuple(self.columns[j] for j in keep),
            tuple(tuple(r[j] for j in keep) for r in self.entries),
        )

    def permuted(self, row_order, col_order) -> "ExponentMatrix":
        return ExponentMatrix(
            tuple(self.rows[i] for i in row_order),
            tuple(self.columns[j] for j in col_order),
            tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order),
        )


# -- partitions and cuts --------------------------------------------------------

def enumerate_partitions(g: Graph | int) -> list[VertexPartition]:
    n = g if isinstance(g, int) else g.vertex_count
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > MAX_VERTICES:
        raise BudgetExceeded(f"partition enumeration limited to {MAX_VERTICES} vertices, got {n}")
    return [VertexPartition(k << 1, n) for k in range(1 << (n - 1))]


def complement(p: VertexPartition) -> int:
    """Raw mask of the flipped partition (not canonical: vertex 1 lands on side B)."""
    return p.side_mask ^ ((1 << p.n) - 1)


def cut_set(p: VertexPartition | int, g: Graph) -> CutSet:
    mask = p.side_mask if isinstance(p, VertexPartition) else p
    out = 0
    for k, (i, j) in enumerate(g.edges):
        if ((mask >> (i - 1)) ^ (mask >> (j - 1))) & 1:
            out |= 1 << k
    return CutSet(out)


def _edge_name(e) -> str:
    return f"{e[0]},{e[1]}"


def cut_exponent_matrix(g: Graph) -> ExponentMatrix:
    """Rows ``s[i,j], t[i,j]`` per edge; one column per canonical partition."""
    if g.edge_count > MAX_EDGES:
        raise BudgetExceeded(f"cut matrices limited to {MAX_EDGES} edges, got {g.edge_count}")
    parts = enumerate_partitions(g)
    cuts = [cut_set(p, g).edge_mask for p in parts]
    rows, entries = [], []
    for k, e in enumerate(g.edges):
        rows.append(f"s[{_edge_name(e)}]")
        entries.append(tuple((c >> k) & 1 for c in cuts))
        rows.append(f"t[{_edge_name(e)}]")
        entries.append(tuple(1 - ((c >> k) & 1) for c in cuts))
    return ExponentMatrix(tuple(rows), tuple(p.label for p in parts), tuple(entries))


# -- claw tree phylogenetic map ---------------------------------------------------

def phylo_indices(n: int) -> list[tuple[int, ...]]:
    """Leaf labelings ``(g_1, ..., g_n)`` in lexicographic order."""
    return list(product((0, 1), repeat=n))


def phylo_label(g) -> str:
    return "q_" + "".join(map(str, g))


def phylo_row_labels(n: int) -> list[str]:
    return [f"a{h}({i})" for i in range(1, n + 2) for h in (0, 1)]


def phylo_exponent_matrix(n: int) -> ExponentMatrix:
    """Z/2 group-based model on the claw with ``n`` leaves, Fourier coordinates.

    The column of ``q_{g_1..g_n}`` has a 1 in rows ``a_{g_i}^(i)`` and in
    ``a_{g_1+...+g_n mod 2}^(n+1)``.
    """
    if not 1 <= n <= MAX_LEAVES:
        raise BudgetExceeded(f"claw trees limited to 1..{MAX_LEAVES} leaves, got {n}")
    idx = phylo_indices(n)
    rows = phylo_row_labels(n)
    entries = [[0] * len(idx) for _ in rows]
    for col, g in enumerate(idx):
        labels = list(g) + [sum(g) % 2]
        for leaf, h in enumerate(labels):
            entries[2 * leaf + h][col] = 1
    return ExponentMatrix(tuple(rows), tuple(phylo_label(g) for g in idx),
                          tuple(tuple(r) for r in entries))


def claw_cycle_rename(n: int) -> dict[tuple[int, ...], VertexPartition]:
    """Bijection from claw-tree indices to partitions of the ``(n+1)``-cycle.

    ``g`` goes to the partition whose cut contains edge ``e_i = {i, i+1}``
    exactly when ``g_i = 1`` (``i <= n``); the closing edge ``{1, n+1}`` is then
    cut exactly when ``g_1 + ... + g_n`` is odd.
    """
    if not 2 <= n <= MAX_LEAVES:
        raise BudgetExceeded(f"claw/cycle renaming defined for 2..{MAX_LEAVES} leaves, got {n}")
    out = {}
    for g in phylo_indices(n):
        side, mask = 0, 0
        for i, gi in enumerate(g, start=1):
            side ^= gi
            if side:
                mask |= 1 << i  # vertex i+1
        out[g] = VertexPartition(mask, n + 1)
    return out


def claw_cycle_row_map(n: int) -> dict[str, str]:
    """Row renaming ``s_{e_i} -> a_1^(i)``, ``t_{e_i} -> a_0^(i)`` for the cycle's edges."""
    c = cycle_graph(n + 1)
    out = {}
    for i, e in enumerate(c.edges, start=1):
        out[f"s[{_edge_name(e)}]"] = f"a1({i})"
        out[f"t[{_edge_name(e)}]"] = f"a0({i})"
    return out


def transported_cycle_matrix(n: int) -> ExponentMatrix:
    """Cut matrix of ``C_{n+1}`` rewritten in claw-tree row and column names/order."""
    c = cycle_graph(n + 1)
    cm = cut_exponent_matrix(c)
    rename = claw_cycle_rename(n)
    col_of = {p.label: j for j, p in enumerate(enumerate_partitions(c))}
    rowmap = claw_cycle_row_map(n)
    target_rows = phylo_row_labels(n)
    src_row = {rowmap[r]: i for i, r in enumerate(cm.rows)}
    row_order = [src_row[r] for r in target_rows]
    col_order = [col_of[rename[g].label] for g in phylo_indices(n)]
    moved = cm.permuted(row_order, col_order)
    return ExponentMatrix(tuple(target_rows),
                          tuple(phylo_label(g) for g in phylo_indices(n)),
                          moved.entries)


# -- matrix interchange format ---------------------------------------------------------

def format_matrix(m: ExponentMatrix) -> str:
    r, c = m.shape
    lines = [f"rows {r} cols {c}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.entries)
    lines.append(" ".join(m.rows))
    lines.append(" ".join(m.columns))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ExponentMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty matrix file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "rows" or head[2] != "cols":
        raise InputError("line 1: expected 'rows <r> cols <c>'")
    try:
        r, c = int(head[1]), int(head[3])
    except ValueError:
        raise InputError("line 1: row/column counts must be integers") from None
    # with no rows the row-label line is empty and was dropped above
    expected = r + 3 if r else 2
    if len(lines) != expected:
        raise InputError(f"expected {expected} nonblank lines, got {len(lines)}")
    entries = []
    for k in range(r):
        try:
            vals = tuple(int(x) for x in lines[1 + k].split())
        except ValueError:
            raise InputError(f"matrix row {k + 1}: non-integer entry") from None
        if len(vals) != c:
            raise InputError(f"matrix row {k + 1}: expected {c} entries")
        entries.append(vals)
    rows = tuple(lines[r + 1].split()) if r else ()
    cols = tuple(lines[-1].split())
    if len(rows) != r or len(cols) != c:
        raise InputError("label lines do not match the declared shape")
    try:
        return ExponentMatrix(rows, cols, tuple(entries))
    except ValueError as exc:
        raise InputError(str(exc)) from None
