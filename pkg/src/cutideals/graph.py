"""Finite simple graphs, block structure, ring-graph recognition and gluing."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BudgetExceeded, InputError

DEFAULT_CYCLE_BUDGET = 16


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..vertex_count``.

    Edges are stored as ``(i, j)`` with ``i < j``; their list position fixes the
    edge index (1-based everywhere outside this class).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen = set()
        clean = []
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.vertex_count}")
            key = (min(i, j), max(i, j))
            if key not in seen:
                seen.add(key)
                clean.append(key)
        object.__setattr__(self, "edges", tuple(clean))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabeled ``1..k`` in increasing vertex order."""
        vs = sorted(vertices)
        pos = {v: k + 1 for k, v in enumerate(vs)}
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        return Graph(len(vs), tuple(edges))


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # 1-based edge indices of the parent graph

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1 and len(self.vertices) == 2


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cutvertices: frozenset[int]
    bridge_edges: frozenset[int]


@dataclass(frozen=True)
class BlockEvidence:
    block: int
    primitive_cycle_count: int
    cycle_rank: int


@dataclass(frozen=True)
class RingGraphVerdict:
    is_ring: bool
    per_block: tuple[BlockEvidence, ...] = field(default=())


# -- constructors -------------------------------------------------------------

def path_graph(n_edges: int) -> Graph:
    return Graph(n_edges + 1, tuple((i, i + 1) for i in range(1, n_edges + 1)))


def star_graph(n_edges: int) -> Graph:
    return Graph(n_edges + 1, tuple((1, i) for i in range(2, n_edges + 2)))


def cycle_graph(n: int) -> Graph:
    """``C_n`` with edges ``{1,2}, {2,3}, ..., {n-1,n}, {1,n}`` in that order."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


# -- structure ------------------------------------------------------------------

def block_decompose(g: Graph) -> BlockDecomposition:
    """Blocks (biconnected components, bridges, isolated vertices) by Tarjan's lowpoint DFS."""
    adj = {v: [] for v in g.vertices}
    for idx, (i, j) in enumerate(g.edges, start=1):
        adj[i].append((j, idx))
        adj[j].append((i, idx))
    for v in adj:
        adj[v].sort()

    disc, low = {}, {}
    edge_stack = []
    raw_blocks = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        if not adj[root]:
            raw_blocks.append(({root}, []))
            disc[root] = low[root] = counter
            counter += 1
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: (vertex, parent edge index, iterator position)
        stack = [(root, 0, 0)]
        while stack:
            v, pe, pos = stack[-1]
            if pos < len(adj[v]):
                stack[-1] = (v, pe, pos + 1)
                w, eidx = adj[v][pos]
                if eidx == pe:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(eidx)
                    stack.append((w, eidx, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(eidx)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    break
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    eids = []
                    while True:
                        e = edge_stack.pop()
                        eids.append(e)
                        if e == pe:
                            break
                    verts = set()
                    for e in eids:
                        verts.update(g.edges[e - 1])
                    raw_blocks.append((verts, eids))

    blocks = [Block(tuple(sorted(vs)), tuple(sorted(es))) for vs, es in raw_blocks]
    blocks.sort(key=lambda b: (b.vertices[0], b.vertices, b.edges))
    count = {}
    for b in blocks:
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    cut = frozenset(v for v, c in count.items() if c > 1)
    bridges = frozenset(b.edges[0] for b in blocks if b.is_bridge)
    return BlockDecomposition(tuple(blocks), cut, bridges)


def cycle_rank(g: Graph) -> int:
    return g.edge_count - g.vertex_count + len(g.components())


def chordless_cycles(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= 3, each once.

    A cycle is reported in canonical rotation: smallest vertex first, and the
    smaller of its two neighbours second.
    """
    if g.vertex_count > budget:
        raise BudgetExceeded(f"cycle enumeration limited to {budget} vertices, got {g.vertex_count}")
    adj = g.adjacency()
    found = []
    for s in g.vertices:
        # grow chordless paths s, p1, ..., pk using only vertices larger than s
        def extend(path, on_path):
            last = path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in on_path:
                    continue
                # w may touch only `last` among the interior path vertices
                if any(w in adj[p] for p in path[1:-1]):
                    continue
                if s in adj[w]:
                    if len(path) >= 2 and path[1] < w:
                        found.append(tuple(path) + (w,))
                    continue
                on_path.add(w)
                path.append(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

        for p1 in sorted(adj[s]):
            if p1 > s:
                extend([s, p1], {s, p1})
    found.sort()
    return found


def primitive_cycle_count(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> int:
    """Number of primitive (chordless) cycles."""
    return len(chordless_cycles(g, budget))


def is_ring_graph(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> RingGraphVerdict:
    if g.vertex_count > budget:
        raise BudgetExceeded(f"ring recognition limited to {budget} vertices, got {g.vertex_count}")
    dec = block_decompose(g)
    evidence = []
    for k, b in enumerate(dec.blocks):
        sub = g.induced(b.vertices)
        evidence.append(BlockEvidence(k, primitive_cycle_count(sub, budget), cycle_rank(sub)))
    ok = all(e.primitive_cycle_count == e.cycle_rank for e in evidence)
    return RingGraphVerdict(ok, tuple(evidence))


# -- gluing --------------------------------------------------------------------

def clique_sum(g1: Graph, g2: Graph, identification) -> tuple[Graph, dict[int, int]]:
    """Glue ``g2`` onto ``g1`` along a common clique.

    ``identification`` lists pairs ``(v, w)`` with ``v`` in ``g1`` and ``w`` in
    ``g2``; one, two or three pairs give a 0-, 1- or 2-sum.  Vertices of ``g1``
    keep their labels, unidentified vertices of ``g2`` are numbered
    consecutively after them in increasing order.  Returns the glued graph and
    the relabeling of ``g2``'s vertices.
    """
    pairs = [tuple(p) for p in identification]
    if not 1 <= len(pairs) <= 3:
        raise ValueError("a clique sum identifies 1, 2 or 3 vertices")
    left = [v for v, _ in pairs]
    right = [w for _, w in pairs]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise ValueError("duplicate vertex in identification")
    for v in left:
        if not 1 <= v <= g1.vertex_count:
            raise ValueError(f"vertex {v} not in the first graph")
    for w in right:
        if not 1 <= w <= g2.vertex_count:
            raise ValueError(f"vertex {w} not in the second graph")
    for (a, b), (c, d) in combinations(pairs, 2):
        if not g1.has_edge(a, c):
            raise ValueError(f"identified vertices {a},{c} are not adjacent in the first graph")
        if not g2.has_edge(b, d):
            raise ValueError(f"identified vertices {b},{d} are not adjacent in the second graph")

    relabel = {w: v for v, w in pairs}
    nxt = g1.vertex_count + 1
    for w in g2.vertices:
        if w not in relabel:
            relabel[w] = nxt
            nxt += 1
    edges = list(g1.edges) + [(relabel[i], relabel[j]) for i, j in g2.edges]
    return Graph(nxt - 1, tuple(edges)), relabel


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.vertex_count
    edges = list(g1.edges) + [(i + shift, j + shift) for i, j in g2.edges]
    return Graph(g1.vertex_count + g2.vertex_count, tuple(edges))


# -- text format ---------------------------------------------------------------

_LINE = re.compile(r"^\s*(\w+)((?:\s+-?\d+)*)\s*$")


def parse_graph(text: str) -> Graph:
    """Parse ``vertices <n>`` followed by ``edge <i> <j>`` lines; ``#`` comments."""
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise InputError(f"line {lineno}: cannot parse {raw.strip()!r}")
        word, nums = m.group(1), [int(x) for x in m.group(2).split()]
        if n is None:
            if word != "vertices" or len(nums) != 1 or nums[0] < 0:
                raise InputError(f"line {lineno}: expected 'vertices <n>'")
            n = nums[0]
            continue
        if word != "edge" or len(nums) != 2:
            raise InputError(f"line {lineno}: expected 'edge <i> <j>'")
        i, j = nums
        if not 1 <= i < j <= n:
            raise InputError(f"line {lineno}: edge needs 1 <= i < j <= {n}, got {i} {j}")
        if (i, j) in seen:
            raise InputError(f"line {lineno}: duplicate edge {i} {j}")
        seen.add((i, j))
        edges.append((i, j))
    if n is None:
        raise InputError("missing 'vertices <n>' line")
    return Graph(n, tuple(edges))


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"edge {i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {i} -- {j};" for i, j in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
