"""Regenerate the graph files shipped in src/cutideals/corpus.

Forests are every multiset of nonisomorphic trees (each with at least one
edge) totalling at most five edges; networkx supplies the trees.
"""

from pathlib import Path

import networkx as nx

from cutideals.graph import (Graph, clique_sum, complete_graph, cycle_graph, disjoint_union,
                             format_graph, path_graph, star_graph)

OUT = Path(__file__).resolve().parents[1] / "src" / "cutideals" / "corpus"


def trees(n_edges):
    out = []
    for t in nx.nonisomorphic_trees(n_edges + 1):
        # relabel by BFS from a max-degree vertex so files are stable and readable
        root = max(sorted(t.nodes), key=t.degree)
        order = [root] + [v for _, v in nx.bfs_edges(t, root)]
        label = {v: k + 1 for k, v in enumerate(order)}
        out.append(Graph(n_edges + 1, tuple(sorted((min(label[a], label[b]), max(label[a], label[b]))
                                                 for a, b in t.edges))))
    return sorted(out, key=lambda g: g.edges)


def partitions(total, largest):
    if total == 0:
        yield []
        return
    for k in range(min(total, largest), 0, -1):
        for rest in partitions(total - k, k):
            yield [k] + rest


def forests(max_edges):
    by_size = {k: trees(k) for k in range(1, max_edges + 1)}
    out = []
    for total in range(1, max_edges + 1):
        for parts in partitions(total, total):
            combos = [[]]
            for k in parts:
                new = []
                for c in combos:
                    # nondecreasing tree index within equal sizes avoids duplicates
                    lo = c[-1][1] if (c and c[-1][0] == k) else 0
                    for idx in range(lo, len(by_size[k])):
                        new.append(c + [(k, idx)])
                combos = new
            for c in combos:
                g = Graph(0, ())
                for k, idx in c:
                    g = disjoint_union(g, by_size[k][idx])
                out.append((total, c, g))
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.graph"):
        old.unlink()
    k2 = path_graph(1)
    c3, c4 = cycle_graph(3), cycle_graph(4)
    fixed = {
        "K2": (k2, "single edge"),
        "K4": (complete_graph(4), "complete graph on four vertices"),
        "triangle_edge_C4": (clique_sum(c3, c4, [(1, 1), (2, 2)])[0], "triangle and 4-cycle glued along an edge"),
        "triangle_vertex_C4": (clique_sum(c3, c4, [(1, 1)])[0], "triangle and 4-cycle glued at a vertex"),
        "C4_edge_C4": (clique_sum(c4, c4, [(1, 1), (2, 2)])[0], "two 4-cycles glued along an edge"),
        "two_K2": (disjoint_union(k2, k2), "two disjoint edges"),
        "C3_plus_K2": (disjoint_union(c3, k2), "triangle and a disjoint edge"),
    }
    for n in (2, 3, 4):
        fixed[f"path{n}"] = (path_graph(n), f"path with {n} edges")
        fixed[f"star{n}"] = (star_graph(n), f"star with {n} edges")
    for n in (3, 4, 5, 6):
        fixed[f"C{n}"] = (cycle_graph(n), f"cycle of length {n}")
    for name, (g, comment) in fixed.items():
        (OUT / f"{name}.graph").write_text(format_graph(g, comment))
    for total, parts, g in forests(5):
        tag = "_".join(f"{k}{chr(ord('a') + idx)}" for k, idx in parts)
        comment = f"forest with {total} edges, trees {tag}"
        (OUT / f"forest{total}_{tag}.graph").write_text(format_graph(g, comment))


if __name__ == "__main__":
    main()
