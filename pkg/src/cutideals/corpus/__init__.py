"""Built-in graph files."""

from __future__ import annotations

from importlib import resources

from ..graph import Graph, parse_graph


def names() -> list[str]:
    files = resources.files(__name__)
    return sorted(p.name[:-6] for p in files.iterdir() if p.name.endswith(".graph"))


def load(name: str) -> Graph:
    path = resources.files(__name__) / f"{name}.graph"
    if not path.is_file():
        raise KeyError(f"no built-in graph named {name!r}")
    return parse_graph(path.read_text())


def forests() -> list[str]:
    return [n for n in names() if n.startswith("forest")]
