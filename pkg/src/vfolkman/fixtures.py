"""Named graphs shipped with the package."""

from __future__ import annotations

from importlib import resources

from .graphcore import Graph, graph6_decode


def available() -> list[str]:
    root = resources.files("vfolkman").joinpath("data/fixtures")
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".g6"))


def load_all(name: str) -> list[Graph]:
    text = resources.files("vfolkman").joinpath(f"data/fixtures/{name}.g6").read_text()
    return [graph6_decode(line) for line in text.split() if line]


def load(name: str) -> Graph:
    graphs = load_all(name)
    if len(graphs) != 1:
        raise ValueError(f"fixture {name} holds {len(graphs)} graphs")
    return graphs[0]
