"""Bundled example networks."""

from __future__ import annotations

from importlib import resources

from .edgelist import read_edge_list
from .graph import Graph


def _load(name: str) -> Graph:
    ref = resources.files("assortshift.data").joinpath(name)
    with resources.as_file(ref) as path:
        return read_edge_list(path)


def karate_graph() -> Graph:
    """Zachary karate club network: 34 nodes, 78 edges."""
    return _load("karate.txt")
