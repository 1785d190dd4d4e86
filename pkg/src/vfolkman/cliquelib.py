"""Clique and independence numbers, (+K_t) and maximality predicates."""

from __future__ import annotations

import numpy as np

from . import _kernels as K
from .graphcore import Graph, complement


def clique_number(g: Graph) -> int:
    return int(K.max_clique_within(g.adj, np.uint64(g.full)))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def has_clique(g: Graph, t: int) -> bool:
    return has_clique_within(g, g.full, t)


def has_clique_within(g: Graph, s: int, t: int) -> bool:
    if t <= 0:
        return True
    return bool(K.has_clique(g.adj, np.uint64(s & g.full), t))


def max_clique_within(g: Graph, s: int) -> int:
    return int(K.max_clique_within(g.adj, np.uint64(s & g.full)))


def is_plus_Kt(g: Graph, t: int) -> bool:
    """Adding any missing edge creates a new K_t."""
    if t <= 2:
        return True
    return bool(K.is_plus_kt(g.adj, g.n, t))


def is_maximal_Kq_free(g: Graph, q: int) -> bool:
    return not has_clique(g, q) and is_plus_Kt(g, q)


def maximal_Kfree_subsets(g: Graph, t: int) -> list[int]:
    """Inclusion-maximal vertex masks inducing no K_t, in include-first order."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if t == 1:
        return [0]
    return [int(x) for x in K.maximal_kfree_subsets(g.adj, g.n, t)]


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def degree_bound_holds(g: Graph) -> bool:
    return max_degree(g) <= g.n - 4
