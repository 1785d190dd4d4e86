"""Vertex arrowing G -> (a_1, ..., a_s), chromatic number, universal arrowing."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .cliquelib import clique_number
from .graphcore import Graph


class BudgetError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class ArrowPattern:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a < 2 for a in self.parts) or list(self.parts) != sorted(self.parts):
            raise ValueError("use normalize() to build patterns")

    @property
    def m(self) -> int:
        return sum(a - 1 for a in self.parts) + 1

    @property
    def p(self) -> int:
        return max(self.parts, default=1)

    @property
    def s(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_pattern(self)

    def with_part_added(self, a: int) -> "ArrowPattern":
        return normalize(list(self.parts) + [a])

    def decrement(self, index: int) -> "ArrowPattern":
        parts = list(self.parts)
        parts[index] -= 1
        return normalize(parts)


def normalize(parts) -> ArrowPattern:
    parts = list(parts)
    if any(a < 1 for a in parts):
        raise ValueError(f"pattern parts must be >= 1, got {parts}")
    return ArrowPattern(tuple(sorted(a for a in parts if a > 1)))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_pattern(text: str) -> ArrowPattern:
    """Parse "2,2,6" or "2^3,6" (a^k repeats a k times)."""
    parts: list[int] = []
    for tok in text.strip().strip("()").split(","):
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad pattern token {tok!r} in {text!r}")
        parts += [int(mt.group(1))] * int(mt.group(2) or 1)
    return normalize(parts)


def format_pattern(pat: ArrowPattern) -> str:
    out = []
    for a, grp in itertools.groupby(pat.parts):
        k = len(list(grp))
        out.append(f"{a}^{k}" if k > 2 else ",".join([str(a)] * k))
    return ",".join(out)


def _order(g: Graph) -> np.ndarray:
    degs = g.degrees()
    return np.array(sorted(range(g.n), key=lambda v: (-degs[v], v)), dtype=np.int64)


def find_partition(g: Graph, pat: ArrowPattern) -> list[int] | None:
    """A colouring whose class i is K_{a_i}-free, or None if g arrows pat."""
    if pat.s == 0:
        return None
    parts = np.array(pat.parts, dtype=np.int64)
    res = K.find_coloring(g.adj, g.n, parts, _order(g))
    if g.n > 0 and res.shape[0] == 0:
        return None
    return [int(c) for c in res]


def arrows(g: Graph, pat: ArrowPattern) -> bool:
    if pat.s == 0:
        return True
    if pat.s == 1:
        return clique_number(g) >= pat.parts[0]
    return find_partition(g, pat) is None


# independent oracle: enumerate every colouring


def _cliques_of_size(g: Graph, a: int) -> list[int]:
    out = []
    for combo in itertools.combinations(range(g.n), a):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            out.append(sum(1 << v for v in combo))
    return out


def arrows_brute(g: Graph, pat: ArrowPattern, budget: int = 10**8, chunk: int = 1 << 18) -> bool:
    s, n = pat.s, g.n
    if s == 0:
        return True
    total = s**n
    if total > budget:
        raise BudgetError(f"{s}^{n} colourings exceed budget {budget}")
    cliques = {a: np.array(_cliques_of_size(g, a), dtype=np.uint64) for a in set(pat.parts)}
    weights = np.array([1 << v for v in range(n)], dtype=np.uint64)
    powers = np.array([s**v for v in range(n)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % s
        bad = np.zeros(idx.shape[0], dtype=bool)
        for i, a in enumerate(pat.parts):
            cls = ((digits == i).astype(np.uint64) * weights[None, :]).sum(axis=1, dtype=np.uint64)
            cl = cliques[a]
            if cl.size:
                bad |= ((cls[:, None] & cl[None, :]) == cl[None, :]).any(axis=1)
        if not bad.all():
            return False
    return True


def colorable(g: Graph, k: int) -> bool:
    if k <= 0:
        return g.n == 0
    return find_partition(g, ArrowPattern((2,) * k)) is not None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    lo = max(1, clique_number(g))
    hi = _greedy_colours(g)
    # smallest k in [lo, hi] with a proper k-colouring
    while lo < hi:
        mid = (lo + hi) // 2
        if colorable(g, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _greedy_colours(g: Graph) -> int:
    colour: dict[int, int] = {}
    for v in _order(g):
        used = {colour[u] for u in range(g.n) if u in colour and g.has_edge(int(v), u)}
        c = 0
        while c in used:
            c += 1
        colour[int(v)] = c
    return max(colour.values()) + 1


@lru_cache(maxsize=None)
def universal_partitions(m: int, p: int) -> tuple[ArrowPattern, ...]:
    """Patterns with parameter m and parts <= p where no two parts can merge."""
    if m < 2 or p < 2:
        raise ValueError("need m >= 2 and p >= 2")
    cap = p - 1
    found = []

    def rec(rest: int, largest: int, acc: list[int]):
        if rest == 0:
            if all(acc[i] + acc[j] > cap for i in range(len(acc)) for j in range(i + 1, len(acc))):
                found.append(normalize([b + 1 for b in acc]))
            return
        for b in range(min(rest, largest), 0, -1):
            acc.append(b)
            rec(rest - b, b, acc)
            acc.pop()

    rec(m - 1, cap, [])
    return tuple(sorted(set(found)))


def arrows_universal(g: Graph, m: int, p: int) -> bool:
    return all(arrows(g, pat) for pat in universal_partitions(m, p))
