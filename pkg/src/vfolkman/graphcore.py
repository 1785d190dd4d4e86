"""Immutable simple graphs stored as integer bit rows, plus graph6 I/O."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

CAP = 64


class CapacityError(ValueError):
    pass


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    return list(_bits(mask))


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the neighbourhood of v as a bit mask.  Instances are
    immutable; the mutators return new graphs.
    """

    __slots__ = ("n", "rows", "__dict__")

    def __init__(self, n: int, rows: Iterable[int] = (), *, check: bool = True):
        rows = tuple(rows) if rows else (0,) * n
        if n < 0 or n > CAP:
            raise CapacityError(f"vertex count {n} outside 0..{CAP}")
        if len(rows) != n:
            raise ValueError("row count does not match n")
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full or (r >> v) & 1:
                    raise ValueError(f"row {v} has loop or out-of-range bits")
                for u in _bits(r):
                    if not (rows[u] >> v) & 1:
                        raise ValueError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        if name in ("n", "rows"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @cached_property
    def adj(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint64)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v] & ((1 << v) - 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            low = ~self.rows[v] & ((1 << v) - 1)
            out.extend((u, v) for u in _bits(low))
        return out

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count}, g6={graph6_encode(self).decode()!r})"

    # mutators returning new graphs

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, check=False)

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, check=False)

    def add_vertex_with_neighborhood(self, nbhd: int | Iterable[int]) -> "Graph":
        if self.n + 1 > CAP:
            raise CapacityError(f"vertex count {self.n + 1} exceeds {CAP}")
        mask = nbhd if isinstance(nbhd, int) else mask_of(nbhd)
        if mask & ~self.full:
            raise IndexError("neighbourhood outside vertex range")
        v = self.n
        rows = [r | (((mask >> u) & 1) << v) for u, r in enumerate(self.rows)]
        rows.append(mask)
        return Graph(self.n + 1, rows, check=False)

    def remove_vertices(self, removed: int | Iterable[int]) -> "Graph":
        mask = removed if isinstance(removed, int) else mask_of(removed)
        if mask & ~self.full:
            raise IndexError("vertex outside range")
        keep = [v for v in range(self.n) if not (mask >> v) & 1]
        return self.induced(keep)

    def induced(self, keep: list[int]) -> "Graph":
        """Subgraph on ``keep``, relabelled in the listed order."""
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in _bits(self.rows[v]):
                i = pos.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(keep), rows, check=False)

    def permute(self, perm: list[int]) -> "Graph":
        """Graph in which old vertex v becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in _bits(self.rows[v]))
        return Graph(self.n, rows, check=False)

    def _check_pair(self, u: int, v: int) -> None:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"bad vertex pair {u},{v}")


def complete(k: int) -> Graph:
    if k > CAP:
        raise CapacityError(f"vertex count {k} exceeds {CAP}")
    full = (1 << k) - 1
    return Graph(k, [full & ~(1 << v) for v in range(k)], check=False)


def empty(k: int) -> Graph:
    return Graph(k, [0] * k, check=False)


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [~r & full & ~(1 << v) for v, r in enumerate(g.rows)], check=False)


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n = g1.n, g1.n + g2.n
    if n > CAP:
        raise CapacityError(f"vertex count {n} exceeds {CAP}")
    block2 = ((1 << g2.n) - 1) << n1
    rows = [r | block2 for r in g1.rows] + [(r << n1) | g1.full for r in g2.rows]
    return Graph(n, rows, check=False)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    return Graph(n1 + g2.n, list(g1.rows) + [r << n1 for r in g2.rows])


def remove_vertices(g: Graph, removed) -> Graph:
    return g.remove_vertices(removed)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    return g.remove_edge(u, v)


def add_vertex_with_neighborhood(g: Graph, nbhd) -> Graph:
    return g.add_vertex_with_neighborhood(nbhd)


# graph6


def graph6_encode(g: Graph) -> bytes:
    n = g.n
    if n > 62:
        raise CapacityError("graph6 encoding supports n <= 62")
    out = bytearray([n + 63])
    acc = k = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out)


def graph6_decode(s: bytes | str) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.rstrip(b"\r\n")
    if s.startswith(b">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    n = s[0] - 63
    if s[0] == 126:
        raise Graph6Error("multi-byte vertex counts are not supported", 0)
    if not 0 <= n <= 62:
        raise Graph6Error(f"bad size byte {s[0]}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) != 1 + need:
        raise Graph6Error(f"expected {1 + need} bytes for n={n}, got {len(s)}", min(len(s), 1 + need))
    from . import _kernels

    adj, ok = _kernels.graph6_rows(np.frombuffer(s, dtype=np.uint8), n)
    if ok:
        g = Graph(n, adj.tolist(), check=False)
        g.__dict__["adj"] = adj
        return g
    # slow pass only to locate the offending byte
    rows = [0] * n
    i, j = 0, 1
    for off in range(1, 1 + need):
        c = s[off]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside 63..126", off)
        val = c - 63
        for b in range(5, -1, -1):
            if j >= n:
                if (val >> b) & 1:
                    raise Graph6Error("nonzero padding bits", off)
                continue
            if (val >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows, check=False)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [graph6_decode(line) for line in fh if line.strip()]


def iter_graph6_file(path) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        for line in fh:
            if line.strip():
                yield graph6_decode(line)


def write_graph6_file(path, graphs: Iterable[Graph | bytes]) -> int:
    count = 0
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write((g if isinstance(g, bytes) else graph6_encode(g)) + b"\n")
            count += 1
    return count
