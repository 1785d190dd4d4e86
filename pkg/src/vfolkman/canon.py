"""Canonical labeling and a deduplicating, disk-spilling graph store."""

from __future__ import annotations

import bisect
import heapq
import os
import tempfile
import threading
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .graphcore import Graph, graph6_decode

SPILL_ENV = "VFOLKMAN_SPILL_DIR"
DEFAULT_BUDGET = 10**6


class StoreError(RuntimeError):
    pass


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[k]`` is the vertex of g placed at canonical position k."""
    lab, _, _ = K.canonical_search(g.adj, g.n, g.n + 16)
    return [int(v) for v in lab]


def canonical_form(g: Graph) -> bytes:
    """graph6 key of the canonically relabelled graph."""
    if g.n > 62:
        raise ValueError("canonical keys need n <= 62")
    key, _ = K.canonical_graph6(g.adj, g.n)
    return key.tobytes()


def canonical_graph(g: Graph) -> Graph:
    return graph6_decode(canonical_form(g))


def automorphism_count(g: Graph) -> int:
    gcap = 4 * g.n + 16
    while True:
        _, orbits, status = K.canonical_search(g.adj, g.n, gcap)
        if status == 0:
            break
        gcap *= 4
    total = 1
    for x in orbits:
        total *= int(x)
    return total


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)


# ------------------------------------------------------------------ store


class _Segment:
    """Sorted key file with a sparse in-memory index."""

    STRIDE = 256

    def __init__(self, path: Path, count: int):
        self.path = path
        self.count = count
        self.index_keys: list[bytes] = []
        self.index_offsets: list[int] = []
        with open(path, "rb") as fh:
            off = 0
            for i, line in enumerate(fh):
                if i % self.STRIDE == 0:
                    self.index_keys.append(line.rstrip(b"\n"))
                    self.index_offsets.append(off)
                off += len(line)

    def __contains__(self, key: bytes) -> bool:
        i = bisect.bisect_right(self.index_keys, key) - 1
        if i < 0:
            return False
        with open(self.path, "rb") as fh:
            fh.seek(self.index_offsets[i])
            for _ in range(self.STRIDE):
                line = fh.readline()
                if not line:
                    return False
                k = line.rstrip(b"\n")
                if k == key:
                    return True
                if k > key:
                    return False
        return False

    def __iter__(self) -> Iterator[bytes]:
        with open(self.path, "rb") as fh:
            for line in fh:
                yield line.rstrip(b"\n")


class GraphStore:
    """Set of graphs up to isomorphism, keyed by canonical graph6.

    Inserts are thread-safe (keys are sharded, one lock per shard).  Once
    more than ``budget`` keys sit in memory they are written out as a
    sorted segment under the spill directory; iteration merges memory and
    segments in sorted key order.
    """

    SHARDS = 16

    def __init__(self, budget: int = DEFAULT_BUDGET, spill_dir: str | os.PathLike | None = None):
        self.budget = budget
        self._spill_root = spill_dir or os.environ.get(SPILL_ENV)
        self._spill_dir: Path | None = None
        self._shards: list[set[bytes]] = [set() for _ in range(self.SHARDS)]
        self._locks = [threading.Lock() for _ in range(self.SHARDS)]
        self._spill_lock = threading.Lock()
        self._count_lock = threading.Lock()
        self._mem = 0
        self._segments: list[_Segment] = []

    # core set operations

    def _shard(self, key: bytes) -> int:
        return hash(key) % self.SHARDS

    def add_key(self, key: bytes) -> bool:
        i = self._shard(key)
        with self._locks[i]:
            shard = self._shards[i]
            if key in shard:
                return False
            if self._segments and any(key in seg for seg in self._segments):
                return False
            shard.add(key)
            with self._count_lock:
                self._mem += 1
                over = self._mem > self.budget
        if over:
            self._spill()
        return True

    def insert(self, g: Graph) -> bool:
        return self.add_key(canonical_form(g))

    def contains_key(self, key: bytes) -> bool:
        i = self._shard(key)
        with self._locks[i]:
            if key in self._shards[i]:
                return True
        return any(key in seg for seg in self._segments)

    def __contains__(self, g: Graph) -> bool:
        return self.contains_key(canonical_form(g))

    def __len__(self) -> int:
        return self._mem + sum(seg.count for seg in self._segments)

    def keys(self) -> Iterator[bytes]:
        """All keys in sorted order."""
        mem = sorted(k for shard in self._shards for k in shard)
        if not self._segments:
            return iter(mem)
        return heapq.merge(mem, *self._segments)

    def __iter__(self) -> Iterator[Graph]:
        return (graph6_decode(k) for k in self.keys())

    def graphs(self) -> list[Graph]:
        return list(self)

    def update_keys(self, keys: Iterable[bytes]) -> int:
        return sum(self.add_key(k) for k in keys)

    # persistence

    def _spill(self) -> None:
        with self._spill_lock:
            for lock in self._locks:
                lock.acquire()
            try:
                if self._mem <= self.budget:
                    return
                keys = sorted(k for shard in self._shards for k in shard)
                try:
                    if self._spill_dir is None:
                        self._spill_dir = Path(tempfile.mkdtemp(prefix="store-", dir=self._spill_root))
                    path = self._spill_dir / f"segment-{len(self._segments):05d}.g6"
                    with open(path, "wb") as fh:
                        fh.writelines(k + b"\n" for k in keys)
                except OSError as exc:
                    raise StoreError(f"spill under {self._spill_root or self._spill_dir} failed: {exc}") from exc
                self._segments.append(_Segment(path, len(keys)))
                for shard in self._shards:
                    shard.clear()
                self._mem = 0
            finally:
                for lock in self._locks:
                    lock.release()

    def save(self, path: str | os.PathLike) -> int:
        count = 0
        try:
            with open(path, "wb") as fh:
                for k in self.keys():
                    fh.write(k + b"\n")
                    count += 1
        except OSError as exc:
            raise StoreError(f"writing {path} failed: {exc}") from exc
        return count

    @classmethod
    def load(cls, path: str | os.PathLike, canonicalize: bool = True, **kw) -> "GraphStore":
        store = cls(**kw)
        with open(path, "rb") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                if canonicalize:
                    store.insert(graph6_decode(line))
                else:
                    store.add_key(line)
        return store

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], **kw) -> "GraphStore":
        store = cls(**kw)
        for g in graphs:
            store.insert(g)
        return store


def store_insert(store: GraphStore, g: Graph) -> bool:
    return store.insert(g)


def store_merge(s1: GraphStore, s2: GraphStore) -> GraphStore:
    out = GraphStore(budget=max(s1.budget, s2.budget))
    for k in heapq.merge(s1.keys(), s2.keys()):
        out.add_key(k)
    return out


def canonical_keys(graph_rows: np.ndarray, n: int) -> list[bytes]:
    """Canonical keys for a stack of adjacency row arrays of equal order."""
    return [K.canonical_graph6(graph_rows[i], n)[0].tobytes() for i in range(graph_rows.shape[0])]
