import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import all_graphs
from vfolkman.canon import (
    GraphStore,
    StoreError,
    automorphism_count,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    isomorphic,
    store_insert,
    store_merge,
)
from vfolkman.graphcore import Graph, complement, complete, cycle, empty, graph6_decode, join


def _shuffle(g: Graph, rnd: random.Random) -> Graph:
    perm = list(range(g.n))
    rnd.shuffle(perm)
    return g.permute(perm)


def _brute_aut(g: Graph) -> int:
    edges = set(g.edges())
    return sum(
        all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges)
        for p in itertools.permutations(range(g.n))
    )


def test_cycle_permutations():
    rnd = random.Random(1)
    key = canonical_form(cycle(5))
    assert all(canonical_form(_shuffle(cycle(5), rnd)) == key for _ in range(100))


def test_complete_forms_unique():
    keys = {canonical_form(complete(k)) for k in range(12)}
    assert len(keys) == 12


def test_labeling_reproduces_form():
    rnd = random.Random(2)
    for _ in range(50):
        n = rnd.randint(1, 14)
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rnd.random() < 0.4])
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(n))
        inv = [0] * n
        for k, v in enumerate(lab):
            inv[v] = k
        assert g.permute(inv) == canonical_graph(g)


def test_automorphism_examples():
    assert automorphism_count(cycle(5)) == 10
    assert automorphism_count(complete(4)) == 24
    assert automorphism_count(empty(6)) == 720
    assert automorphism_count(complement(cycle(13))) == 26
    assert automorphism_count(join(complete(3), complement(cycle(13)))) == 156


def test_automorphisms_match_brute_n6():
    for g in all_graphs(6):
        assert automorphism_count(g) == _brute_aut(g)


@given(graphs(max_n=20), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd):
    h = _shuffle(g, rnd)
    assert canonical_form(g) == canonical_form(h)
    assert isomorphic(g, h)
    assert graph6_decode(canonical_form(g)).edge_count == g.edge_count


@given(graphs(max_n=9))
def test_aut_divides_factorial(g):
    assert math.factorial(g.n) % automorphism_count(g) == 0


def test_store_n4_classes():
    store = GraphStore()
    pairs = [(u, v) for v in range(4) for u in range(v)]
    for bits in range(1 << 6):
        store_insert(store, Graph.from_edges(4, [e for i, e in enumerate(pairs) if bits >> i & 1]))
    assert len(store) == 11


def test_store_insert_idempotent():
    rnd = random.Random(3)
    store = GraphStore()
    g = complement(cycle(11))
    assert store.insert(g)
    assert not store.insert(_shuffle(g, rnd))
    assert g in store and len(store) == 1


def test_store_hmax_3_7_8():
    store = GraphStore.from_graphs([join(empty(3), complete(5)), join(cycle(4), complete(4))])
    assert len(store) == 2


def test_merge():
    a = GraphStore.from_graphs(all_graphs(4)[:5])
    b = GraphStore.from_graphs(all_graphs(4)[5:])
    c = GraphStore.from_graphs(all_graphs(3))
    assert len(store_merge(a, b)) == 11
    assert list(store_merge(a, b).keys()) == list(store_merge(b, a).keys())
    left = store_merge(store_merge(a, b), c)
    right = store_merge(a, store_merge(b, c))
    assert list(left.keys()) == list(right.keys())


def test_spill_and_iterate(tmp_path):
    store = GraphStore(budget=20, spill_dir=tmp_path)
    for g in all_graphs(5):
        store.insert(g)
    for g in all_graphs(5):
        assert not store.insert(g)
    assert len(store) == 34
    keys = list(store.keys())
    assert keys == sorted(keys) and len(set(keys)) == 34
    assert any(tmp_path.iterdir())
    out = tmp_path / "all.g6"
    assert store.save(out) == 34
    again = GraphStore.load(out)
    assert list(again.keys()) == keys


def test_spill_env(tmp_path, monkeypatch):
    monkeypatch.setenv("VFOLKMAN_SPILL_DIR", str(tmp_path))
    store = GraphStore(budget=3)
    for g in all_graphs(4):
        store.insert(g)
    assert len(store) == 11 and any(tmp_path.iterdir())


def test_spill_failure(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    store = GraphStore(budget=1, spill_dir=blocker)
    with pytest.raises(StoreError):
        for g in all_graphs(3):
            store.insert(g)
