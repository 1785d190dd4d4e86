import itertools

from hypothesis import given

from conftest import graphs
from oracles import all_graphs, brute_clique_number, brute_has_clique_in, brute_maximal_kfree
from vfolkman.cliquelib import (
    clique_number,
    degree_bound_holds,
    has_clique,
    has_clique_within,
    independence_number,
    is_maximal_Kq_free,
    is_plus_Kt,
    max_degree,
    maximal_Kfree_subsets,
)
from vfolkman.graphcore import complement, complete, cycle, empty, join, mask_of, members

K7e = complete(7).remove_edge(0, 1)
CB13 = complement(cycle(13))


def test_clique_examples():
    assert clique_number(CB13) == 6
    assert clique_number(join(complete(1), CB13)) == 7
    assert clique_number(complete(0)) == 0
    assert not has_clique(cycle(5), 3)
    assert has_clique_within(complete(6), 0b11111, 5)
    assert not has_clique(CB13, 7)
    assert has_clique(empty(0), 0) and has_clique(empty(2), 1) and not has_clique(empty(0), 1)


def test_independence_examples():
    assert independence_number(CB13) == 2
    assert all(independence_number(complete(k)) == 1 for k in range(1, 9))


def test_plus_kt_examples():
    assert is_plus_Kt(K7e, 7)
    assert is_plus_Kt(CB13, 6)
    assert is_plus_Kt(cycle(5), 3)
    assert not is_plus_Kt(cycle(6), 3)
    assert is_plus_Kt(complete(5), 9)


def test_maximal_examples():
    assert is_maximal_Kq_free(K7e, 7)
    assert is_maximal_Kq_free(complete(6), 7)
    assert is_maximal_Kq_free(join(empty(3), complete(5)), 7)
    assert is_maximal_Kq_free(join(cycle(4), complete(4)), 7)
    assert not is_maximal_Kq_free(complete(7), 7)


def test_maximal_subsets_examples():
    five = {mask_of(c) for c in itertools.combinations(range(6), 5)}
    assert set(maximal_Kfree_subsets(complete(6), 6)) == five
    assert maximal_Kfree_subsets(cycle(5), 3) == [0b11111]
    pairs = {mask_of(c) for c in itertools.combinations(range(4), 2)}
    assert set(maximal_Kfree_subsets(complete(4), 3)) == pairs


def test_degree_examples():
    assert not degree_bound_holds(complete(5))
    assert all(max_degree(cycle(k)) == 2 for k in range(3, 12))


@given(graphs(max_n=14))
def test_independence_is_complement_clique(g):
    assert independence_number(g) == clique_number(complement(g))


@given(graphs(max_n=10))
def test_maximal_subsets_are_maximal(g):
    for t in range(1, 5):
        subs = maximal_Kfree_subsets(g, t)
        assert len(subs) == len(set(subs))
        for s in subs:
            vs = members(s)
            assert not brute_has_clique_in(g, vs, t)
            for v in range(g.n):
                if v not in vs:
                    assert brute_has_clique_in(g, vs + [v], t)


@given(graphs(max_n=12))
def test_maximal_implies_plus(g):
    for q in range(2, 6):
        if is_maximal_Kq_free(g, q):
            assert is_plus_Kt(g, q)


@given(graphs(max_n=10))
def test_plus_kt_by_definition(g):
    for t in range(3, 6):
        want = all(
            brute_clique_number(g.add_edge(u, v)) >= t
            and any(
                u in c and v in c
                for c in itertools.combinations(range(g.n), t)
                if all(g.add_edge(u, v).has_edge(a, b) for a, b in itertools.combinations(c, 2))
            )
            for u, v in g.non_edges()
        )
        assert is_plus_Kt(g, t) == want


def test_clique_number_all_n7():
    for g in all_graphs(7):
        assert clique_number(g) == brute_clique_number(g)


def test_maximal_subsets_all_small():
    for n in range(1, 7):
        for g in all_graphs(n):
            for t in (2, 3, 4):
                got = {frozenset(members(s)) for s in maximal_Kfree_subsets(g, t)}
                assert got == brute_maximal_kfree(g, t)
