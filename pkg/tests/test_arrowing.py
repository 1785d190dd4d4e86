import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import sat_arrows
from vfolkman.arrowing import (
    ArrowPattern,
    BudgetError,
    arrows,
    arrows_brute,
    arrows_universal,
    chromatic_number,
    find_partition,
    format_pattern,
    normalize,
    parse_pattern,
    universal_partitions,
)
from vfolkman.cliquelib import clique_number, has_clique_within
from vfolkman.graphcore import complement, complete, cycle, empty, join, mask_of

P = parse_pattern


def test_normalize():
    pat = normalize([6, 1, 2])
    assert pat.parts == (2, 6) and (pat.m, pat.p) == (7, 6)
    assert (normalize([2, 2, 6]).m, normalize([2, 2, 6]).p) == (8, 6)
    assert (normalize([2, 2, 7]).m, normalize([2, 2, 7]).p) == (9, 7)
    assert normalize([1, 1]).m == 1
    with pytest.raises(ValueError):
        normalize([0, 3])


def test_parse_and_format():
    assert P("2^3,6") == normalize([2, 2, 2, 6])
    assert P("(2, 2, 6)") == normalize([2, 2, 6])
    assert format_pattern(P("2,2,2,6")) == "2^3,6"
    assert P(format_pattern(P("3,3,5"))) == P("3,3,5")
    with pytest.raises(ValueError):
        P("2,x")


@pytest.mark.parametrize("pat", ["2,2", "3,3", "2,2,6"])
def test_complete_threshold(pat):
    m = P(pat).m
    assert arrows(complete(m), P(pat))
    assert not arrows(complete(m - 1), P(pat))


def test_arrows_examples():
    assert arrows(complement(cycle(13)), P("2,6"))
    assert arrows(cycle(5), P("2,2")) and not arrows(cycle(4), P("2,2"))
    assert arrows(join(complete(2), complement(cycle(7))), P("2,2,3"))


def test_partition_is_a_witness():
    g = cycle(6)
    col = find_partition(g, P("2,2"))
    assert col is not None
    for c, a in enumerate((2, 2)):
        cls = mask_of(v for v in range(g.n) if col[v] == c)
        assert not has_clique_within(g, cls, a)


def test_brute_examples():
    assert arrows_brute(complete(3), P("2,2"))
    assert not arrows_brute(empty(3), P("2,2"))
    with pytest.raises(BudgetError):
        arrows_brute(complete(30), P("2,2,2"))


def test_chromatic_examples():
    assert chromatic_number(complement(cycle(13))) == 7
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(empty(0)) == 0
    assert chromatic_number(empty(4)) == 1


def test_universal_partitions():
    assert set(universal_partitions(9, 7)) == {P("3,7"), P("4,6"), P("5,5")}
    assert universal_partitions(3, 2) == (P("2,2"),)
    assert set(universal_partitions(9, 6)) == {P("4,6"), P("5,5")}


def test_arrows_universal():
    for m, p in [(5, 3), (6, 4), (9, 7)]:
        assert arrows_universal(complete(m), m, p)
        assert not arrows_universal(complete(m - 1), m, p)


def _all_patterns(mmax: int):
    out = set()
    for s in range(1, mmax):
        for parts in itertools.combinations_with_replacement(range(2, mmax + 1), s):
            pat = normalize(parts)
            if pat.m <= mmax:
                out.add(pat)
    return sorted(out)


@given(graphs(max_n=7))
def test_arrows_matches_brute(g):
    for pat in _all_patterns(5):
        assert arrows(g, pat) == arrows_brute(g, pat)


@given(graphs(min_n=8, max_n=16, density=0.7), st.sampled_from(
    [P(x) for x in ["2,2,2", "3,3", "2,4", "2,2,3", "3,4", "2,2,4", "2,5"]]))
def test_arrows_matches_sat(g, pat):
    assert arrows(g, pat) == sat_arrows(g, pat.parts)


@given(graphs(max_n=11), st.integers(2, 6))
def test_single_part_is_clique(g, a):
    assert arrows(g, ArrowPattern((a,))) == (clique_number(g) >= a)


PATS = [P(x) for x in ["2,2", "2,3", "3,3", "2,2,2", "2,4", "2,2,3"]]


@given(graphs(max_n=11, density=0.6), st.sampled_from(PATS), st.data())
def test_monotone_under_edges_and_vertices(g, pat, data):
    if not arrows(g, pat):
        return
    if g.non_edges():
        u, v = data.draw(st.sampled_from(g.non_edges()))
        assert arrows(g.add_edge(u, v), pat)
    assert arrows(g.add_vertex_with_neighborhood(0), pat)


@given(graphs(max_n=11, density=0.6), st.sampled_from(PATS))
def test_chromatic_at_least_m(g, pat):
    if arrows(g, pat):
        assert chromatic_number(g) >= pat.m


@given(graphs(max_n=10, density=0.65), st.sampled_from([P("3,3"), P("2,4"), P("4"), P("2,5")]), st.data())
def test_splitting(g, pat, data):
    if not arrows(g, pat):
        return
    i = data.draw(st.sampled_from([i for i, a in enumerate(pat.parts) if a >= 3] or [None]))
    if i is None:
        return
    a = pat.parts[i]
    t = data.draw(st.integers(2, a - 1))
    rest = list(pat.parts[:i]) + list(pat.parts[i + 1:])
    assert arrows(g, normalize(rest + [t, a - t + 1]))


@given(graphs(max_n=9, density=0.6), st.sampled_from(PATS), st.integers(1, 2))
def test_join_with_clique(g, pat, t):
    if arrows(g, pat):
        assert arrows(join(complete(t), g), normalize([2] * t + list(pat.parts)))


@given(graphs(max_n=8, density=0.6), st.sampled_from(PATS + [P("3"), P("2,2,2,2")]))
def test_removing_independent_set(g, pat):
    if not arrows(g, pat):
        return
    for k in range(1, g.n + 1):
        for A in itertools.combinations(range(g.n), k):
            if any(g.has_edge(u, v) for u, v in itertools.combinations(A, 2)):
                continue
            h = g.remove_vertices(A)
            assert all(arrows(h, pat.decrement(i)) for i in range(pat.s))
