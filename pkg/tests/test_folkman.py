import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vfolkman.arrowing import normalize, parse_pattern
from vfolkman.folkman import (
    FolkmanParams,
    NonexistenceError,
    UnknownBaseError,
    alpha_cap,
    bounds,
    case_table_value,
    exists,
    lookup,
    registry,
    sequence_value,
    q_equals_m_extremal,
    q_equals_m_value,
)
from vfolkman.graphcore import complement, cycle, join, complete
from vfolkman.canon import isomorphic

P = parse_pattern


def F(pat, q):
    return FolkmanParams(P(pat), q)


def test_exists():
    assert exists(F("6,6", 7)) and exists(F("2,2,6", 7))
    assert not exists(F("7,7", 7))
    for parts in [(2, 2, 6), (3, 3), (2, 5), (4, 4, 4)]:
        pat = normalize(parts)
        assert exists(FolkmanParams(pat, pat.m - 1)) == (pat.m >= pat.p + 2)


def test_q_equals_m_values():
    assert q_equals_m_value(P("2,6")) == 13
    assert q_equals_m_value(P("2,7")) == 15
    assert q_equals_m_value(P("2,2")) == 5
    with pytest.raises(NonexistenceError):
        q_equals_m_value(P("7"))


def test_q_equals_m_extremal_examples():
    assert isomorphic(q_equals_m_extremal(P("2,6")), complement(cycle(13)))
    g = q_equals_m_extremal(P("3,3"))
    assert g.n == 8 and isomorphic(g, join(complete(1), complement(cycle(7))))
    assert isomorphic(q_equals_m_extremal(P("2,2,3,6")), join(complete(3), complement(cycle(13))))


@pytest.mark.parametrize("pat,q,want", [
    ("2,2,6", 7, "exact 17"),
    ("3,7", 8, "[20, 21]"),
    ("6,6", 7, "[28, 70]"),
    ("2,2,2,2", 4, "exact 11"),
    ("2,2,2", 3, "exact 11"),
    ("3,6", 7, "exact 18"),
])
def test_bounds_examples(pat, q, want):
    assert bounds(F(pat, q)).summary() == want


def test_bounds_4_6_upper():
    assert bounds(F("4,6", 7)).upper == 35


def test_bounds_nonexistent():
    with pytest.raises(NonexistenceError):
        bounds(F("7,7", 7))


def test_bounds_ledger_lists_rules():
    led = bounds(F("3,7", 8))
    tags = [f.tag for f in led.fired]
    assert any("universal" in t for t in tags)
    assert any("m + p + 2" in t for t in tags)
    assert len(led.lines(verbose=True)) >= len(led.lines())
    assert led.best("upper").value == 21


def test_sequence_values():
    assert sequence_value(2, 6, "rp") == 17
    assert sequence_value(5, 6, "rp") == 20
    assert sequence_value(3, 6, "rpp") == 21
    assert all(sequence_value(r, 6, "rp") == r + 15 for r in range(2, 12))
    with pytest.raises(UnknownBaseError):
        sequence_value(2, 9, "rp")
    with pytest.raises(ValueError):
        sequence_value(2, 6, "xx")


def test_alpha_cap():
    assert alpha_cap(F("2,2,6", 7), 17) == 4
    assert alpha_cap(F("2,2,6", 7), 18) == 5
    assert alpha_cap(F("2,2,7", 8), 19) == 4
    with pytest.raises(ValueError):
        alpha_cap(F("2,2,6", 8), 17)


def test_registry_lookups():
    assert lookup(P("2,2,2"), 3) == 11
    assert lookup(P("2,2,7"), 8) == 20
    assert lookup(P("3,6"), 7) == 18
    assert lookup(P("3,6"), 8) is None
    assert any(e.kind == "ramsey" and e.value == 23 for e in registry())


def test_every_registry_value_inside_every_rule():
    for e in registry():
        if e.kind != "exact":
            continue
        led = bounds(FolkmanParams(P(e.key), e.q))
        for f in led.fired:
            if f.kind == "lower":
                assert f.value <= e.value, (e, f)
            elif f.kind == "upper":
                assert e.value <= f.value, (e, f)
            elif f.kind == "exact":
                assert f.value == e.value, (e, f)


def test_case_table_consistency():
    for p in (2, 3, 4, 5):
        for m in range(p + 2, 12):
            v = case_table_value(p, m)
            if v is None:
                continue
            for parts in _patterns_with(m, p):
                pat = normalize(parts)
                hit = lookup(pat, m - 1)
                if hit is not None:
                    assert hit == v
                led = bounds(FolkmanParams(pat, m - 1))
                assert led.lower <= v <= led.upper


def _patterns_with(m, p):
    out = []
    for s in range(1, m):
        for rest in itertools.combinations_with_replacement(range(2, p + 1), s - 1):
            parts = list(rest) + [p]
            if sum(a - 1 for a in parts) + 1 == m:
                out.append(parts)
    return out


@given(st.integers(2, 7), st.integers(0, 5), st.data())
def test_refinement_lower_bound(p, extra, data):
    m = p + 3 + extra
    parts = data.draw(st.sampled_from(_patterns_with(m, p)))
    pat = normalize(parts)
    if pat.s < 2 or pat.parts[-2] < 3:
        return
    finer = normalize([2] * (m - p - 2) + [3, p])
    a = bounds(FolkmanParams(pat, m - 1))
    b = bounds(FolkmanParams(finer, m - 1))
    assert a.lower >= b.lower


@given(st.integers(3, 7), st.integers(0, 6), st.data())
def test_bounds_consistent(p, extra, data):
    m = p + 2 + extra
    pat = normalize(data.draw(st.sampled_from(_patterns_with(m, p))))
    q = data.draw(st.integers(p + 1, m + 1))
    led = bounds(FolkmanParams(pat, q))
    if led.lower is not None and led.upper is not None:
        assert led.lower <= led.upper
    if led.exact is not None:
        assert led.lower <= led.exact <= led.upper
