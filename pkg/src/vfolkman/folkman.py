"""Closed-form facts about vertex Folkman numbers F_v(a_1..a_s; q).

``bounds`` runs an ordered list of rules and keeps every rule that fired,
so a printed ledger shows where each bound comes from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .arrowing import ArrowPattern, format_pattern, normalize, parse_pattern
from .graphcore import Graph, complement, complete, cycle, join


class NonexistenceError(ValueError):
    pass


class UnknownBaseError(KeyError):
    pass


@dataclass(frozen=True)
class FolkmanParams:
    pattern: ArrowPattern
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")

    def __str__(self) -> str:
        return f"F({format_pattern(self.pattern)};{self.q})"


@dataclass(frozen=True)
class Fired:
    kind: str  # lower | upper | exact
    value: int
    tag: str


@dataclass
class BoundLedger:
    params: FolkmanParams
    fired: list[Fired] = field(default_factory=list)

    @property
    def lower(self) -> int | None:
        vals = [f.value for f in self.fired if f.kind in ("lower", "exact")]
        return max(vals) if vals else None

    @property
    def upper(self) -> int | None:
        vals = [f.value for f in self.fired if f.kind in ("upper", "exact")]
        return min(vals) if vals else None

    @property
    def exact(self) -> int | None:
        ex = [f.value for f in self.fired if f.kind == "exact"]
        if ex:
            return ex[0]
        lo, hi = self.lower, self.upper
        return lo if lo is not None and lo == hi else None

    def best(self, kind: str) -> Fired | None:
        cands = [f for f in self.fired if f.kind in (kind, "exact")]
        if not cands:
            return None
        pick = max if kind == "lower" else min
        return pick(cands, key=lambda f: f.value)

    def summary(self) -> str:
        ex = self.exact
        if ex is not None:
            return f"exact {ex}"
        lo = "?" if self.lower is None else str(self.lower)
        hi = "?" if self.upper is None else str(self.upper)
        return f"[{lo}, {hi}]"

    def lines(self, verbose: bool = False) -> list[str]:
        """Ledger text; without verbose, derived rules are shown only when they win."""
        out = [f"{self.params}: {self.summary()}"]
        lo, hi = self.lower, self.upper
        for f in sorted(self.fired, key=lambda f: (f.kind, f.value, f.tag)):
            derived = f.tag.startswith("via ")
            wins = (f.kind == "lower" and f.value == lo) or (f.kind == "upper" and f.value == hi)
            if verbose or not derived or wins:
                val = "-" if f.kind == "note" else str(f.value)
                out.append(f"  {f.kind:<5} {val:>4}  {f.tag}")
        return out


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class RegistryEntry:
    kind: str
    key: str
    q: int | None
    value: int
    note: str


@lru_cache(maxsize=1)
def registry() -> tuple[RegistryEntry, ...]:
    text = resources.files("vfolkman").joinpath("data/registry.tsv").read_text()
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        kind, key, q, value, note = line.split("\t")
        rows.append(RegistryEntry(kind, key, None if q == "-" else int(q), int(value), note))
    return tuple(rows)


def lookup(pattern: ArrowPattern, q: int) -> int | None:
    for e in registry():
        if e.kind == "exact" and e.q == q and parse_pattern(e.key) == pattern:
            return e.value
    return None


def _seq_param(kind: str, p: int) -> int | None:
    for e in registry():
        if e.kind == kind and int(e.key) == p:
            return e.value
    return None


def _wfv_uppers() -> list[tuple[int, int, int, int]]:
    out = []
    for e in registry():
        if e.kind == "wfv_upper":
            m0, p0 = (int(x) for x in e.key.split(":"))
            out.append((m0, p0, e.q, e.value))
    return out


# ---------------------------------------------------------- basic formulas


def exists(params: FolkmanParams) -> bool:
    return params.q > params.pattern.p


def _require(params: FolkmanParams) -> None:
    if params.pattern.s == 0:
        raise ValueError("empty pattern")
    if not exists(params):
        raise NonexistenceError(f"{params} does not exist: q must exceed {params.pattern.p}")


def q_equals_m_value(pattern: ArrowPattern) -> int:
    """F(pattern; m) = m + p when m >= p + 1."""
    if pattern.m < pattern.p + 1:
        raise NonexistenceError(f"need m >= p + 1 for {format_pattern(pattern)}")
    return pattern.m + pattern.p


def q_equals_m_extremal(pattern: ArrowPattern) -> Graph:
    """The unique smallest K_m-free graph arrowing the pattern: K_{m-p-1} + complement(C_{2p+1})."""
    q_equals_m_value(pattern)
    m, p = pattern.m, pattern.p
    return join(complete(m - p - 1), complement(cycle(2 * p + 1)))


# interface names
theorem1_value = q_equals_m_value
theorem1_extremal = q_equals_m_extremal


def alpha_cap(params: FolkmanParams, n: int) -> int:
    """Largest possible independence number of an n-vertex member when q = m - 1."""
    pat = params.pattern
    if params.q != pat.m - 1:
        raise ValueError("the independence cap applies to q = m - 1")
    return n - pat.m - pat.p + 1


def sequence_value(r: int, p: int, base: str) -> int:
    """F(2_r, p; r+p-1) for base 'rp', or F(2_r, 3, p; r+p+1) for base 'rpp'."""
    if base == "rp":
        r0 = _seq_param("rp", p)
        if r0 is None:
            f22p = lookup(normalize([2, 2, p]), p + 1)
            if f22p is not None and f22p <= 2 * p + 5:
                r0 = 2
        if r0 is None:
            raise UnknownBaseError(f"rp({p}) unknown")
        if r < max(r0, 2):
            raise ValueError(f"formula needs r >= {max(r0, 2)}")
        ref = _exact_direct(normalize([2] * r0 + [p]), r0 + p - 1)
        if ref is None:
            raise UnknownBaseError(f"F(2_{r0},{p};{r0 + p - 1}) unknown")
        return ref[0] + r - r0
    if base == "rpp":
        r0 = _seq_param("rpp", p)
        if r0 is None:
            raise UnknownBaseError(f"rpp({p}) unknown")
        if r < r0:
            raise ValueError(f"formula needs r >= {r0}")
        ref = _exact_direct(normalize([2] * r0 + [3, p]), r0 + p + 1)
        if ref is None:
            raise UnknownBaseError(f"F(2_{r0},3,{p};{r0 + p + 1}) unknown")
        return ref[0] + r - r0
    raise ValueError(f"unknown base {base!r}")


def _case_table(pat: ArrowPattern) -> int | None:
    m, p = pat.m, pat.p
    table = {2: (6, 4), 3: (6, 6), 4: (6, 7), 5: (7, 9)}
    if p in table and m >= table[p][0]:
        return m + table[p][1]
    return None


def _sequence_shape(pat: ArrowPattern) -> tuple[str, int, int] | None:
    """Recognise (2_r, p) and (2_r, 3, p) shapes."""
    parts = list(pat.parts)
    p = parts[-1]
    rest = parts[:-1]
    if all(a == 2 for a in rest):
        return "rp", len(rest), p
    if rest and rest[-1] == 3 and all(a == 2 for a in rest[:-1]):
        return "rpp", len(rest) - 1, p
    return None


@lru_cache(maxsize=None)
def _exact_direct(pat: ArrowPattern, q: int) -> tuple[int, str] | None:
    """Exact values that need no search over other patterns."""
    m, p = pat.m, pat.p
    if pat.s == 0 or q <= p:
        return None
    if q >= m + 1:
        return m, "K_m is the smallest graph arrowing the pattern"
    hit = lookup(pat, q)
    if hit is not None:
        return hit, "registry"
    if q == m:
        return m + p, "q = m: m + p"
    if q == m - 1:
        v = _case_table(pat)
        if v is not None:
            return v, f"q = m-1, p = {p}: case table"
        if p == 6 and m >= 8:
            if all(a == 2 for a in pat.parts[:-1]):
                return m + 9, "q = m-1, p = 6, other parts 2: m + 9"
            return m + 10, "q = m-1, p = 6, a second part >= 3: m + 10"
        shape = _sequence_shape(pat)
        if shape is not None:
            base, r, pp = shape
            if (base == "rp" and r >= 2) or base == "rpp":
                try:
                    return sequence_value(r, pp, base), f"{base} sequence formula"
                except (UnknownBaseError, ValueError):
                    pass
    return None


# ---------------------------------------------------------------- rules


def _direct_rules(pat: ArrowPattern, q: int) -> list[Fired]:
    """Every bound about F(pat; q) that needs no other pattern."""
    m, p = pat.m, pat.p
    out: list[Fired] = []
    ex = _exact_direct(pat, q)
    if ex is not None:
        out.append(Fired("exact", ex[0], ex[1]))
    if q == m - 1 and m >= p + 2:
        if p >= 2:
            out.append(Fired("lower", m + p + 2, "q = m-1: m + p + 2"))
        if p >= 3:
            out.append(Fired("upper", m + 3 * p, "q = m-1: m + 3p"))
            f22p = _exact_direct(normalize([2, 2, p]), p + 1)
            if f22p is not None and f22p[0] >= 2 * p + 5:
                out.append(Fired("lower", m + p + 3, f"q = m-1, F(2,2,{p};{p + 1}) >= 2p+5: m + p + 3"))
        if p == 6:
            out.append(Fired("lower", m + 9, "q = m-1, p = 6: m + 9"))
            out.append(Fired("upper", m + 10, "q = m-1, p = 6: m + 10"))
        if p == 7 and m >= 9:
            out.append(Fired("lower", m + 10, "q = m-1, p = 7: m + 10"))
            out.append(Fired("upper", m + 12, "q = m-1, p = 7: m + 12"))
    if q == 7 and p == 6 and m >= 9:
        out.append(Fired("lower", 3 * m - 5, "q = 7, p = 6, m >= 9: 3m - 5"))
    # universal-arrowing route, shifted along m
    for m0, p0, q0, val in _wfv_uppers():
        if p <= p0 and m >= m0 and q == q0 + (m - m0) and q > min(m0, p0):
            out.append(Fired("upper", val + m - m0, f"universal arrowing uni({m0},{p0}) shifted by {m - m0}"))
    return out


def _divisor_pairs(x: int):
    return [(d, x // d) for d in range(1, x + 1) if x % d == 0]


def _product_rules(pat: ArrowPattern, q: int) -> list[Fired]:
    """F(a; q1+1) * F(b; q2+1) >= F(a.b; q1*q2 + 1), componentwise products."""
    out: list[Fired] = []
    if q < 3:
        return out
    per_part = [_divisor_pairs(c) for c in pat.parts]
    for q1, q2 in _divisor_pairs(q - 1):
        for choice in itertools.product(*per_part):
            a = normalize([x for x, _ in choice])
            b = normalize([y for _, y in choice])
            if a.s == 0 or b.s == 0:
                continue
            fa = _exact_direct(a, q1 + 1)
            fb = _exact_direct(b, q2 + 1)
            if fa is None or fb is None:
                continue
            factors = sorted([f"F({format_pattern(a)};{q1 + 1})", f"F({format_pattern(b)};{q2 + 1})"])
            out.append(Fired("upper", fa[0] * fb[0], "product bound " + " * ".join(factors)))
    return out


def _merges(pat: ArrowPattern) -> set[ArrowPattern]:
    """Patterns obtained by merging two parts (a_i - 1) + (a_j - 1)."""
    out = set()
    parts = list(pat.parts)
    for i, j in itertools.combinations(range(len(parts)), 2):
        rest = parts[:i] + parts[i + 1:j] + parts[j + 1:]
        out.add(normalize(rest + [parts[i] + parts[j] - 1]))
    return out


def _splits(pat: ArrowPattern) -> set[ArrowPattern]:
    out = set()
    parts = list(pat.parts)
    for i, a in enumerate(parts):
        for t in range(2, a):
            out.add(normalize(parts[:i] + parts[i + 1:] + [t, a - t + 1]))
    return out


def _closure(pat: ArrowPattern, step) -> set[ArrowPattern]:
    seen = {pat}
    todo = [pat]
    while todo:
        for nxt in step(todo.pop()):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def bounds(params: FolkmanParams) -> BoundLedger:
    _require(params)
    pat, q = params.pattern, params.q
    ledger = BoundLedger(params)
    fired: dict[tuple[str, int, str], Fired] = {}

    def add(f: Fired):
        fired.setdefault((f.kind, f.value, f.tag), f)

    for f in _direct_rules(pat, q):
        add(f)
    for f in _product_rules(pat, q):
        add(f)
    # every finer pattern (split parts) is arrowed by any graph arrowing pat,
    # and K_q-freeness weakens as q grows: both give lower bounds
    for finer in _closure(pat, _splits):
        for q2 in range(q, finer.m + 2):
            if (finer, q2) == (pat, q):
                continue
            for f in _direct_rules(finer, q2):
                if f.kind in ("lower", "exact"):
                    add(Fired("lower", f.value, f"via F({format_pattern(finer)};{q2}): {f.tag}"))
    # every coarser pattern (merged parts) and every smaller q give upper bounds
    for coarse in _closure(pat, _merges):
        for q2 in range(coarse.p + 1, q + 1):
            if (coarse, q2) == (pat, q):
                continue
            for f in _direct_rules(coarse, q2) + _product_rules(coarse, q2):
                if f.kind in ("upper", "exact"):
                    add(Fired("upper", f.value, f"via F({format_pattern(coarse)};{q2}): {f.tag}"))
    shape = _sequence_shape(pat)
    if shape is not None and q == pat.m - 1:
        add(Fired("note", 0, f"monotone {shape[0]} sequence conjecture (status only, not a rule)"))
    ledger.fired = list(fired.values())
    lo, hi = ledger.lower, ledger.upper
    if lo is not None and hi is not None and lo > hi:
        raise AssertionError(f"inconsistent bounds for {params}: {lo} > {hi}")
    return ledger


def case_table_value(p: int, m: int) -> int | None:
    """m + 4, m + 6, m + 7, m + 9 for p = 2..5 in their validity ranges."""
    return _case_table(ArrowPattern(tuple([2] * (m - p) + [p]))) if m > p else None
