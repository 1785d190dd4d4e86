"""Stage machinery for enumerating maximal K_q-free arrowing graphs.

A chain starts from a seed store of maximal graphs and repeatedly

1. expands every stored graph to all of its edge-deleted subgraphs that are
   still (+K_{q-1}), still arrow the stored pattern and have alpha <= t;
2. glues r new independent vertices onto each such subgraph, one per
   member of an admissible multiset of maximal K_{q-1}-free vertex sets;
3. deduplicates and keeps the results that arrow the next pattern.
"""

from __future__ import annotations

import configparser
import itertools
import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from . import _kernels as K
from .arrowing import ArrowPattern, arrows, format_pattern, parse_pattern
from .canon import GraphStore, canonical_form
from .cliquelib import (
    clique_number,
    has_clique,
    independence_number,
    is_plus_Kt,
    max_degree,
    maximal_Kfree_subsets,
)
from .graphcore import (
    Graph,
    Graph6Error,
    complement,
    complete,
    cycle,
    graph6_decode,
    join,
    read_graph6_file,
)

log = logging.getLogger(__name__)


class ConfigError(ValueError):
    pass


def _threads(threads: int | None) -> int:
    return max(1, threads or os.cpu_count() or 1)


def _keys(arr: np.ndarray) -> list[bytes]:
    return [arr[i].tobytes() for i in range(arr.shape[0])]


REJECT_CACHE = 2_000_000


def _map(fn, items, threads, chunk: int = 4096):
    """Lazy map; with threads, work is submitted one chunk at a time."""
    if threads <= 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(threads) as pool:
        it = iter(items)
        while batch := list(itertools.islice(it, chunk)):
            yield from pool.map(fn, batch)


# ------------------------------------------------------------- closures


def edge_deletion_closure(
    roots: Iterable[Graph],
    accept: Callable[[Graph], bool],
    children: Callable[[Graph], list[bytes]],
    store: GraphStore | None = None,
) -> GraphStore:
    """All graphs reachable from accepted roots by accepted single steps.

    ``accept`` must be monotone along the reverse step (if a graph is
    accepted, so is its parent), which makes the DFS complete.
    """
    seen = store if store is not None else GraphStore()
    # rejected keys are only a cache: dropping it costs rechecks, not results
    rejected: set[bytes] = set()
    stack: list[bytes] = []

    def reject(key: bytes) -> None:
        if len(rejected) >= REJECT_CACHE:
            rejected.clear()
        rejected.add(key)

    for g in roots:
        key = canonical_form(g)
        if seen.contains_key(key) or key in rejected:
            continue
        if accept(g):
            seen.add_key(key)
            stack.append(key)
        else:
            reject(key)
    while stack:
        g = graph6_decode(stack.pop())
        for key in children(g):
            if key in rejected or seen.contains_key(key):
                continue
            if accept(graph6_decode(key)):
                seen.add_key(key)
                stack.append(key)
            else:
                reject(key)
    return seen


def expand_plusK(
    inputs: Iterable[Graph], q: int, alpha_max: int, pattern: ArrowPattern | None = None,
    max_non_neighbors: int | None = None,
) -> GraphStore:
    """(+K_{q-1}) edge-deletion subgraphs with alpha <= alpha_max that arrow ``pattern``.

    ``max_non_neighbors`` prunes graphs with a vertex missing more than that
    many others. Edge deletion only lowers degrees, so the pruning is exact.
    """

    def min_deg(n: int) -> int:
        return 0 if max_non_neighbors is None else n - 1 - max_non_neighbors

    def cheap(g: Graph) -> bool:
        return (
            is_plus_Kt(g, q - 1)
            and independence_number(g) <= alpha_max
            and min(g.degrees(), default=0) >= min_deg(g.n)
        )

    def accept(g: Graph) -> bool:
        return pattern is None or arrows(g, pattern)

    def children(g: Graph) -> list[bytes]:
        return _keys(K.plusk_children(g.adj, g.n, q - 1, alpha_max, independence_number(g),
                                      min_deg(g.n)))

    roots = [g for g in inputs if cheap(g)]
    return edge_deletion_closure(roots, accept, children)


def subgraph_closure(g: Graph, pattern: ArrowPattern, q: int) -> GraphStore:
    """Every edge-deleted subgraph of g (g included) that still arrows ``pattern``."""
    if has_clique(g, q):
        raise ValueError("graph is not K_q-free")
    return edge_deletion_closure(
        [g], lambda h: arrows(h, pattern), lambda h: _keys(K.deletion_children(h.adj, h.n))
    )


def maximal_supergraphs(g: Graph | Iterable[Graph], q: int) -> GraphStore:
    """All maximal K_q-free graphs obtained from g (or from each of several graphs) by adding edges."""
    roots = [g] if isinstance(g, Graph) else list(g)
    out = GraphStore()
    seen: set[bytes] = set()
    stack: list[Graph] = []
    for h in roots:
        if has_clique(h, q):
            raise ValueError("graph is not K_q-free")
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            stack.append(h)
    while stack:
        h = stack.pop()
        kids = _keys(K.addition_children(h.adj, h.n, q))
        if not kids:
            out.insert(h)
            continue
        for key in kids:
            if key not in seen:
                seen.add(key)
                stack.append(graph6_decode(key))
    return out


# ------------------------------------------------------------ extension


@dataclass
class ExtensionStats:
    parents: int = 0
    multisets: int = 0
    candidates: int = 0
    unique: int = 0
    kept: int = 0


def _extend_one(h: Graph, q: int, r: int, t: int) -> tuple[list[bytes], int]:
    subs = np.array(maximal_Kfree_subsets(h, q - 1), dtype=np.uint64)
    keys, admissible = K.extend_parent(h.adj, h.n, q, r, t, subs)
    return _keys(keys), int(admissible)


def extend_general(
    aprime: Iterable[Graph], pattern: ArrowPattern, q: int, r: int, t: int,
    threads: int | None = None, stats: ExtensionStats | None = None,
    extra_filter: Callable[[Graph], bool] | None = None,
) -> GraphStore:
    """Maximal K_q-free graphs arrowing ``pattern`` with r <= alpha <= t.

    ``aprime`` must be the complete (+K_{q-1}) expansion, with alpha <= t,
    of the maximal graphs for the pattern with one part decremented.
    """
    if not 1 <= r <= t:
        raise ConfigError(f"need 1 <= r <= t, got r={r}, t={t}")
    stats = stats if stats is not None else ExtensionStats()
    candidates = GraphStore()
    workers = _threads(threads)

    # parents and candidates are streamed: a (+K) set can run to millions
    for keys, admissible in _map(lambda h: _extend_one(h, q, r, t), aprime, workers):
        stats.parents += 1
        stats.multisets += admissible
        stats.candidates += len(keys)
        candidates.update_keys(keys)
    stats.unique += len(candidates)
    # arrowing last, after isomorph rejection
    out = GraphStore()
    survivors = (g for g in candidates if extra_filter is None or extra_filter(g))

    def judged(g: Graph):
        return g, arrows(g, pattern)

    for g, ok in _map(judged, survivors, workers):
        if ok:
            out.insert(g)
    stats.kept += len(out)
    return out


def extend_alpha2(aprime: Iterable[Graph], pattern: ArrowPattern, q: int, **kw) -> GraphStore:
    """Maximal K_q-free graphs arrowing ``pattern`` with independence number 2.

    With r = t = 2 the sub-multiset conditions reduce to: alpha(H) <= 2,
    alpha(H - M_j) <= 1 for both members, and M_1 | M_2 = V(H).
    """
    return extend_general(aprime, pattern, q, 2, 2, **kw)


# -------------------------------------------------------------- populate


def populate(
    seed: Iterable[Graph], pattern: ArrowPattern, q: int, max_rounds: int | None = None,
) -> tuple[GraphStore, int]:
    """Grow a set of maximal graphs by deleting edges then re-maximalizing.

    Returns the enlarged store and the number of rounds run.  Stops at a
    fixpoint, or after ``max_rounds`` rounds when given.
    """
    current = GraphStore()
    frontier = []
    for g in seed:
        if current.insert(g):
            frontier.append(g)
    explored = GraphStore()
    rounds = 0
    while frontier and (max_rounds is None or rounds < max_rounds):
        rounds += 1
        fresh = GraphStore()
        # only subgraphs not met in earlier rounds need re-maximalizing
        edge_deletion_closure(
            frontier, lambda h: arrows(h, pattern) and explored.add_key(canonical_form(h)),
            lambda h: _keys(K.deletion_children(h.adj, h.n)), store=fresh,
        )
        log.info("populate round %d: %d new subgraphs", rounds, len(fresh))
        new: list[Graph] = []
        for g in maximal_supergraphs(fresh, q):
            if current.insert(g):
                new.append(g)
        frontier = new
    return current, rounds


def filter_catalog(
    lines: Iterable[bytes | str], pattern: ArrowPattern, q: int, lenient: bool = False,
    errors: list[str] | None = None,
) -> GraphStore:
    out = GraphStore()
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, str):
            line = line.encode("ascii", "replace")
        line = line.strip()
        if not line:
            continue
        try:
            g = graph6_decode(line)
        except Graph6Error as exc:
            msg = f"line {lineno}: {exc}"
            if not lenient:
                raise Graph6Error(msg, exc.offset) from exc
            if errors is not None:
                errors.append(msg)
            continue
        if not has_clique(g, q) and arrows(g, pattern):
            out.insert(g)
    return out


# ----------------------------------------------------------- config/runs


_SEED = re.compile(
    r"""^\s*(?:
        K(?P<kn>\d+)(?P<minus>-e)? |
        Cbar(?P<cb>\d+) |
        K(?P<ja>\d+)\+Cbar(?P<jb>\d+) |
        @(?P<file>.+)
    )\s*$""",
    re.X,
)


def seed_graphs(spec: str, base: Path | None = None) -> list[Graph]:
    """Seed grammar: K6, K7-e, Cbar13, K3+Cbar13, @file.g6."""
    mt = _SEED.match(spec)
    if not mt:
        raise ConfigError(f"unrecognised seed {spec!r}")
    if mt["kn"]:
        g = complete(int(mt["kn"]))
        return [g.remove_edge(0, 1)] if mt["minus"] else [g]
    if mt["cb"]:
        return [complement(cycle(int(mt["cb"])))]
    if mt["ja"]:
        return [join(complete(int(mt["ja"])), complement(cycle(int(mt["jb"]))))]
    path = Path(mt["file"])
    if base is not None and not path.is_absolute():
        path = base / path
    try:
        return read_graph6_file(path)
    except OSError as exc:
        raise ConfigError(f"cannot read seed file {path}: {exc}") from exc


@dataclass
class SeedSpec:
    id: str
    graph: str
    pattern: ArrowPattern
    q: int


@dataclass
class StageSpec:
    id: str
    input: str
    pattern: ArrowPattern
    q: int
    n: int | None = None
    mode: str = "general"  # alpha2 | general | populate
    r: int = 2
    t: int = 2
    degree_filter: bool = False
    max_non_neighbors: int | None = None
    rounds: int | None = None

    @property
    def window(self) -> str:
        if self.mode == "populate":
            return "any"
        return f"= {self.t}" if self.r == self.t else f"{self.r}..{self.t}"


@dataclass
class PipelineConfig:
    name: str
    seeds: list[SeedSpec] = field(default_factory=list)
    stages: list[StageSpec] = field(default_factory=list)
    base: Path | None = None

    def validate(self) -> None:
        known: dict[str, tuple[ArrowPattern, int, int | None]] = {}
        for seed in self.seeds:
            graphs = seed_graphs(seed.graph, self.base)
            ns = {g.n for g in graphs}
            known[seed.id] = (seed.pattern, seed.q, ns.pop() if len(ns) == 1 else None)
        for st in self.stages:
            if st.input not in known:
                raise ConfigError(f"stage {st.id}: input {st.input!r} is not a seed or earlier stage")
            if st.id in known:
                raise ConfigError(f"duplicate id {st.id!r}")
            pat, q, n = known[st.input]
            if st.q != q:
                raise ConfigError(f"stage {st.id}: q={st.q} differs from input q={q}")
            if st.q <= st.pattern.p:
                raise ConfigError(f"stage {st.id}: q must exceed max part {st.pattern.p}")
            if st.mode == "populate":
                if st.pattern != pat:
                    raise ConfigError(f"stage {st.id}: populate keeps the input pattern")
                known[st.id] = (pat, q, n)
                continue
            if st.mode == "alpha2":
                st.r = st.t = 2
            elif st.mode != "general":
                raise ConfigError(f"stage {st.id}: unknown mode {st.mode!r}")
            if not 1 <= st.r <= st.t:
                raise ConfigError(f"stage {st.id}: need 1 <= r <= t")
            if n is not None:
                if st.n is None:
                    st.n = n + st.r
                elif st.n != n + st.r:
                    raise ConfigError(f"stage {st.id}: n={st.n} but input n + r = {n + st.r}")
            if pat not in decrements(st.pattern):
                raise ConfigError(
                    f"stage {st.id}: input pattern {format_pattern(pat)} is not "
                    f"{format_pattern(st.pattern)} with one part decremented"
                )
            known[st.id] = (st.pattern, q, st.n)
        # each stage's alpha cap must be honoured by its consumers
        return None


def decrements(pat: ArrowPattern) -> set[ArrowPattern]:
    return {pat.decrement(i) for i in range(pat.s)}


def shipped_config(name: str) -> Path:
    """Path of a config bundled with the package, by file name."""
    path = Path(__file__).parent / "data" / "configs" / name
    if not path.exists():
        raise ConfigError(f"no shipped config named {name}")
    return path


def shipped_configs() -> list[str]:
    return sorted(p.name for p in (Path(__file__).parent / "data" / "configs").glob("*.cfg"))


def load_config(path: str | os.PathLike) -> PipelineConfig:
    path = Path(path)
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    return parse_config(cp, path.stem, path.parent)


def parse_config(cp: configparser.ConfigParser, name: str, base: Path | None) -> PipelineConfig:
    top = cp["pipeline"] if cp.has_section("pipeline") else cp.defaults()
    cfg = PipelineConfig(name=top.get("name", name), base=base)
    default_q = top.get("q")
    try:
        for section in cp.sections():
            if section == "pipeline":
                continue
            kind, _, sid = section.partition(" ")
            sec = cp[section]
            sid = sid.strip()
            if not sid:
                raise ConfigError(f"section [{section}] needs an id")
            q = int(sec.get("q", default_q or 0))
            if q <= 0:
                raise ConfigError(f"section [{section}]: q missing")
            if kind == "seed":
                cfg.seeds.append(SeedSpec(sid, sec["graph"], parse_pattern(sec["pattern"]), q))
            elif kind == "stage":
                mnn = sec.get("max_non_neighbors")
                rounds = sec.get("rounds", "fixpoint")
                cfg.stages.append(
                    StageSpec(
                        id=sid,
                        input=sec["input"],
                        pattern=parse_pattern(sec["pattern"]),
                        q=q,
                        n=int(sec["n"]) if "n" in sec else None,
                        mode=sec.get("mode", "general"),
                        r=int(sec.get("r", 2)),
                        t=int(sec.get("t", 2)),
                        degree_filter=sec.getboolean("degree_filter", False),
                        max_non_neighbors=int(mnn) if mnn else None,
                        rounds=None if rounds == "fixpoint" else int(rounds),
                    )
                )
            else:
                raise ConfigError(f"unknown section kind [{section}]")
    except KeyError as exc:
        raise ConfigError(f"missing key {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


@dataclass
class ReportRow:
    label: str
    window: str
    maximal: int
    plusk: int | None
    seconds: float = 0.0

    def cells(self) -> list[str]:
        return [self.label, self.window, str(self.maximal), "-" if self.plusk is None else str(self.plusk)]


@dataclass
class PipelineReport:
    name: str
    rows: list[ReportRow]

    HEADER = ["set", "alpha", "maximal", "+K(q-1)"]

    def table(self) -> str:
        cells = [self.HEADER] + [r.cells() for r in self.rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(self.HEADER))]
        lines = ["  ".join(c[i].ljust(widths[i]) for i in range(len(c))).rstrip() for c in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"

    def tsv(self) -> str:
        return "".join("\t".join(c) + "\n" for c in [self.HEADER] + [r.cells() for r in self.rows])


def set_label(pattern: ArrowPattern, q: int, n: int | None) -> str:
    return f"H({','.join(map(str, pattern.parts))};{q};{'?' if n is None else n})"


def _node_filter(st: StageSpec) -> Callable[[Graph], bool] | None:
    tests = []
    if st.degree_filter:
        tests.append(lambda g: max_degree(g) <= g.n - 4)
    if st.max_non_neighbors is not None:
        k = st.max_non_neighbors
        tests.append(lambda g: min(g.degrees(), default=0) >= g.n - 1 - k)
    if not tests:
        return None
    return lambda g: all(f(g) for f in tests)


def _check_outputs(store: GraphStore, st: StageSpec) -> None:
    for g in store:
        a = independence_number(g)
        if not (
            clique_number(g) < st.q
            and is_plus_Kt(g, st.q)
            and st.r <= a <= st.t
            and arrows(g, st.pattern)
        ):
            raise AssertionError(f"stage {st.id} produced an invalid graph {g!r}")


def run_pipeline(
    cfg: PipelineConfig, out_dir: str | os.PathLike | None = None, threads: int | None = None,
    verify: bool = True,
) -> PipelineReport:
    cfg.validate()
    out = Path(out_dir) if out_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    stores: dict[str, tuple[GraphStore, ArrowPattern, int, int | None]] = {}
    for seed in cfg.seeds:
        graphs = seed_graphs(seed.graph, cfg.base)
        stores[seed.id] = (GraphStore.from_graphs(graphs), seed.pattern, seed.q,
                           graphs[0].n if graphs else None)
    rows: list[ReportRow] = []
    reported: set[str] = set()

    def emit_plain(sid: str):
        store, pat, q, n = stores[sid]
        if sid not in reported:
            rows.append(ReportRow(set_label(pat, q, n), "-", len(store), None))
            reported.add(sid)

    for st in cfg.stages:
        store, pat, q, n = stores[st.input]
        t0 = time.perf_counter()
        if st.mode == "populate":
            grown, rounds = populate(store, pat, q, st.rounds)
            stores[st.id] = (grown, pat, q, n)
            emit_plain(st.input)
            rows.append(ReportRow(set_label(pat, q, n) + " populated", "any", len(grown), None,
                                  time.perf_counter() - t0))
            reported.add(st.id)
        else:
            extra = _node_filter(st)
            aprime = expand_plusK(store, q, st.t, pat, st.max_non_neighbors)
            rows.append(ReportRow(set_label(pat, q, n), f"<= {st.t}", len(store), len(aprime),
                                  time.perf_counter() - t0))
            reported.add(st.input)
            log.info("stage %s: %d maximal -> %d (+K%d)", st.id, len(store), len(aprime), q - 1)
            t1 = time.perf_counter()
            result = extend_general(aprime, st.pattern, q, st.r, st.t, threads=threads,
                                    extra_filter=extra)
            if verify:
                _check_outputs(result, st)
            stores[st.id] = (result, st.pattern, q, st.n)
            rows.append(ReportRow(set_label(st.pattern, q, st.n), st.window, len(result), None,
                                  time.perf_counter() - t1))
            log.info("stage %s: %d maximal graphs", st.id, len(result))
        if out is not None:
            stores[st.id][0].save(out / f"{st.id}.g6")
    # drop rows for sets that were later expanded (keep the expanded row)
    final: list[ReportRow] = []
    seen_labels: dict[str, int] = {}
    for row in rows:
        if row.label in seen_labels and row.plusk is not None:
            final[seen_labels[row.label]] = row
            continue
        if row.label in seen_labels and row.plusk is None:
            continue
        seen_labels[row.label] = len(final)
        final.append(row)
    report = PipelineReport(cfg.name, final)
    if out is not None:
        (out / "report.txt").write_text(report.table())
        (out / "report.tsv").write_text(report.tsv())
    return report


def iter_stage_file(path: str | os.PathLike) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        for line in fh:
            if line.strip():
                yield graph6_decode(line)
