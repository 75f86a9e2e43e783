"""Freeness and saturation verification.

The verifier treats the hypergraph as opaque: full mode walks every missing
k-set in lexicographic order and is the only mode that certifies saturation.
Sampled mode probes a seeded uniform sample of missing k-sets.  Orbit mode
groups missing k-sets by the equal-neighbourhood classes of their vertices
(two vertices are equivalent when each dominates the other, i.e. they lie in
exactly the same edges, so swapping them is an automorphism) and checks one
representative per class -- a large speedup on block-structured inputs, but
deliberately not a certificate.

Missing-edge checks are pure, so they fan out over worker processes in
contiguous lexicographic ranges and merge deterministically: the report is
identical for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import random
import time
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from . import engine
from .core import Graph, Hypergraph, count_missing_edges, is_k_uniform
from .engine import BergeWitness

Edge = tuple[int, ...]

_RANGE_CHUNK = 40_000  # lexicographic ranks per work unit
_LIST_CHUNK = 20_000  # explicit k-sets per work unit


@dataclass
class SaturationReport:
    is_free: bool
    violations_free: list[BergeWitness]
    checked_missing: int
    violations_sat: list[Edge]
    mode: str  # "full" | "sampled" | "orbits"
    elapsed: float = field(default=0.0, compare=False)
    sample_count: int | None = None
    sample_seed: int | None = None
    reduction_factor: float | None = None

    @property
    def saturated(self) -> bool:
        """Certified saturation; only full mode can certify."""
        return self.is_free and not self.violations_sat and self.mode == "full"

    @property
    def no_violations(self) -> bool:
        """Nothing wrong among whatever was checked."""
        return self.is_free and not self.violations_sat


def is_berge_free(h: Hypergraph, f: Graph) -> tuple[bool, BergeWitness | None]:
    w = engine.find_berge_witness(f, h)
    return w is None, w


@dataclass
class PairGoodnessReport:
    checked: int
    good: int
    failures: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.failures


def all_pairs_good(h: Hypergraph, ell: int) -> PairGoodnessReport:
    """Check every vertex pair not already present as a 2-edge: does adding
    it create a new Berge clique on ``ell`` vertices?"""
    from .invariants import make_clique

    index = engine._Index(h)
    pattern = engine._Pattern(make_clique(ell))
    present = h.edge_set()
    report = PairGoodnessReport(checked=0, good=0, failures=[])
    for pair in itertools.combinations(range(h.n), 2):
        if pair in present:
            continue
        report.checked += 1
        found = engine._search(
            index, pattern, required_edge=pair, virtual_edge=pair, want_witness=False
        )
        if found:
            report.good += 1
        else:
            report.failures.append(pair)
    return report


def all_cores_present(h: Hypergraph, ell: int) -> engine.CoreCoverageReport:
    """Every (ell-1)-subset of vertices must be the core set of a Berge
    clique on ell-1 vertices."""
    return engine.all_subsets_are_cores(h, ell - 1)


# ---------------------------------------------------------------------------
# lexicographic rank arithmetic for k-subsets of [0, n)


def _rank_kset(t: Edge, n: int) -> int:
    r = 0
    prev = -1
    k = len(t)
    for i, v in enumerate(t):
        for u in range(prev + 1, v):
            r += comb(n - u - 1, k - i - 1)
        prev = v
    return r


def _unrank_kset(n: int, k: int, rank: int) -> list[int]:
    out = []
    v = 0
    for i in range(k):
        while True:
            c = comb(n - v - 1, k - i - 1)
            if rank < c:
                out.append(v)
                v += 1
                break
            rank -= c
            v += 1
    return out


def _advance_kset(c: list[int], n: int) -> bool:
    """Step to the lexicographic successor in place."""
    k = len(c)
    i = k - 1
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


# ---------------------------------------------------------------------------
# worker machinery (module level so fork-based pools can reach it)

_WORK: dict = {}


def _init_worker(h: Hypergraph, f: Graph, k: int) -> None:
    _WORK["index"] = engine._Index(h)
    _WORK["pattern"] = engine._Pattern(f)
    _WORK["present"] = h.edge_set()
    _WORK["n"] = h.n
    _WORK["k"] = k


def _scan_rank_range(bounds: tuple[int, int]) -> tuple[int, list[Edge]]:
    lo, hi = bounds
    index, pattern = _WORK["index"], _WORK["pattern"]
    present, n, k = _WORK["present"], _WORK["n"], _WORK["k"]
    search = engine._search
    cur = _unrank_kset(n, k, lo)
    checked = 0
    violations: list[Edge] = []
    for _ in range(lo, hi):
        t = tuple(cur)
        if t not in present:
            checked += 1
            if not search(index, pattern, required_edge=t, virtual_edge=t,
                          want_witness=False):
                violations.append(t)
        _advance_kset(cur, n)
    return checked, violations


def _scan_list(ksets: list[Edge]) -> tuple[int, list[Edge]]:
    index, pattern = _WORK["index"], _WORK["pattern"]
    search = engine._search
    violations = [
        t
        for t in ksets
        if not search(index, pattern, required_edge=t, virtual_edge=t,
                      want_witness=False)
    ]
    return len(ksets), violations


def _run_tasks(h, f, k, worker, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        _init_worker(h, f, k)
        return [worker(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs, initializer=_init_worker, initargs=(h, f, k)) as pool:
        return pool.map(worker, tasks)


# ---------------------------------------------------------------------------
# orbit grouping


def _orbit_representatives(h: Hypergraph, k: int) -> list[Edge]:
    """One missing k-set per equal-neighbourhood class multiset.

    Two missing k-sets whose vertices pair up across identical incidence
    classes are related by an automorphism, so one check decides the whole
    class.
    """
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for eid, e in enumerate(h.edges):
        for v in e:
            incident[v].append(eid)
    class_ids: dict[tuple[int, ...], int] = {}
    members: list[list[int]] = []
    class_of = [0] * h.n
    for v in range(h.n):
        key = tuple(incident[v])
        cid = class_ids.get(key)
        if cid is None:
            cid = len(members)
            class_ids[key] = cid
            members.append([])
        class_of[v] = cid
        members[cid].append(v)

    present = h.edge_set()
    edges_per_class = Counter(
        tuple(sorted(class_of[v] for v in e)) for e in h.edges if len(e) == k
    )

    reps: list[Edge] = []
    for multiset in itertools.combinations_with_replacement(range(len(members)), k):
        uniq: list[tuple[int, int]] = []
        for cid, group in itertools.groupby(multiset):
            uniq.append((cid, len(list(group))))
        total = 1
        for cid, mult in uniq:
            total *= comb(len(members[cid]), mult)
        if total == 0:
            continue
        if total - edges_per_class.get(multiset, 0) <= 0:
            continue
        first = tuple(sorted(
            v for cid, mult in uniq for v in members[cid][:mult]
        ))
        if first not in present:
            reps.append(first)
            continue
        # rare: the least member is an existing edge; walk the class lazily
        for picks in itertools.product(
            *(itertools.combinations(members[cid], mult) for cid, mult in uniq)
        ):
            t = tuple(sorted(itertools.chain.from_iterable(picks)))
            if t not in present:
                reps.append(t)
                break
    return reps


# ---------------------------------------------------------------------------
# sampling


def _sample_missing(h: Hypergraph, k: int, count: int, seed: int) -> list[Edge]:
    total = count_missing_edges(h, k)
    existing = sorted(_rank_kset(e, h.n) for e in h.edges if len(e) == k)
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), min(count, total)))

    def missing_rank(idx: int) -> int:
        lo, hi = 0, comb(h.n, k) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid + 1 - bisect_right(existing, mid) >= idx + 1:
                hi = mid
            else:
                lo = mid + 1
        return lo

    return [tuple(_unrank_kset(h.n, k, missing_rank(i))) for i in picks]


# ---------------------------------------------------------------------------
# the verifier


def is_saturated(
    h: Hypergraph,
    f: Graph,
    k: int,
    *,
    jobs: int = 1,
    sample: int | None = None,
    seed: int = 0,
    orbits: bool = False,
) -> SaturationReport:
    """Verify freeness, then check that missing k-sets create new Berge
    copies of ``f``.  Full mode (the default) checks all of them."""
    start = time.perf_counter()
    if not is_k_uniform(h, k):
        raise ValueError(f"hypergraph is not {k}-uniform")
    if sample is not None and orbits:
        raise ValueError("sampled and orbit modes are mutually exclusive")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")

    free, witness = is_berge_free(h, f)
    violations_free = [] if free else [witness]

    reduction = None
    sample_count = None
    sample_seed = None
    if orbits:
        mode = "orbits"
        reps = _orbit_representatives(h, k)
        tasks = [reps[i: i + _LIST_CHUNK] for i in range(0, len(reps), _LIST_CHUNK)]
        results = _run_tasks(h, f, k, _scan_list, tasks, jobs)
        total_missing = count_missing_edges(h, k)
        if reps:
            reduction = total_missing / len(reps)
    elif sample is not None:
        mode = "sampled"
        sample_count = sample
        sample_seed = seed
        picks = _sample_missing(h, k, sample, seed)
        tasks = [picks[i: i + _LIST_CHUNK] for i in range(0, len(picks), _LIST_CHUNK)]
        results = _run_tasks(h, f, k, _scan_list, tasks, jobs)
    else:
        mode = "full"
        total_ranks = comb(h.n, k)
        bounds = [
            (lo, min(lo + _RANGE_CHUNK, total_ranks))
            for lo in range(0, total_ranks, _RANGE_CHUNK)
        ]
        results = _run_tasks(h, f, k, _scan_rank_range, bounds, jobs)

    checked = sum(c for c, _ in results)
    violations_sat: list[Edge] = []
    for _, v in results:
        violations_sat.extend(v)

    return SaturationReport(
        is_free=free,
        violations_free=violations_free,
        checked_missing=checked,
        violations_sat=violations_sat,
        mode=mode,
        elapsed=time.perf_counter() - start,
        sample_count=sample_count,
        sample_seed=sample_seed,
        reduction_factor=reduction,
    )
