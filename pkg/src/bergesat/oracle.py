"""Slow, obviously-correct reference algorithms.

``berge_oracle`` decides Berge containment by enumerating every injection of
the pattern vertices and, per injection, every assignment of distinct
hyperedges to pattern edges -- no matching machinery, so it is an
independent ground truth for the fast engine.  ``min_saturation_search``
enumerates all edge subsets of bounded size and is the ground truth for
saturation numbers on tiny instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from . import engine, saturation
from .core import Graph, Hypergraph, add_edge, missing_edges

MAX_ORACLE_PATTERN_EDGES = 6
MAX_ORACLE_HOST_EDGES = 8
MAX_SEARCH_KSETS = 25
MAX_SEARCH_EDGES = 6


def berge_oracle(f: Graph, h: Hypergraph) -> bool:
    """Exhaustive Berge containment test for tiny instances."""
    if len(f.edges) > MAX_ORACLE_PATTERN_EDGES:
        raise ValueError(f"pattern has {len(f.edges)} > {MAX_ORACLE_PATTERN_EDGES} edges")
    if len(h.edges) > MAX_ORACLE_HOST_EDGES:
        raise ValueError(f"host has {len(h.edges)} > {MAX_ORACLE_HOST_EDGES} edges")
    if f.n > h.n:
        return False
    host_sets = [set(e) for e in h.edges]
    fedges = f.edges

    def assign(i: int, placed: dict[int, int], used: list[bool]) -> bool:
        if i == len(fedges):
            return True
        x, y = fedges[i]
        a, b = placed[x], placed[y]
        for j, e in enumerate(host_sets):
            if not used[j] and a in e and b in e:
                used[j] = True
                if assign(i + 1, placed, used):
                    return True
                used[j] = False
        return False

    for injection in itertools.permutations(range(h.n), f.n):
        placed = dict(enumerate(injection))
        if assign(0, placed, [False] * len(host_sets)):
            return True
    return False


def greedy_saturate(h: Hypergraph, f: Graph, k: int, order=None) -> Hypergraph:
    """Add missing k-edges in the given order (lexicographic by default)
    whenever the addition keeps the hypergraph Berge-free; the result is
    saturated, re-certified by a full verification before returning."""
    free, _ = saturation.is_berge_free(h, f)
    if not free:
        raise ValueError("hypergraph already contains the pattern")
    if order is None:
        order = missing_edges(h, k)
    current = h
    present = set(h.edges)
    for e in order:
        t = tuple(sorted(e))
        if t in present:
            continue
        if not engine.creates_new_berge(current, t, f):
            current = add_edge(current, t)
            present.add(t)
    report = saturation.is_saturated(current, f, k)
    if not report.saturated:
        raise RuntimeError("greedy completion failed to certify saturation")
    return current


@dataclass
class SearchResult:
    """Outcome of the exhaustive minimum-saturation search."""

    m_star: int
    witness_h: Hypergraph
    examined: int


def _canonical_form(edge_subset, n: int):
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edge_subset))
        if best is None or relabeled < best:
            best = relabeled
    return best


def _is_saturated_by_oracle(h: Hypergraph, f: Graph, k: int) -> bool:
    if berge_oracle(f, h):
        return False
    # free, so any Berge copy in h + e necessarily uses e
    return all(berge_oracle(f, add_edge(h, e)) for e in missing_edges(h, k))


def min_saturation_search(
    n: int, k: int, f: Graph, m_max: int, isomorph_reject: bool = False
) -> SearchResult | None:
    """Smallest edge count of a saturated k-uniform hypergraph on n vertices,
    by enumerating all edge subsets of size 0..m_max in lexicographic order.

    The witness returned is the lexicographically least subset of minimum
    size.  Isomorph rejection (off by default, so the naive path stays the
    trusted oracle) skips subsets whose canonical relabelling was already
    seen; a skipped subset is isomorphic to an earlier failed one, so the
    result is unchanged.
    """
    if comb(n, k) > MAX_SEARCH_KSETS:
        raise ValueError(f"C({n},{k}) exceeds the cap of {MAX_SEARCH_KSETS} possible edges")
    if m_max > MAX_SEARCH_EDGES:
        raise ValueError(f"m_max={m_max} exceeds the cap of {MAX_SEARCH_EDGES}")
    universe = list(itertools.combinations(range(n), k))
    examined = 0
    seen_canonical = set()
    for m in range(m_max + 1):
        for subset in itertools.combinations(universe, m):
            examined += 1
            if isomorph_reject:
                canon = _canonical_form(subset, n)
                if canon in seen_canonical:
                    continue
                seen_canonical.add(canon)
            h = Hypergraph(n, subset)
            if _is_saturated_by_oracle(h, f, k):
                return SearchResult(m_star=m, witness_h=h, examined=examined)
    return None
