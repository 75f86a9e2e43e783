"""Shared corpus generators for the randomized cross-checks."""

from __future__ import annotations

import itertools
import random

from bergesat.core import Graph, Hypergraph
from bergesat.invariants import make_clique, make_cycle, make_path


def k4_minus_edge() -> Graph:
    edges = [e for e in itertools.combinations(range(4), 2) if e != (2, 3)]
    return Graph(4, tuple(edges))


def small_patterns() -> list[Graph]:
    return [
        make_clique(2),
        make_clique(3),
        make_path(3),
        make_path(4),
        make_cycle(4),
        k4_minus_edge(),
    ]


def random_hypergraph(
    rng: random.Random,
    max_vertices: int = 9,
    max_edges: int = 7,
    max_edge_size: int = 4,
) -> Hypergraph:
    n = rng.randint(3, max_vertices)
    want = rng.randint(0, max_edges)
    edges: set[tuple[int, ...]] = set()
    for _ in range(want * 8):  # bounded attempts; small n may not fit `want`
        if len(edges) == want:
            break
        size = rng.randint(2, min(max_edge_size, n))
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, tuple(sorted(edges)))


def hypergraph_with_dominated_pair(
    rng: random.Random, max_vertices: int = 8
) -> tuple[Hypergraph, int, int]:
    """Random hypergraph plus vertices (u, v) arranged so that every edge
    containing v also contains u."""
    n = rng.randint(4, max_vertices)
    u, v = rng.sample(range(n), 2)
    base = random_hypergraph(rng, max_vertices=n, max_edges=6, max_edge_size=4)
    edges: set[tuple[int, ...]] = set()
    for e in base.edges:
        if v in e and u not in e:
            widened = tuple(sorted(set(e) | {u}))
            edges.add(widened)
        else:
            edges.add(e)
    return Hypergraph(n, tuple(sorted(edges))), u, v
