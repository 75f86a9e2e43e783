"""Berge containment search with reproducible witnesses.

A hypergraph contains a Berge copy of a pattern graph F when some injective
placement of V(F) (the core vertices) admits an injective assignment of a
distinct containing hyperedge to every pattern edge.  The search enumerates
core placements by backtracking -- unordered core sets when F is complete,
ordered injections otherwise -- and keeps a bipartite matching between the
already-placed pattern edges and hyperedges incrementally; a partial
placement is abandoned the moment that matching stops being perfect.

Pattern vertices are tried in descending pattern-degree order and host
candidates in descending hyperedge-degree order (ids break ties), and a host
vertex is a candidate for a pattern vertex only if its hyperedge degree is at
least the pattern degree.  All iteration orders are fixed, so the witness
returned for a given input never changes.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .core import Graph, Hypergraph

Edge = tuple[int, ...]


@dataclass(frozen=True)
class SearchConstraints:
    """Restrictions on the witness being searched for.

    required_core must be covered by the core image, forbidden_core must be
    avoided by it, and required_edge (a vertex set naming one hyperedge) must
    appear in the image of the edge assignment.
    """

    required_core: frozenset[int] = frozenset()
    forbidden_core: frozenset[int] = frozenset()
    required_edge: Edge | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "required_core", frozenset(self.required_core))
        object.__setattr__(self, "forbidden_core", frozenset(self.forbidden_core))
        if self.required_core & self.forbidden_core:
            raise ValueError("required_core and forbidden_core overlap")
        if self.required_edge is not None:
            object.__setattr__(self, "required_edge", tuple(sorted(self.required_edge)))


@dataclass
class BergeWitness:
    """An injective core placement plus the pattern-edge -> hyperedge
    assignment certifying a Berge copy."""

    core_map: dict[int, int]
    edge_map: dict[tuple[int, int], Edge]

    def serialize(self) -> str:
        """Stable text block: one ``core:`` line, then one ``edge:`` line per
        pattern edge in lexicographic order."""
        core = " ".join(f"{x}->{w}" for x, w in sorted(self.core_map.items()))
        lines = [f"core: {core}"]
        for (x, y), e in sorted(self.edge_map.items()):
            inner = ",".join(map(str, e))
            lines.append(f"edge: {{{x},{y}}} -> {{{inner}}}")
        return "\n".join(lines) + "\n"


def validate_witness(f: Graph, h: Hypergraph, w: BergeWitness) -> None:
    """Independent witness checker; raises ValueError on any defect.

    Deliberately plain: membership tests only, no search machinery shared
    with the solver.
    """
    if sorted(w.core_map) != list(range(f.n)):
        raise ValueError("core_map does not cover the pattern vertex set")
    images = list(w.core_map.values())
    if len(set(images)) != len(images):
        raise ValueError("core_map is not injective")
    if any(not 0 <= v < h.n for v in images):
        raise ValueError("core_map image out of range")
    if sorted(w.edge_map) != sorted(f.edges):
        raise ValueError("edge_map keys differ from the pattern edge set")
    host = h.edge_set()
    used = set()
    for (x, y), e in w.edge_map.items():
        t = tuple(sorted(e))
        if t not in host:
            raise ValueError(f"assigned hyperedge {set(t)} not in the hypergraph")
        if t in used:
            raise ValueError(f"hyperedge {set(t)} assigned twice")
        used.add(t)
        if w.core_map[x] not in t or w.core_map[y] not in t:
            raise ValueError(f"pattern edge {{{x},{y}}} not contained in {set(t)}")


# ---------------------------------------------------------------------------
# bipartite matching


def max_bipartite_matching(adjacency: list[tuple[int, ...]]) -> list[int]:
    """Hopcroft-Karp maximum matching; O(E sqrt(V)).

    ``adjacency[i]`` lists the right-side ids available to left vertex i.
    Returns the matched right id per left vertex (-1 when unmatched).
    """
    nl = len(adjacency)
    inf = float("inf")
    match_l = [-1] * nl
    match_r: dict[int, int] = {}
    dist = [0.0] * nl

    def bfs() -> bool:
        queue = deque()
        for i in range(nl):
            if match_l[i] == -1:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = inf
        reachable_free = False
        while queue:
            i = queue.popleft()
            for r in adjacency[i]:
                j = match_r.get(r, -1)
                if j == -1:
                    reachable_free = True
                elif dist[j] == inf:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return reachable_free

    def dfs(i: int) -> bool:
        for r in adjacency[i]:
            j = match_r.get(r, -1)
            if j == -1 or (dist[j] == dist[i] + 1 and dfs(j)):
                match_l[i] = r
                match_r[r] = i
                return True
        dist[i] = inf
        return False

    while bfs():
        for i in range(nl):
            if match_l[i] == -1:
                dfs(i)
    return match_l


def edge_assignment(
    demands: list[tuple[int, int]], supply: list[Edge]
) -> tuple[int, ...] | None:
    """Injectively assign each demanded pair an index of a containing
    hyperedge from ``supply``, or None when no perfect assignment exists."""
    adjacency = []
    for u, v in demands:
        adjacency.append(tuple(j for j, e in enumerate(supply) if u in e and v in e))
    match = max_bipartite_matching(adjacency)
    if -1 in match:
        return None
    return tuple(match)


class _Matcher:
    """Incremental matcher used while extending a core placement.

    Demands are pushed in search order; a failed push means the matching on
    the placed pattern edges cannot be perfect, so the caller backtracks and
    restores an earlier snapshot.  Along any live search path the matching is
    perfect, hence no final recomputation is needed.
    """

    __slots__ = ("owner", "assigned", "supplies")

    def __init__(self) -> None:
        self.owner: dict[int, int] = {}  # hyperedge id -> demand index
        self.assigned: list[int] = []  # demand index -> hyperedge id
        self.supplies: list[tuple[int, ...]] = []

    def snapshot(self) -> tuple[dict[int, int], list[int], int]:
        return dict(self.owner), list(self.assigned), len(self.supplies)

    def restore(self, snap: tuple[dict[int, int], list[int], int]) -> None:
        self.owner, self.assigned, depth = snap
        del self.supplies[depth:]

    def push(self, supply: tuple[int, ...]) -> bool:
        self.supplies.append(supply)
        self.assigned.append(-1)
        return self._augment(len(self.supplies) - 1, set())

    def _augment(self, d: int, visited: set[int]) -> bool:
        for e in self.supplies[d]:
            if e in visited:
                continue
            visited.add(e)
            holder = self.owner.get(e, -1)
            if holder == -1 or self._augment(holder, visited):
                self.owner[e] = d
                self.assigned[d] = e
                return True
        return False

    def force_use(self, eid: int) -> bool:
        """Reroute the perfect matching so hyperedge ``eid`` is used."""
        if eid in self.owner:
            return True
        for d, supply in enumerate(self.supplies):
            if eid in supply:
                del self.owner[self.assigned[d]]
                self.owner[eid] = d
                self.assigned[d] = eid
                return True
        return False


# ---------------------------------------------------------------------------
# host index and pattern data


class _Index:
    """Per-hypergraph lookup tables shared by many searches."""

    __slots__ = ("n", "edges", "deg", "pair_edges", "id_of", "_cands")

    def __init__(self, h: Hypergraph) -> None:
        self.n = h.n
        self.edges: list[Edge] = list(h.edges)
        deg = [0] * h.n
        pair_edges: dict[tuple[int, int], list[int]] = {}
        for eid, e in enumerate(self.edges):
            for v in e:
                deg[v] += 1
            for p in itertools.combinations(e, 2):
                pair_edges.setdefault(p, []).append(eid)
        self.deg = deg
        self.pair_edges: dict[tuple[int, int], tuple[int, ...]] = {
            p: tuple(ids) for p, ids in pair_edges.items()
        }
        self.id_of: dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}
        self._cands: dict[int, list[int]] = {}

    def candidates(self, need: int) -> list[int]:
        """Vertices of hyperedge degree >= need, best degree first."""
        cached = self._cands.get(need)
        if cached is None:
            deg = self.deg
            cached = sorted(
                (w for w in range(self.n) if deg[w] >= need),
                key=lambda w: (-deg[w], w),
            )
            self._cands[need] = cached
        return cached


class _Pattern:
    """Pattern graph preprocessed for the search."""

    __slots__ = ("nf", "edges", "deg", "is_clique", "order", "back_edges")

    def __init__(self, f: Graph) -> None:
        self.nf = f.n
        self.edges = list(f.edges)
        self.deg = f.degrees()
        self.is_clique = len(f.edges) == f.n * (f.n - 1) // 2
        order = sorted(range(f.n), key=lambda x: (-self.deg[x], x))
        pos = {x: i for i, x in enumerate(order)}
        back: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in range(f.n)]
        for x, y in f.edges:
            i, j = pos[x], pos[y]
            if i < j:
                back[j].append((i, (x, y)))
            else:
                back[i].append((j, (x, y)))
        self.order = order
        self.back_edges = [sorted(b) for b in back]


# ---------------------------------------------------------------------------
# the search


def _search(
    index: _Index,
    pattern: _Pattern,
    required_core: frozenset[int] = frozenset(),
    forbidden_core: frozenset[int] = frozenset(),
    required_edge: Edge | None = None,
    virtual_edge: Edge | None = None,
    want_witness: bool = True,
):
    """Complete search for one witness; returns BergeWitness, True (when
    want_witness is False), or None.

    ``virtual_edge`` is treated as an extra hyperedge appended to the index
    without rebuilding it, which is how probes over thousands of candidate
    edge additions stay cheap.
    """
    nf = pattern.nf
    n = index.n
    if nf > n:
        return None
    if len(pattern.edges) > len(index.edges) + (virtual_edge is not None):
        return None

    vset: frozenset[int] = frozenset()
    vid = -1
    if virtual_edge is not None:
        vset = frozenset(virtual_edge)
        vid = len(index.edges)

    req_eid = -1
    if required_edge is not None:
        if virtual_edge is not None and required_edge == virtual_edge:
            req_eid = vid
        else:
            req_eid = index.id_of.get(required_edge, -1)
            if req_eid == -1:
                return None
    req_vertices = frozenset(required_edge) if required_edge is not None else None

    pair_edges_get = index.pair_edges.get

    def supply(a: int, b: int) -> tuple[int, ...]:
        p = (a, b) if a < b else (b, a)
        sup = pair_edges_get(p, ())
        if a in vset and b in vset:
            sup += (vid,)
        return sup

    if pattern.is_clique and nf >= 2:
        return _search_clique(
            index, pattern, required_core, forbidden_core,
            req_eid, req_vertices, vset, vid, virtual_edge, supply, want_witness,
        )
    return _search_general(
        index, pattern, required_core, forbidden_core,
        req_eid, req_vertices, vset, vid, virtual_edge, supply, want_witness,
    )


def _search_clique(
    index, pattern, required_core, forbidden_core,
    req_eid, req_vertices, vset, vid, virtual_edge, supply, want_witness,
):
    m = pattern.nf
    deg = index.deg
    need = m - 1
    base = index.candidates(need)
    if vset:
        cands = [w for w in base if w not in forbidden_core]
        cands.extend(w for w in vset if deg[w] == need - 1 and w not in forbidden_core)
        cands.sort(key=lambda w: (-(deg[w] + (w in vset)), w))
    elif forbidden_core:
        cands = [w for w in base if w not in forbidden_core]
    else:
        cands = base
    if len(cands) < m:
        return None
    if required_core and not required_core <= set(cands):
        return None

    matcher = _Matcher()
    chosen: list[int] = []
    ncands = len(cands)

    def rec(pos: int, in_req_edge: int, req_left: int):
        depth = len(chosen)
        if depth == m:
            if req_left:
                return None
            if req_eid >= 0 and not matcher.force_use(req_eid):
                return None
            if not want_witness:
                return True
            return _clique_witness(index, chosen, matcher, vid, virtual_edge)
        if ncands - pos < m - depth or req_left > m - depth:
            return None
        if req_vertices is not None and in_req_edge + (m - depth) < 2:
            return None
        w = cands[pos]
        required = w in required_core if required_core else False
        snap = matcher.snapshot()
        ok = True
        for x in chosen:
            if not matcher.push(supply(x, w)):
                ok = False
                break
        if ok:
            chosen.append(w)
            res = rec(
                pos + 1,
                in_req_edge + (1 if req_vertices and w in req_vertices else 0),
                req_left - required,
            )
            if res:
                return res
            chosen.pop()
        matcher.restore(snap)
        if required:
            return None  # a required vertex cannot be skipped
        return rec(pos + 1, in_req_edge, req_left)

    return rec(0, 0, len(required_core))


def _clique_witness(index, chosen, matcher, vid, virtual_edge):
    m = len(chosen)
    core_sorted = sorted(chosen)
    core_map = {t: core_sorted[t] for t in range(m)}
    pos_of = {v: i for i, v in enumerate(chosen)}
    edge_map: dict[tuple[int, int], Edge] = {}
    for t1 in range(m):
        for t2 in range(t1 + 1, m):
            i, j = pos_of[core_sorted[t1]], pos_of[core_sorted[t2]]
            if i > j:
                i, j = j, i
            eid = matcher.assigned[j * (j - 1) // 2 + i]
            edge_map[(t1, t2)] = _edge_vertices(index, eid, vid, virtual_edge)
    return BergeWitness(core_map, edge_map)


def _edge_vertices(index: _Index, eid: int, vid: int, virtual_edge: Edge | None) -> Edge:
    if eid == vid:
        return virtual_edge
    return index.edges[eid]


def _search_general(
    index, pattern, required_core, forbidden_core,
    req_eid, req_vertices, vset, vid, virtual_edge, supply, want_witness,
):
    nf = pattern.nf
    deg = index.deg
    order = pattern.order
    back = pattern.back_edges
    fdeg = pattern.deg

    if vset:
        host = sorted(range(index.n), key=lambda w: (-(deg[w] + (w in vset)), w))

        def hdeg(w: int) -> int:
            return deg[w] + (w in vset)

    else:
        host = index.candidates(0)

        def hdeg(w: int) -> int:
            return deg[w]

    matcher = _Matcher()
    image = [-1] * nf
    used: set[int] = set()
    demand_edges: list[tuple[int, int]] = []

    def rec(i: int, in_req_edge: int):
        if i == nf:
            if required_core and not required_core <= used:
                return None
            if req_eid >= 0 and not matcher.force_use(req_eid):
                return None
            if not want_witness:
                return True
            core_map = {order[t]: image[t] for t in range(nf)}
            edge_map = {
                fe: _edge_vertices(index, matcher.assigned[d], vid, virtual_edge)
                for d, fe in enumerate(demand_edges)
            }
            return BergeWitness(core_map, edge_map)
        if len(required_core - used) > nf - i:
            return None
        if req_vertices is not None and in_req_edge + (nf - i) < 2:
            return None
        x = order[i]
        dx = fdeg[x]
        for w in host:
            if hdeg(w) < dx:
                break  # host is sorted by descending degree
            if w in used or w in forbidden_core:
                continue
            snap = matcher.snapshot()
            pushed = 0
            ok = True
            for jpos, fe in back[i]:
                if not matcher.push(supply(image[jpos], w)):
                    ok = False
                    break
                demand_edges.append(fe)
                pushed += 1
            if ok:
                image[i] = w
                used.add(w)
                res = rec(i + 1, in_req_edge + (1 if req_vertices and w in req_vertices else 0))
                if res:
                    return res
                used.discard(w)
                image[i] = -1
            matcher.restore(snap)
            del demand_edges[len(demand_edges) - pushed:]
        return None

    return rec(0, 0)


# ---------------------------------------------------------------------------
# public operations


def find_berge_witness(
    f: Graph, h: Hypergraph, constraints: SearchConstraints | None = None
) -> BergeWitness | None:
    """Search for a Berge copy of ``f`` in ``h`` subject to ``constraints``.

    The search is complete: None means no witness exists.  Unsatisfiable
    constraints simply yield None.
    """
    c = constraints or SearchConstraints()
    index = _Index(h)
    pattern = _Pattern(f)
    return _search(
        index,
        pattern,
        required_core=c.required_core,
        forbidden_core=c.forbidden_core,
        required_edge=c.required_edge,
    )


def contains_berge(f: Graph, h: Hypergraph) -> bool:
    return find_berge_witness(f, h) is not None


def creates_new_berge(h: Hypergraph, e, f: Graph) -> bool:
    """True iff adding ``e`` to ``h`` yields a Berge copy of ``f`` whose edge
    assignment uses ``e``."""
    t = tuple(sorted(e))
    if len(t) < 2 or len(set(t)) != len(t):
        raise ValueError(f"not a valid hyperedge: {e}")
    if t[0] < 0 or t[-1] >= h.n:
        raise ValueError(f"edge {set(t)} out of range for n={h.n}")
    if t in h.edge_set():
        raise ValueError(f"edge {set(t)} already present")
    index = _Index(h)
    pattern = _Pattern(f)
    return bool(
        _search(
            index,
            pattern,
            required_edge=t,
            virtual_edge=t,
            want_witness=False,
        )
    )


def is_ell_good(h: Hypergraph, u: int, v: int, ell: int) -> bool:
    """True iff adding the pair ``uv`` creates a new Berge clique on ``ell``
    vertices.  Only requires the 2-edge ``uv`` itself to be absent."""
    from .invariants import make_clique

    if u == v:
        raise ValueError("pair endpoints must differ")
    return creates_new_berge(h, (u, v), make_clique(ell))


@dataclass
class CoreCoverageReport:
    """Outcome of checking every m-subset as a candidate core set."""

    subset_size: int
    checked: int
    failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def all_subsets_are_cores(h: Hypergraph, m: int) -> CoreCoverageReport:
    """Check that every m-subset of the vertex set is exactly the core set of
    some Berge clique on m vertices."""
    from .invariants import make_clique

    if m > h.n:
        raise ValueError(f"subset size {m} exceeds vertex count {h.n}")
    index = _Index(h)
    pattern = _Pattern(make_clique(m))
    report = CoreCoverageReport(subset_size=m, checked=0)
    for subset in itertools.combinations(range(h.n), m):
        report.checked += 1
        found = _search(
            index, pattern, required_core=frozenset(subset), want_witness=False
        )
        if not found:
            report.failures.append(subset)
    return report
