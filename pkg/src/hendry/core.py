"""Core graph types and construction primitives.

Graphs are simple, undirected, on dense integer vertex ids 0..n-1.  Every
vertex carries a role string ("" for untagged) so that generated families can
be addressed by their construction names ("x1", "u2", "z", ...).  A graph may
distinguish a set of heavy edges.  Instances are immutable; all operations
return new graphs.
"""

from __future__ import annotations

import itertools
from collections import deque


class GraphError(ValueError):
    """Structurally invalid graph data or a misused operation."""


class SizeCapError(GraphError):
    """An exact search was asked to exceed its size cap."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


class LabeledGraph:
    """Immutable simple graph with role-tagged vertices and heavy edges."""

    __slots__ = ("n", "roles", "heavy_edges", "_adj", "_masks")

    def __init__(self, n, edges=(), roles=None, heavy_edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = None

        if roles is None:
            roles = ("",) * n
        else:
            roles = tuple(roles)
            if len(roles) != n:
                raise GraphError("roles length does not match vertex count")
        seen = set()
        for r in roles:
            if r:
                if r in seen:
                    raise GraphError(f"duplicate role tag {r!r}")
                seen.add(r)
        self.roles = roles

        heavy = []
        for u, v in heavy_edges:
            e = _norm_edge(u, v)
            if e[1] not in self._adj[e[0]]:
                raise GraphError(f"heavy edge {e} is not an edge of the graph")
            heavy.append(e)
        self.heavy_edges = tuple(heavy)

    # -- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(s) for s in self._adj), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks; cached after first call."""
        if self._masks is None:
            masks = []
            for v in range(self.n):
                m = 0
                for u in self._adj[v]:
                    m |= 1 << u
                masks.append(m)
            self._masks = masks
        return self._masks

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    # -- roles ------------------------------------------------------------

    def vertex(self, role: str) -> int:
        """Id of the vertex tagged `role`; raises if absent."""
        v = self.find_vertex(role)
        if v is None:
            raise GraphError(f"no vertex with role {role!r}")
        return v

    def find_vertex(self, role: str) -> int | None:
        for v, r in enumerate(self.roles):
            if r == role:
                return v
        return None

    def vertices_with_prefix(self, prefix: str) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r.startswith(prefix)]

    # -- derived graphs ---------------------------------------------------

    def with_heavy_edges(self, heavy_edges) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges(), self.roles, heavy_edges)

    def with_added_edges(self, new_edges) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges() + list(new_edges),
                            self.roles, self.heavy_edges)

    def induced(self, vertices) -> tuple["LabeledGraph", list[int]]:
        """Induced subgraph plus the list mapping new ids to old ids."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges()
                 if u in pos and v in pos]
        roles = [self.roles[v] for v in old]
        heavy = [(pos[u], pos[v]) for u, v in self.heavy_edges
                 if u in pos and v in pos]
        return LabeledGraph(len(old), edges, roles, heavy), old

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, m={self.edge_count})"


def same_adjacency(g: LabeledGraph, h: LabeledGraph) -> bool:
    """Labelled equality on adjacency alone (roles and heavy edges ignored)."""
    return g.n == h.n and all(g.neighbors(v) == h.neighbors(v) for v in range(g.n))


# -- small builders --------------------------------------------------------

def complete_graph(n: int, roles=None) -> LabeledGraph:
    edges = list(itertools.combinations(range(n), 2))
    return LabeledGraph(n, edges, roles)


def empty_graph(n: int, roles=None) -> LabeledGraph:
    return LabeledGraph(n, (), roles)


def path_graph(n: int, roles=None) -> LabeledGraph:
    return LabeledGraph(n, [(i, i + 1) for i in range(n - 1)], roles)


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphError("cycle graphs need at least 3 vertices")
    return LabeledGraph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    roles = list(g.roles) + list(h.roles)
    heavy = list(g.heavy_edges) + [(u + off, v + off) for u, v in h.heavy_edges]
    return LabeledGraph(g.n + h.n, edges, roles, heavy)


def join(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Disjoint union plus every edge between the two sides."""
    base = disjoint_union(g, h)
    cross = [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return LabeledGraph(base.n, base.edges() + cross, base.roles, base.heavy_edges)


# -- construction primitives ------------------------------------------------

def paste_clique(g: LabeledGraph, e, r: int, edge_index=None) -> LabeledGraph:
    """Glue a complete graph of order r onto the edge e.

    Adds r-2 fresh vertices adjacent to both ends of e and to each other.
    New vertices are tagged "paste<idx>.<copy>"; idx defaults to the heavy-edge
    index of e when e is heavy, otherwise to the endpoint pair.
    """
    if r < 2:
        raise GraphError(f"pasted clique order must be at least 2, got {r}")
    e = _norm_edge(*e)
    if not g.has_edge(*e):
        raise GraphError(f"cannot paste onto non-edge {e}")
    if edge_index is None:
        if e in g.heavy_edges:
            tag = f"paste{g.heavy_edges.index(e)}"
        else:
            tag = f"paste({e[0]},{e[1]})"
    else:
        tag = f"paste{edge_index}"

    fresh = list(range(g.n, g.n + r - 2))
    edges = g.edges()
    for w in fresh:
        edges.append((e[0], w))
        edges.append((e[1], w))
    edges.extend(itertools.combinations(fresh, 2))
    roles = list(g.roles) + [f"{tag}.{c}" for c in range(r - 2)]
    return LabeledGraph(g.n + r - 2, edges, roles, g.heavy_edges)


def contract_parts(g: LabeledGraph, parts, require_connected: bool = True) -> LabeledGraph:
    """Quotient simple graph: one vertex per part, adjacent iff a cross edge exists.

    Parts must partition V(g).  By default each part must induce a connected
    subgraph; pass require_connected=False to allow quotients over independent
    parts (needed when collapsing the blow-up attachment sets).
    """
    parts = [tuple(p) for p in parts]
    owner = {}
    for i, p in enumerate(parts):
        if not p:
            raise GraphError("empty part in contraction")
        for v in p:
            if v in owner:
                raise GraphError(f"vertex {v} appears in two parts")
            owner[v] = i
    if len(owner) != g.n or any(v not in owner for v in range(g.n)):
        raise GraphError("parts do not partition the vertex set")

    if require_connected:
        for p in parts:
            if not _part_connected(g, p):
                raise GraphError(f"part {p} does not induce a connected subgraph")

    qedges = set()
    for u, v in g.edges():
        pu, pv = owner[u], owner[v]
        if pu != pv:
            qedges.add(_norm_edge(pu, pv))
    return LabeledGraph(len(parts), sorted(qedges))


def _part_connected(g: LabeledGraph, part) -> bool:
    part = set(part)
    start = next(iter(part))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in part and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == part


# -- cycles ------------------------------------------------------------------

class Cycle:
    """Ordered vertex cycle certificate: distinct vertices, length >= 3."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise GraphError("cycle repeats a vertex")
        self.vertices = vs

    def validate(self, g: LabeledGraph) -> "Cycle":
        """Check consecutive (and wrap-around) adjacency in g; returns self."""
        vs = self.vertices
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise GraphError(f"cycle edge ({a},{b}) is not an edge")
        return self

    def edge_set(self) -> set[tuple[int, int]]:
        vs = self.vertices
        return {_norm_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1])}

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return f"Cycle({list(self.vertices)})"


def cycle_from_edge_set(g: LabeledGraph, edges) -> Cycle:
    """Order a degree-2 edge set into a single cycle and validate it against g."""
    nbr: dict[int, list[int]] = {}
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    for v, ns in nbr.items():
        if len(ns) != 2:
            raise GraphError(f"vertex {v} has degree {len(ns)} in the edge set")
    start = min(nbr)
    order = [start, nbr[start][0]]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = nbr[cur][0] if nbr[cur][0] != prev else nbr[cur][1]
        if nxt == start:
            break
        order.append(nxt)
    if len(order) != len(nbr):
        raise GraphError("edge set is not a single cycle")
    return Cycle(order).validate(g)


# -- brute-force isomorphism (small graphs only) ------------------------------

def is_isomorphic(g: LabeledGraph, h: LabeledGraph, cap: int = 10) -> bool:
    """Backtracking isomorphism test, intended for contraction cross-checks."""
    if g.n > cap or h.n > cap:
        raise SizeCapError(f"isomorphism check capped at {cap} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False

    # match rarest-degree vertices first
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i):
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
