"""Generators for the counterexample families and their witness cycles.

The base family joins a clique onto a path:

    gk(k) = K_k v P_{2k+1},   clique vertices x1..xk,
                              path (in order) u1..uk, z, vk..v1.

Heavy edges are x_i u_i (1 <= i <= k) and x_i v_i (1 <= i <= k-1), kept in
that fixed order so clique sizes can be assigned per edge unambiguously.
Derived families paste cliques onto the heavy edges (hk), add a shortcut edge
(h_plus), blow path vertices up into cliques with attached independent sets
(s), subdivide the central edge (gkm/hkm), paste a large clique over the
center (jk), or grow one pasted clique for density (dn).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Cycle,
    GraphError,
    LabeledGraph,
    complete_graph,
    cycle_from_edge_set,
    disjoint_union,
    empty_graph,
    join,
    paste_clique,
    path_graph,
)


def heavy_edge_names(k: int) -> list[tuple[str, str]]:
    """Role-name pairs of the heavy edges, in the fixed order."""
    return ([(f"x{i}", f"u{i}") for i in range(1, k + 1)]
            + [(f"x{i}", f"v{i}") for i in range(1, k)])


def build_gk(k: int) -> LabeledGraph:
    """The base graph on 3k+1 vertices: K_k joined to the odd path."""
    if k < 1:
        raise GraphError(f"gk needs k >= 1, got {k}")
    kk = complete_graph(k, [f"x{i}" for i in range(1, k + 1)])
    path_roles = ([f"u{i}" for i in range(1, k + 1)] + ["z"]
                  + [f"v{i}" for i in range(k, 0, -1)])
    g = join(kk, path_graph(2 * k + 1, path_roles))
    heavy = [(g.vertex(a), g.vertex(b)) for a, b in heavy_edge_names(k)]
    return g.with_heavy_edges(heavy)


@dataclass(frozen=True)
class HkSpec:
    """Clique sizes to paste onto the heavy edges of gk(k), in the fixed order."""

    k: int
    clique_sizes: tuple[int, ...]

    def __post_init__(self):
        if self.k < 3:
            raise GraphError(f"hk needs k >= 3, got {self.k}")
        sizes = tuple(self.clique_sizes)
        object.__setattr__(self, "clique_sizes", sizes)
        if len(sizes) != 2 * self.k - 1:
            raise GraphError(
                f"expected {2 * self.k - 1} clique sizes, got {len(sizes)}")
        if any(s < 3 for s in sizes):
            raise GraphError("every pasted clique must have order >= 3")

    @classmethod
    def uniform(cls, k: int, size: int = 3) -> "HkSpec":
        return cls(k, (size,) * (2 * k - 1))

    @property
    def n_result(self) -> int:
        return 3 * self.k + 1 + sum(s - 2 for s in self.clique_sizes)


def build_hk(spec: HkSpec) -> LabeledGraph:
    """Paste one clique per heavy edge of the base graph."""
    g = build_gk(spec.k)
    for i, size in enumerate(spec.clique_sizes):
        g = paste_clique(g, g.heavy_edges[i], size, edge_index=i)
    return g


def build_h_plus(spec: HkSpec) -> LabeledGraph:
    """hk plus the shortcut edge u1 u3 (shortens induced paths)."""
    g = build_hk(spec)
    return g.with_added_edges([(g.vertex("u1"), g.vertex("u3"))])


def pasted_vertices(g: LabeledGraph, edge_index: int) -> list[int]:
    """Vertices of the clique pasted onto heavy edge `edge_index`, by copy order."""
    pref = f"paste{edge_index}."
    vs = g.vertices_with_prefix(pref)
    return sorted(vs, key=lambda v: int(g.roles[v][len(pref):]))


# -- blow-up family -----------------------------------------------------------

def build_r(k: int) -> LabeledGraph:
    """Blow-up core: path cliques F/F' chained through z and vk, joined to the x's.

    Contracting each F_i and F'_i to a point recovers gk(k-1).
    """
    return _blowup(k, with_attachments=False)


def build_s(k: int) -> LabeledGraph:
    """Blow-up with an independent set attached to every heavy clique.

    Each heavy edge x_i u_i of gk(k-1) becomes the clique F_i + {x_i} of order
    k, and an independent set T_i of order k-1 is made complete to it (same on
    the v-side with F'_i and T'_i).  The result has minimum degree k.
    """
    return _blowup(k, with_attachments=True)


def _blowup(k: int, with_attachments: bool) -> LabeledGraph:
    if k < 3:
        raise GraphError(f"blow-up needs k >= 3, got {k}")
    q = k - 1  # order of each blown-up clique

    roles = [f"x{i}" for i in range(1, k)]
    f_block = {}
    fp_block = {}
    for i in range(1, k):
        f_block[i] = list(range(len(roles), len(roles) + q))
        roles += [f"F{i}.{j}" for j in range(1, q + 1)]
    for i in range(1, k - 1):
        fp_block[i] = list(range(len(roles), len(roles) + q))
        roles += [f"F'{i}.{j}" for j in range(1, q + 1)]
    z = len(roles)
    roles.append("z")
    vk = len(roles)
    roles.append(f"v{k}")

    t_block = {}
    tp_block = {}
    if with_attachments:
        for i in range(1, k):
            t_block[i] = list(range(len(roles), len(roles) + q))
            roles += [f"T{i}.{j}" for j in range(1, q + 1)]
        for i in range(1, k - 1):
            tp_block[i] = list(range(len(roles), len(roles) + q))
            roles += [f"T'{i}.{j}" for j in range(1, q + 1)]

    xs = list(range(k - 1))
    edges = []
    edges += [(a, b) for ai, a in enumerate(xs) for b in xs[ai + 1:]]
    for block in list(f_block.values()) + list(fp_block.values()):
        edges += [(a, b) for ai, a in enumerate(block) for b in block[ai + 1:]]
    # chain F_1 .. F_{k-1} - z - vk - F'_{k-2} .. F'_1 (last member to first member)
    for i in range(1, k - 1):
        edges.append((f_block[i][-1], f_block[i + 1][0]))
    edges.append((f_block[k - 1][-1], z))
    edges.append((z, vk))
    edges.append((vk, fp_block[k - 2][0]))
    for i in range(k - 2, 1, -1):
        edges.append((fp_block[i][-1], fp_block[i - 1][0]))
    # the x's are complete to the whole chain
    core = [v for block in f_block.values() for v in block]
    core += [v for block in fp_block.values() for v in block]
    core += [z, vk]
    edges += [(x, v) for x in xs for v in core]
    if with_attachments:
        for i in range(1, k):
            anchor = f_block[i] + [xs[i - 1]]
            edges += [(t, a) for t in t_block[i] for a in anchor]
        for i in range(1, k - 1):
            anchor = fp_block[i] + [xs[i - 1]]
            edges += [(t, a) for t in tp_block[i] for a in anchor]

    return LabeledGraph(len(roles), edges, roles)


def blowup_parts(g: LabeledGraph, k: int, include_attachments: bool = True) -> dict[str, list[int]]:
    """Named blocks of a blow-up graph (F_i, F'_i and, if present, T_i, T'_i)."""
    parts = {}
    for i in range(1, k):
        parts[f"F{i}"] = g.vertices_with_prefix(f"F{i}.")
    for i in range(1, k - 1):
        parts[f"F'{i}"] = g.vertices_with_prefix(f"F'{i}.")
    if include_attachments:
        for i in range(1, k):
            parts[f"T{i}"] = g.vertices_with_prefix(f"T{i}.")
        for i in range(1, k - 1):
            parts[f"T'{i}"] = g.vertices_with_prefix(f"T'{i}.")
    return {name: vs for name, vs in parts.items() if vs}


# -- subdivided family ---------------------------------------------------------

def build_gkm(k: int, m: int) -> LabeledGraph:
    """Replace the edge vk z with the path vk, v_{k+1}, ..., v_{k+m}, z.

    The new vertices are made complete to the x's; heavy edges are unchanged.
    """
    if k < 3:
        raise GraphError(f"gkm needs k >= 3, got {k}")
    if m < 1:
        raise GraphError(f"gkm needs m >= 1, got {m}")
    g = build_gk(k)
    z, vk = g.vertex("z"), g.vertex(f"v{k}")
    edges = [e for e in g.edges() if e != (min(z, vk), max(z, vk))]
    fresh = list(range(g.n, g.n + m))  # v_{k+1} .. v_{k+m}
    chain = [vk] + fresh + [z]
    edges += list(zip(chain, chain[1:]))
    xs = [g.vertex(f"x{i}") for i in range(1, k + 1)]
    edges += [(w, x) for w in fresh for x in xs]
    roles = list(g.roles) + [f"v{k + j}" for j in range(1, m + 1)]
    return LabeledGraph(g.n + m, edges, roles, g.heavy_edges)


def build_hkm(k: int, m: int, clique_sizes) -> LabeledGraph:
    """Paste one clique per heavy edge of gkm(k, m)."""
    sizes = tuple(clique_sizes)
    if len(sizes) != 2 * k - 1:
        raise GraphError(f"expected {2 * k - 1} clique sizes, got {len(sizes)}")
    if any(s < 3 for s in sizes):
        raise GraphError("every pasted clique must have order >= 3")
    g = build_gkm(k, m)
    for i, size in enumerate(sizes):
        g = paste_clique(g, g.heavy_edges[i], size, edge_index=i)
    return g


# -- center-clique family -------------------------------------------------------

def build_jk(k: int, clique_sizes, x_order: int) -> LabeledGraph:
    """hk plus a clique of order x_order pasted onto {x1..xk, z, vk}."""
    if x_order < k + 3:
        raise GraphError(f"x_order must be at least k+3 = {k + 3}, got {x_order}")
    g = build_hk(HkSpec(k, tuple(clique_sizes)))
    anchor = [g.vertex(f"x{i}") for i in range(1, k + 1)]
    anchor += [g.vertex("z"), g.vertex(f"v{k}")]
    extra = list(range(g.n, g.n + x_order - (k + 2)))
    edges = g.edges()
    edges += [(w, a) for w in extra for a in anchor]
    edges += [(a, b) for ai, a in enumerate(extra) for b in extra[ai + 1:]]
    roles = list(g.roles) + [f"X{c}" for c in range(1, len(extra) + 1)]
    return LabeledGraph(g.n + len(extra), edges, roles, g.heavy_edges)


# -- dense family and the dense-graph exceptions --------------------------------

def build_dn(n: int) -> LabeledGraph:
    """The n-vertex member of hk(3) with sizes (3,3,3,3,n-12): C(n-12,2)+37 edges."""
    if n < 15:
        raise GraphError(f"dn needs n >= 15, got {n}")
    return build_hk(HkSpec(3, (3, 3, 3, 3, n - 12)))


def build_hendry_exception(which: int, n: int) -> LabeledGraph:
    """The three dense graphs that are Hamiltonian-adjacent yet fail to extend.

    which=1: K_1 v (K_1 u K_{n-2});  which=2: K_2 v complement(K_3) (n = 5);
    which=3: complement(K_2) v (K_1 u K_{n-3}).
    """
    if n < 5:
        raise GraphError(f"exceptional graphs need n >= 5, got {n}")
    if which == 1:
        return join(complete_graph(1), disjoint_union(complete_graph(1), complete_graph(n - 2)))
    if which == 2:
        if n != 5:
            raise GraphError("exception 2 exists only on 5 vertices")
        return join(complete_graph(2), empty_graph(3))
    if which == 3:
        return join(empty_graph(2), disjoint_union(complete_graph(1), complete_graph(n - 3)))
    raise GraphError(f"unknown exception index {which}")


# -- witness cycles --------------------------------------------------------------

def witness_heavy_ham_cycle(k: int) -> Cycle:
    """A Hamiltonian cycle of gk(k) through every heavy edge.

    The filler edges alternate along the path, with parity deciding whether
    x_k picks up u_1 (k even) or v_1 (k odd).
    """
    if k < 1:
        raise GraphError(f"needs k >= 1, got {k}")
    g = build_gk(k)
    u = {i: g.vertex(f"u{i}") for i in range(1, k + 1)}
    v = {i: g.vertex(f"v{i}") for i in range(1, k + 1)}
    z = g.vertex("z")
    xk = g.vertex(f"x{k}")

    edges = list(g.heavy_edges)
    edges += [(u[k], z), (z, v[k])]
    if k >= 2:
        edges.append((v[k], v[k - 1]))
    if k % 2 == 0:
        edges.append((u[1], xk))
        edges += [(u[i], u[i + 1]) for i in range(2, k - 1, 2)]
        edges += [(v[i], v[i - 1]) for i in range(k - 2, 1, -2)]
    else:
        edges += [(u[i], u[i + 1]) for i in range(1, k - 1, 2)]
        edges += [(v[i], v[i - 1]) for i in range(k - 2, 1, -2)]
        edges.append((v[1], xk))
    return cycle_from_edge_set(g, edges)


def witness_long_heavy_cycle(k: int) -> Cycle:
    """A heavy cycle of gk(k) spanning everything except vk and z."""
    if k < 2:
        raise GraphError(f"needs k >= 2, got {k}")
    g = build_gk(k)
    u = {i: g.vertex(f"u{i}") for i in range(1, k + 1)}
    v = {i: g.vertex(f"v{i}") for i in range(1, k + 1)}
    xk = g.vertex(f"x{k}")

    edges = list(g.heavy_edges)
    if k % 2 == 0:
        edges += [(u[i], u[i + 1]) for i in range(1, k, 2)]
        edges += [(v[i], v[i - 1]) for i in range(k - 1, 1, -2)]
        edges.append((v[1], xk))
    else:
        edges.append((u[1], xk))
        edges += [(u[i], u[i + 1]) for i in range(2, k, 2)]
        edges += [(v[i], v[i - 1]) for i in range(k - 1, 1, -2)]
    return cycle_from_edge_set(g, edges)


def lift_cycle(cycle: Cycle, h: LabeledGraph) -> Cycle:
    """Replace each heavy edge of a heavy cycle by a path through its pasted clique.

    `cycle` must contain every heavy edge of h (as consecutive pairs); the
    lifted cycle picks up every pasted vertex, growing by size-2 per edge.
    """
    heavy_index = {e: i for i, e in enumerate(h.heavy_edges)}
    vs = list(cycle.vertices)
    pairs = list(zip(vs, vs[1:] + vs[:1]))
    present = {(min(a, b), max(a, b)) for a, b in pairs}
    missing = [e for e in h.heavy_edges if e not in present]
    if missing:
        raise GraphError(f"cycle is missing heavy edges {missing}")

    out = []
    for a, b in pairs:
        out.append(a)
        idx = heavy_index.get((min(a, b), max(a, b)))
        if idx is not None:
            out.extend(pasted_vertices(h, idx))
    return Cycle(out).validate(h)


def gk_reference_elimination_order(k: int) -> list[int]:
    """The u's, then the v's, then the x's, then z, as vertex ids of gk(k)."""
    g = build_gk(k)
    names = ([f"u{i}" for i in range(1, k + 1)]
             + [f"v{i}" for i in range(1, k + 1)]
             + [f"x{i}" for i in range(1, k + 1)] + ["z"])
    return [g.vertex(nm) for nm in names]
