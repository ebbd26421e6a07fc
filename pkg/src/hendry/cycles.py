"""Exact cyclability engine: which vertex subsets carry a spanning cycle.

Two exact mechanisms back every predicate here:

* a subset dynamic program over Hamiltonian paths anchored at the minimum
  vertex of each subset (the cyclable table), bounded by a hard size cap
  because it stores one endpoint word per subset; and
* a backtracking search for cycles spanning a fixed vertex set, with forced
  edges (heavy edges, or edges implied by degree-2 vertices) propagated up
  front, plus degree, connectivity and twin-symmetry pruning.  The search is
  exhaustive, so a miss is a proof of nonexistence.

Cycle extendibility is decided on vertex subsets: a cycle with vertex set S
exists iff S is cyclable, and extending by one vertex is a superset question.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from itertools import combinations

from .core import Cycle, GraphError, LabeledGraph, SizeCapError

DEFAULT_SUBSET_CAP = 24
HARD_SUBSET_CAP = 26
BACKTRACK_CAP = 40
HEAVY_SET_CAP = 20


def subset_cap() -> int:
    """Current cap for full subset tables (HENDRY_SUBSET_CAP, bounded at 26)."""
    raw = os.environ.get("HENDRY_SUBSET_CAP")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        val = int(raw)
    except ValueError:
        raise GraphError(f"HENDRY_SUBSET_CAP must be an integer, got {raw!r}")
    return max(3, min(val, HARD_SUBSET_CAP))


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits_of(mask) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


# -- subset dynamic program ---------------------------------------------------

class CyclableTable:
    """Per-subset Hamiltonicity oracle for one graph.

    ends[S] holds the endpoints e for which G[S] has a Hamiltonian path from
    min(S) to e; S is cyclable iff one of those endpoints sees min(S) back.
    """

    def __init__(self, g: LabeledGraph, ends: array):
        self.graph = g
        self.n = g.n
        self._ends = ends
        self._adj = g.adjacency_masks()

    def _as_mask(self, subset) -> int:
        return subset if isinstance(subset, int) else _mask_of(subset)

    def endpoints(self, subset) -> int:
        return self._ends[self._as_mask(subset)]

    def cyclable(self, subset) -> bool:
        mask = self._as_mask(subset)
        if mask.bit_count() < 3:
            return False
        anchor = (mask & -mask).bit_length() - 1
        return bool(self._ends[mask] & self._adj[anchor])

    def iter_cyclable(self):
        """Cyclable subsets as masks, in increasing numeric (subset-index) order."""
        ends = self._ends
        adj = self._adj
        for mask in range(7, 1 << self.n):
            e = ends[mask]
            if e and mask.bit_count() >= 3 and e & adj[(mask & -mask).bit_length() - 1]:
                yield mask

    def extension_candidates(self, subset) -> list[int]:
        mask = self._as_mask(subset)
        if not self.cyclable(mask):
            raise GraphError("subset is not cyclable")
        out = []
        for v in range(self.n):
            if not (mask >> v) & 1 and self.cyclable(mask | (1 << v)):
                out.append(v)
        return out

    def cycle_for(self, subset) -> Cycle | None:
        """An explicit spanning cycle of the subset, rebuilt from the table."""
        mask = self._as_mask(subset)
        if not self.cyclable(mask):
            return None
        adj = self._adj
        anchor = (mask & -mask).bit_length() - 1
        end = (self._ends[mask] & adj[anchor])
        cur = (end & -end).bit_length() - 1
        seq = [cur]
        cur_mask = mask
        while cur != anchor:
            prev_mask = cur_mask ^ (1 << cur)
            preds = self._ends[prev_mask] & adj[cur]
            cur = (preds & -preds).bit_length() - 1
            seq.append(cur)
            cur_mask = prev_mask
        return Cycle(reversed(seq)).validate(self.graph)


def build_cyclable_table(g: LabeledGraph, cap: int | None = None) -> CyclableTable:
    """Run the anchored Hamiltonian-path DP over every subset of V(g)."""
    cap = subset_cap() if cap is None else cap
    n = g.n
    if n > cap:
        raise SizeCapError(
            f"subset table needs 2^{n} entries; cap is {cap} vertices")
    adj = g.adjacency_masks()
    size = 1 << n
    ends = array("q", bytes(8 * size))
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(3, size):
        low = mask & -mask
        rest = mask ^ low
        if not rest:
            continue
        res = 0
        mm = rest
        while mm:
            eb = mm & -mm
            mm ^= eb
            if ends[mask ^ eb] & adj[eb.bit_length() - 1]:
                res |= eb
        ends[mask] = res
    return CyclableTable(g, ends)


# -- backtracking search ------------------------------------------------------

def _propagate_forced(allowed: list[int], forced: list[int], m: int) -> bool:
    """Close forced edges under degree-2 reasoning; False when infeasible."""
    changed = True
    while changed:
        changed = False
        for v in range(m):
            av = allowed[v]
            rest = av
            while rest:
                bit = rest & -rest
                rest ^= bit
                u = bit.bit_length() - 1
                if forced[u].bit_count() >= 2 and not (forced[u] >> v) & 1:
                    av &= ~bit
            if av != allowed[v]:
                allowed[v] = av
                changed = True
            if forced[v] & ~av or forced[v].bit_count() > 2:
                return False
            if av.bit_count() < 2:
                return False
            if av.bit_count() == 2 and forced[v] != av:
                extra = av & ~forced[v]
                forced[v] = av
                while extra:
                    bit = extra & -extra
                    extra ^= bit
                    u = bit.bit_length() - 1
                    if not (forced[u] >> v) & 1:
                        forced[u] |= 1 << v
                changed = True
    return True


def _forced_cycle_check(forced: list[int], m: int):
    """(verdict, cycle): verdict False kills the search; cycle is a full tour."""
    seen = [False] * m
    for s in range(m):
        if seen[s] or not forced[s]:
            continue
        if forced[s].bit_count() == 2:
            # walk the forced chain both ways; detect closure
            seq = [s]
            seen[s] = True
            prev, cur = s, (forced[s] & -forced[s]).bit_length() - 1
            closed = False
            while True:
                if cur == s:
                    closed = True
                    break
                seq.append(cur)
                seen[cur] = True
                nxt_mask = forced[cur] & ~(1 << prev)
                if not nxt_mask or forced[cur].bit_count() < 2:
                    break
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
            if closed:
                if len(seq) == m:
                    return True, seq
                return False, None
    return True, None


def _twin_classes(allowed: list[int], m: int) -> tuple[list[int], list[int]]:
    """Interchangeable-vertex classes: equal closed or equal open neighborhoods."""
    class_of = [-1] * m
    masks: list[int] = []
    groups: dict[tuple, list[int]] = {}
    for v in range(m):
        groups.setdefault(("c", allowed[v] | (1 << v)), []).append(v)
    for key, vs in sorted(groups.items()):
        if len(vs) > 1:
            idx = len(masks)
            masks.append(_mask_of(vs))
            for v in vs:
                class_of[v] = idx
    groups = {}
    for v in range(m):
        if class_of[v] < 0:
            groups.setdefault(("o", allowed[v]), []).append(v)
    for key, vs in sorted(groups.items()):
        vs = [v for v in vs if class_of[v] < 0]
        if len(vs) > 1:
            idx = len(masks)
            masks.append(_mask_of(vs))
            for v in vs:
                class_of[v] = idx
    return class_of, masks


def _spanning_cycle_search(adj_masks: list[int], m: int, forced_pairs,
                           count_all: bool, use_twins: bool):
    """Count (or find) cycles through all m vertices and all forced pairs.

    Returns (count, tour) where tour is a local-id sequence or None.  In
    existence mode (count_all=False) the count is capped at 1.
    """
    if m < 3:
        return 0, None
    allowed = list(adj_masks)
    forced = [0] * m
    for a, b in forced_pairs:
        forced[a] |= 1 << b
        forced[b] |= 1 << a
    for v in range(m):
        if forced[v] & ~allowed[v]:
            return 0, None
    if not _propagate_forced(allowed, forced, m):
        return 0, None
    ok, tour = _forced_cycle_check(forced, m)
    if not ok:
        return 0, None
    if tour is not None:
        return 1, tour

    if use_twins and not count_all:
        class_of, class_masks = _twin_classes(allowed, m)
    else:
        class_of, class_masks = [-1] * m, []

    # independent classes with a shared neighborhood bound the search: every
    # unvisited member still needs two edges into that neighborhood
    indep_classes = []
    seen_nbhd: dict[int, int] = {}
    for v in range(m):
        seen_nbhd[allowed[v]] = seen_nbhd.get(allowed[v], 0) | (1 << v)
    for nmask, amask in sorted(seen_nbhd.items()):
        if amask.bit_count() >= 2:
            indep_classes.append((amask, nmask))

    full = (1 << m) - 1
    start = 0
    if not count_all:
        start = min(range(m), key=lambda v: (allowed[v].bit_count(), v))
    start_bit = 1 << start

    found = [0, None]
    path = [start]

    def dfs(v, visited):
        if visited == full:
            if (allowed[v] >> start) & 1:
                fs = forced[start] & ~((1 << path[1]) | (1 << v))
                if fs:
                    return False
                if count_all:
                    if path[1] < path[-1]:
                        found[0] += 1
                        if found[1] is None:
                            found[1] = list(path)
                    return False
                found[0] = 1
                found[1] = list(path)
                return True
            return False

        fu = forced[v] & ~visited
        if v == start and fu.bit_count() == 1:
            # a single forced edge at the start may serve as the closing edge
            # instead of the first step; the closure check enforces its use
            cand = allowed[v] & ~visited
        else:
            cand = fu if fu else allowed[v] & ~visited

        rest = full & ~visited
        for amask, nmask in indep_classes:
            u_cnt = (amask & rest).bit_count()
            if not u_cnt:
                continue
            cap = 2 * (nmask & rest).bit_count()
            if v == start:
                cap += 2 * ((nmask >> v) & 1)  # next edge and closure edge
            else:
                cap += ((nmask >> v) & 1) + ((nmask >> start) & 1)
            if 2 * u_cnt > cap:
                return False

        # every unvisited vertex still needs two usable connections
        rr = rest
        while rr:
            bit = rr & -rr
            rr ^= bit
            u = bit.bit_length() - 1
            au = allowed[u]
            avail = (au & rest & ~bit).bit_count() + ((au >> v) & 1)
            if v != start:
                avail += (au >> start) & 1
            if avail < 2:
                return False

        # the unexplored region plus both chain ends must be one piece
        region = rest | (1 << v) | start_bit
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            ff = frontier
            while ff:
                bit = ff & -ff
                ff ^= bit
                nxt |= allowed[bit.bit_length() - 1]
            nxt &= region & ~seen
            seen |= nxt
            frontier = nxt
        if seen != region:
            return False

        order = sorted(_bits_of(cand),
                       key=lambda w: ((allowed[w] & ~visited).bit_count(), w))
        for w in order:
            cls = class_of[w]
            if cls >= 0:
                unvisited_cls = class_masks[cls] & ~visited
                if (unvisited_cls & -unvisited_cls).bit_length() - 1 != w:
                    continue
            wbit = 1 << w
            new_visited = visited | wbit
            viol = forced[w] & visited & ~(1 << v)
            if viol and not (viol == start_bit and new_visited == full):
                continue
            if (forced[w] & ~new_visited).bit_count() >= 2:
                continue
            path.append(w)
            stop = dfs(w, new_visited)
            path.pop()
            if stop:
                return True
        return False

    dfs(start, start_bit)
    return found[0], found[1]


def _run_on_subset(g: LabeledGraph, subset, forced_edges, count_all, use_twins, cap):
    vs = sorted(set(subset))
    if any(not 0 <= v < g.n for v in vs):
        raise GraphError("subset contains invalid vertex ids")
    if len(vs) > cap:
        raise SizeCapError(
            f"spanning-cycle search capped at {cap} vertices, got {len(vs)}")
    pos = {v: i for i, v in enumerate(vs)}
    sub_mask = _mask_of(vs)
    adj = g.adjacency_masks()
    local_adj = []
    for v in vs:
        mask = 0
        av = adj[v] & sub_mask
        while av:
            bit = av & -av
            av ^= bit
            mask |= 1 << pos[bit.bit_length() - 1]
        local_adj.append(mask)
    local_forced = []
    for a, b in forced_edges:
        if a not in pos or b not in pos:
            return 0, None  # a forced edge leaves the subset: nothing qualifies
        local_forced.append((pos[a], pos[b]))
    count, tour = _spanning_cycle_search(local_adj, len(vs), local_forced,
                                         count_all, use_twins)
    cycle = Cycle(vs[i] for i in tour).validate(g) if tour else None
    return count, cycle


# -- public operations ---------------------------------------------------------

def is_cyclable(g: LabeledGraph, subset=None, cap: int | None = None) -> bool:
    """Does the induced subgraph on `subset` (default all of V) have a spanning cycle?"""
    cap = subset_cap() if cap is None else cap
    subset = range(g.n) if subset is None else subset
    count, _ = _run_on_subset(g, subset, (), count_all=False, use_twins=True, cap=cap)
    return count > 0


def hamiltonian_cycle(g: LabeledGraph, subset=None, cap: int | None = None) -> Cycle | None:
    """An explicit spanning cycle of `subset`, or None when there is none."""
    cap = subset_cap() if cap is None else cap
    subset = range(g.n) if subset is None else subset
    _, cycle = _run_on_subset(g, subset, (), count_all=False, use_twins=True, cap=cap)
    return cycle


def find_spanning_cycle(g: LabeledGraph, subset, cap: int = BACKTRACK_CAP) -> Cycle | None:
    """Exhaustive backtracking cyclability for sets beyond the table cap.

    Used for the targeted blow-up queries, where the structure (twins and
    near-forced attachment sets) keeps the search small even past 30 vertices.
    """
    _, cycle = _run_on_subset(g, subset, (), count_all=False, use_twins=True, cap=cap)
    return cycle


def heavy_cycles_on(g: LabeledGraph, subset, cap: int = HEAVY_SET_CAP):
    """(count, first witness) of cycles with vertex set exactly `subset`
    containing every heavy edge.

    A heavy edge with an endpoint outside the subset makes the count 0 by
    definition rather than raising.
    """
    if not g.heavy_edges:
        raise GraphError("graph has no heavy edges")
    sub = set(subset)
    for a, b in g.heavy_edges:
        if a not in sub or b not in sub:
            return 0, None
    return _run_on_subset(g, sub, g.heavy_edges, count_all=True,
                          use_twins=False, cap=cap)


def extension_candidates(g: LabeledGraph, subset, table: CyclableTable | None = None) -> list[int]:
    """Vertices whose addition keeps the subset cyclable."""
    if table is not None:
        return table.extension_candidates(subset)
    sub = set(subset)
    if not is_cyclable(g, sub):
        raise GraphError("subset is not cyclable")
    return [v for v in range(g.n)
            if v not in sub and is_cyclable(g, sub | {v})]


@dataclass(frozen=True)
class ExtensionVerdict:
    extendible: bool
    witness: frozenset[int] | None

    def __bool__(self):
        return self.extendible


def non_extendible_sets(table: CyclableTable):
    """Cyclable proper subsets with no one-vertex cyclable extension, as masks."""
    n = table.n
    adj = table._adj
    ends = table._ends
    full = (1 << n) - 1
    for mask in table.iter_cyclable():
        if mask == full:
            continue
        out = full & ~mask
        good = False
        mm = out
        while mm:
            bit = mm & -mm
            mm ^= bit
            sup = mask | bit
            if ends[sup] & adj[(sup & -sup).bit_length() - 1]:
                good = True
                break
        if not good:
            yield mask


def is_cycle_extendible(g: LabeledGraph, table: CyclableTable | None = None,
                        cap: int | None = None) -> ExtensionVerdict:
    """Every cyclable proper subset must extend by exactly one vertex."""
    if table is None:
        table = build_cyclable_table(g, cap)
    for mask in non_extendible_sets(table):
        return ExtensionVerdict(False, frozenset(_bits_of(mask)))
    return ExtensionVerdict(True, None)


def vertex_on_triangle(g: LabeledGraph, v: int) -> bool:
    masks = g.adjacency_masks()
    for u in g.neighbors(v):
        if masks[v] & masks[u]:
            return True
    return False


def is_fully_cycle_extendible(g: LabeledGraph, table: CyclableTable | None = None,
                              cap: int | None = None) -> bool:
    """Cycle extendible, and every vertex lies on a triangle."""
    if not all(vertex_on_triangle(g, v) for v in range(g.n)):
        return False
    return is_cycle_extendible(g, table, cap).extendible


def could_be_s_extendible(mask_size: int, n: int, s_set) -> bool:
    """The chosen reading: some jump in the set still fits inside the graph."""
    return any(mask_size + s <= n for s in s_set)


def is_s_cycle_extendible(g: LabeledGraph, s_set, table: CyclableTable | None = None,
                          cap: int | None = None) -> ExtensionVerdict:
    """Every cyclable subset that could grow by some s in s_set must do so.

    With s_set = {1} this coincides with plain cycle extendibility.
    """
    jumps = sorted(set(s_set))
    if not jumps:
        raise GraphError("the extension set must be nonempty")
    if any(s < 1 for s in jumps):
        raise GraphError("extension lengths must be positive")
    if table is None:
        table = build_cyclable_table(g, cap)
    n = table.n
    full = (1 << n) - 1
    for mask in table.iter_cyclable():
        size = mask.bit_count()
        if not could_be_s_extendible(size, n, jumps):
            continue
        outside = _bits_of(full & ~mask)
        good = False
        for s in jumps:
            if size + s > n:
                continue
            for combo in combinations(outside, s):
                add = 0
                for v in combo:
                    add |= 1 << v
                if table.cyclable(mask | add):
                    good = True
                    break
            if good:
                break
        if not good:
            return ExtensionVerdict(False, frozenset(_bits_of(mask)))
    return ExtensionVerdict(True, None)
