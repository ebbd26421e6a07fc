"""Vertex connectivity and induced-path statistics.

Connectivity is exact: unit-capacity max flow on the split digraph (each
vertex becomes an in/out arc of capacity one), minimized over non-adjacent
pairs, with the cut read off the residual reachability.  Induced paths use
backtracking over (last vertex, still-eligible set) states with memoization.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import GraphError, LabeledGraph, SizeCapError

INDUCED_PATH_CAP = 25


@dataclass(frozen=True)
class ConnectivityCert:
    kappa: int
    cut: tuple[int, ...] | None  # None for complete graphs
    complete: bool


def vertex_connectivity(g: LabeledGraph) -> ConnectivityCert:
    """Exact vertex connectivity with a minimum separating set."""
    n = g.n
    if n < 2:
        raise GraphError("connectivity needs at least 2 vertices")
    if all(g.degree(v) == n - 1 for v in range(n)):
        return ConnectivityCert(n - 1, None, True)
    if not g.is_connected():
        return ConnectivityCert(0, (), False)

    best = None
    best_cut = None
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            limit = best if best is not None else n
            flow, cut = _local_connectivity(g, s, t, limit)
            if cut is not None and (best is None or flow < best):
                best, best_cut = flow, cut
                if best == 0:
                    break
        if best == 0:
            break
    return ConnectivityCert(best, tuple(sorted(best_cut)), False)


def _local_connectivity(g: LabeledGraph, s: int, t: int, limit: int):
    """Max vertex-disjoint s-t paths, abandoning once `limit` is reached.

    Returns (flow, cut) with cut=None when the search was cut short.
    Split-node ids: in(v) = 2v, out(v) = 2v+1.
    """
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add(a, b, c):
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        cap[(a, b)] += c

    big = g.n + 1
    for v in range(g.n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in adj.get(a, ()):
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    if flow >= limit:
        return flow, None

    reach = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in adj.get(a, ()):
            if b not in reach and cap.get((a, b), 0) > 0:
                reach.add(b)
                queue.append(b)
    cut = [v for v in range(g.n)
           if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach]
    return flow, cut


# -- induced paths --------------------------------------------------------------

def longest_induced_path(g: LabeledGraph, cap: int = INDUCED_PATH_CAP):
    """(vertex count, witness path) of a maximum induced path."""
    if g.n > cap:
        raise SizeCapError(f"induced-path search capped at {cap} vertices")
    if g.n == 0:
        return 0, ()
    masks = g.adjacency_masks()
    memo: dict[tuple[int, int], tuple[int, int]] = {}

    def best_from(last: int, eligible: int) -> tuple[int, int]:
        """(additional length, best next vertex+1 or 0) from this state."""
        key = (last, eligible)
        hit = memo.get(key)
        if hit is not None:
            return hit
        res = (0, 0)
        cand = masks[last] & eligible
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            sub = eligible & ~bit & ~masks[last]
            ln, _ = best_from(w, sub)
            if ln + 1 > res[0]:
                res = (ln + 1, w + 1)
        memo[key] = res
        return res

    full = (1 << g.n) - 1
    best_len, best_start = 0, 0
    for s in range(g.n):
        ln, _ = best_from(s, full & ~(1 << s))
        if ln + 1 > best_len:
            best_len, best_start = ln + 1, s

    path = [best_start]
    eligible = full & ~(1 << best_start)
    last = best_start
    while True:
        _, nxt = best_from(last, eligible)
        if not nxt:
            break
        w = nxt - 1
        path.append(w)
        eligible = eligible & ~(1 << w) & ~masks[last]
        last = w
    return best_len, tuple(path)


def is_pt_free(g: LabeledGraph, t: int, cap: int = INDUCED_PATH_CAP) -> bool:
    """No induced path on t vertices."""
    if t < 1:
        raise GraphError("path order must be positive")
    length, _ = longest_induced_path(g, cap)
    return length < t


def induces_path(g: LabeledGraph, vertices) -> bool:
    """Do these vertices, in this order, induce a path in g?"""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    for i, a in enumerate(vs):
        for j in range(i + 1, len(vs)):
            if g.has_edge(a, vs[j]) != (j == i + 1):
                return False
    return True
