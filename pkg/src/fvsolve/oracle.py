"""Brute-force reference solvers used as ground truth in tests.

Everything here is deliberately independent of the production code paths:
acyclicity is decided by the edge-count identity (a loop-free graph is a
forest iff its edge total equals vertex count minus component count, with
components found by breadth-first search), not by the union-find kernels
the solvers use.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .instance import D_SIDE, Instance

DEFAULT_MAX_VERTICES = 14
DEFAULT_MAX_D = 16
MAX_PARITY_PAIRS = 16


class OracleCapError(RuntimeError):
    """Input exceeds the enumeration cap; refuse instead of running forever."""


def _bfs_components(vertices, adj) -> int:
    seen = set()
    comps = 0
    for s in vertices:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


def edges_form_forest(vertices, edges) -> bool:
    """Forest test over an explicit edge multiset; loops count as cycles."""
    vertices = list(vertices)
    adj = {v: [] for v in vertices}
    total = 0
    for u, v in edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
        total += 1
    return total == len(vertices) - _bfs_components(vertices, adj)


def graph_is_forest(g, without=()) -> bool:
    """Forest test on a multigraph minus a vertex set, by local BFS logic."""
    skip = set(without)
    verts = [v for v in g.vertices() if v not in skip]
    vset = set(verts)
    edges = []
    for u, v in g.edge_list():
        if u in vset and v in vset:
            edges.append((u, v))
    return edges_form_forest(verts, edges)


def brute_fvs(vertices, edges, cap: int = DEFAULT_MAX_VERTICES) -> frozenset:
    """Smallest vertex set whose removal leaves a forest.

    Enumerates subsets by increasing size and lexicographically within a
    size, so ties break deterministically.
    """
    verts = sorted(vertices)
    if len(verts) > cap:
        raise OracleCapError(f"{len(verts)} vertices exceeds cap {cap}")
    edges = list(edges)
    for size in range(len(verts) + 1):
        for cand in combinations(verts, size):
            removed = set(cand)
            kept = [v for v in verts if v not in removed]
            sub = [(u, v) for u, v in edges if u not in removed and v not in removed]
            if edges_form_forest(kept, sub):
                return frozenset(cand)
    raise AssertionError("removing every vertex always leaves a forest")


@dataclass(frozen=True)
class DisjointAnswer:
    """Outcome of exhaustive disjoint search.

    ``min_x`` is the smallest deletable set making the graph a forest, or
    ``None`` when even deleting all of ``D`` leaves a cycle; ``yes`` states
    whether the instance's budget suffices.
    """

    yes: bool
    min_x: frozenset | None


def brute_disjoint_fvs(inst: Instance, cap: int = DEFAULT_MAX_D) -> DisjointAnswer:
    """Exhaustive minimum over all deletable subsets."""
    d_verts = inst.d_vertices()
    if len(d_verts) > cap:
        raise OracleCapError(f"{len(d_verts)} deletable vertices exceeds cap {cap}")
    for size in range(len(d_verts) + 1):
        for cand in combinations(d_verts, size):
            if graph_is_forest(inst.g, without=cand):
                x = frozenset(cand)
                return DisjointAnswer(yes=(inst.k >= 0 and size <= inst.k), min_x=x)
    return DisjointAnswer(yes=False, min_x=None)


def brute_parity(parity_input, cap: int = MAX_PARITY_PAIRS) -> frozenset:
    """Exhaustive maximum acyclic pair selection, lowest mask first."""
    pairs = sorted(parity_input.pairs)
    m = len(pairs)
    if m > cap:
        raise OracleCapError(f"{m} pairs exceeds cap {cap}")
    h_verts = parity_input.h.vertices()
    best: tuple = ()
    for mask in range(1 << m):
        chosen = [pairs[i] for i in range(m) if mask >> i & 1]
        if len(chosen) <= len(best):
            continue
        edges = []
        for key in chosen:
            edges.extend(parity_input.pairs[key])
        if edges_form_forest(h_verts, edges):
            best = tuple(chosen)
    return frozenset(best)
