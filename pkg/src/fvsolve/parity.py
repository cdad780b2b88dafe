"""Polynomial special case: every deletable vertex is a tent.

A tent has three incident edges and no deletable neighbours.  Fixing one
incident edge per tent and contracting those together with all undeletable
edges yields a multigraph whose edges are exactly the remaining two edges
per tent.  Keeping a set of tents is then equivalent to choosing the
corresponding edge pairs so that their union stays acyclic, which is
matroid parity in the graphic matroid of the contracted multigraph.  A
maximum selection of pairs is a minimum deletion set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import D_SIDE, U_SIDE, Instance, InvariantError
from .multigraph import Multigraph

MAX_PAIRS = 64


class TentCaseError(ValueError):
    """The instance is not an all-tents instance."""


class ParityCapError(RuntimeError):
    """Pair count exceeds the exact search guard."""


@dataclass(frozen=True)
class TentInstance:
    """All-tents instance plus a fixed enumeration of each tent's edges.

    ``edge_enum[v]`` lists the three incident edges of tent ``v`` as
    neighbour endpoints; the first one is the fixed edge, chosen toward the
    lowest-id neighbour so runs are reproducible.
    """

    inst: Instance
    edge_enum: dict[int, tuple[int, int, int]]


@dataclass(frozen=True)
class ParityInput:
    """Contracted multigraph with one labelled edge pair per tent.

    ``pairs[v]`` holds the two non-fixed edges of tent ``v`` as endpoint
    tuples in ``h``; a pair may contain loops or run parallel to other
    pairs, in which case it can never be selected.
    """

    h: Multigraph
    pairs: dict[int, tuple[tuple[int, int], tuple[int, int]]]


def make_tent_instance(inst: Instance) -> TentInstance:
    """Validate the all-tents shape and enumerate each tent's edges."""
    enum: dict[int, tuple[int, int, int]] = {}
    for v in inst.d_vertices():
        if inst.d_degree(v) != 0:
            raise TentCaseError(f"vertex {v} has a deletable neighbour")
        if inst.g.degree(v) != 3:
            raise TentCaseError(f"vertex {v} has degree {inst.g.degree(v)}, not 3")
        incident: list[int] = []
        for w in inst.g.neighbors(v):
            incident.extend([w] * inst.g.multiplicity(v, w))
        enum[v] = tuple(incident)  # sorted since neighbors() is sorted
    return TentInstance(inst=inst, edge_enum=enum)


def build_parity_input(tent: TentInstance) -> ParityInput:
    """Contract all undeletable edges plus each tent's fixed edge.

    The contraction is carried out edge by edge on a copy of the graph, and
    the surviving endpoints of each tent's two remaining edges are traced
    through the merges to label the contracted multigraph's edges.
    """
    inst = tent.inst
    g = inst.g.copy()
    alias: dict[int, int] = {}

    def resolve(v: int) -> int:
        while v in alias:
            v = alias[v]
        return v

    contract_edges: list[tuple[int, int]] = []
    for u, w in inst.g.edge_list():
        if inst.side[u] == U_SIDE and inst.side[w] == U_SIDE:
            contract_edges.append((u, w))
    for v, (e0, _, _) in sorted(tent.edge_enum.items()):
        contract_edges.append((v, e0))

    for a, b in contract_edges:
        ra, rb = resolve(a), resolve(b)
        if ra == rb:
            raise InvariantError("contraction set contains a cycle")
        x = g.contract_edge(ra, rb)
        alias[ra] = x
        alias[rb] = x

    pairs = {
        v: ((resolve(v), resolve(e1)), (resolve(v), resolve(e2)))
        for v, (_, e1, e2) in tent.edge_enum.items()
    }

    if g.edge_total() != 2 * len(pairs):
        raise InvariantError("contracted graph has unexpected edge count")
    return ParityInput(h=g, pairs=pairs)


def graphic_matroid_parity(p: ParityInput) -> frozenset:
    """Maximum set of pairs whose edge union is acyclic in the contracted
    multigraph, by exact branch-and-bound over pair inclusion.

    Small inputs only; every candidate selection is grown through an
    incremental union-find, and the forest capacity of the remaining
    components prunes hopeless branches.  The result is re-verified by the
    caller, so a bug here could only surface as suboptimality, which the
    exhaustive cross-checks would catch.
    """
    keys = sorted(p.pairs)
    m = len(keys)
    if m > MAX_PAIRS:
        raise ParityCapError(f"{m} pairs exceeds exact-search guard {MAX_PAIRS}")
    verts = p.h.vertices()
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    pair_edges = [
        tuple((idx[a], idx[b]) for a, b in p.pairs[key]) for key in keys
    ]

    def find(parent: list[int], a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    best: list[int] = []

    def search(i: int, parent: list[int], comps: int, chosen: list[int]) -> None:
        nonlocal best
        capacity = min(m - i, (comps - 1) // 2)
        if len(chosen) + capacity <= len(best):
            return
        if i == m:
            best = list(chosen)
            return
        (a1, b1), (a2, b2) = pair_edges[i]
        trial = list(parent)
        ok = True
        merges = 0
        for a, b in ((a1, b1), (a2, b2)):
            ra, rb = find(trial, a), find(trial, b)
            if ra == rb:
                ok = False
                break
            trial[ra] = rb
            merges += 1
        if ok:
            chosen.append(i)
            search(i + 1, trial, comps - merges, chosen)
            chosen.pop()
        search(i + 1, parent, comps, chosen)

    search(0, list(range(n)), n, [])
    return frozenset(keys[i] for i in best)


def solve_tent_instance(tent: TentInstance) -> frozenset:
    """Minimum deletable set of an all-tents instance, as current ids.

    The undeletable side must be acyclic (callers answer NO outright
    otherwise).  The returned set is verified to leave a forest before
    being handed back; failure there is a parity-solver bug.
    """
    inst = tent.inst
    if not inst.g.is_forest([v for v, s in inst.side.items() if s == U_SIDE]):
        raise TentCaseError("undeletable side contains a cycle")
    parity = build_parity_input(tent)
    kept = graphic_matroid_parity(parity)
    x = frozenset(inst.d_vertices()) - kept
    remaining = inst.g.copy()
    for v in x:
        remaining.remove_vertex(v)
    if not remaining.is_forest():
        raise InvariantError("parity optimum does not induce a forest")
    return x
