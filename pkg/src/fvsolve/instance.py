"""Disjoint feedback vertex set instances and their bookkeeping.

An instance partitions the vertices of a graph into an undeletable side
``U`` and a deletable side ``D`` (which must induce a forest), together with
a deletion budget ``k``.  The question is whether some ``X`` of at most
``k`` deletable vertices makes the whole graph acyclic.

This module also hosts the potential functions steering the branch-and-
reduce solvers, the rooted classification of deletable vertices (tents,
singles, doubles, standard vertices and guides), and the primitive
instance mutations that both the reduction engine and the branching rules
are built from.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import GraphError, Multigraph

U_SIDE = "U"
D_SIDE = "D"


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a solver bug."""


class NoGuideError(RuntimeError):
    """No guide exists; some reduction rule must still have been applicable."""


@dataclass
class Instance:
    """A Disjoint-FVS instance.

    ``rep`` maps every current deletable vertex to the original vertex it
    stands for; contractions performed by the degree-2 rule redirect the
    merged vertex to the surviving neighbour so that certificates can be
    mapped back.  ``alpha`` weights the potential function; the simple
    algorithm runs at ``alpha = 1``.
    """

    g: Multigraph
    side: dict[int, str]
    k: int
    alpha: float = 1.0
    rep: dict[int, int] = field(default_factory=dict)

    @classmethod
    def build(cls, g: Multigraph, u_set, d_set, k: int,
              alpha: float = 1.0) -> "Instance":
        """Validated constructor; ``rep`` starts as the identity on ``D``."""
        u_set = set(u_set)
        d_set = set(d_set)
        if u_set & d_set:
            raise GraphError("U and D overlap")
        if u_set | d_set != set(g.vertices()):
            raise GraphError("U and D must partition the vertex set")
        if k < 0:
            raise GraphError("budget must be non-negative")
        if not 0.5 <= alpha <= 1.0:
            raise GraphError("alpha must lie in [1/2, 1]")
        if not g.is_forest(d_set):
            raise GraphError("deletable side must induce a forest")
        side = {v: U_SIDE for v in u_set}
        side.update({v: D_SIDE for v in d_set})
        return cls(g=g, side=side, k=k, alpha=alpha,
                   rep={v: v for v in d_set})

    def copy(self) -> "Instance":
        return Instance(g=self.g.copy(), side=dict(self.side), k=self.k,
                        alpha=self.alpha, rep=dict(self.rep))

    # -- queries ---------------------------------------------------------

    def u_vertices(self) -> list[int]:
        return sorted(v for v, s in self.side.items() if s == U_SIDE)

    def d_vertices(self) -> list[int]:
        return sorted(v for v, s in self.side.items() if s == D_SIDE)

    def u_degree(self, v: int) -> int:
        return sum(1 for w in self.g.neighbors(v) if self.side[w] == U_SIDE)

    def d_degree(self, v: int) -> int:
        return sum(1 for w in self.g.neighbors(v) if self.side[w] == D_SIDE)

    def is_tent(self, v: int) -> bool:
        """Deletable, no deletable neighbours, and degree exactly 3."""
        return (self.side[v] == D_SIDE and self.d_degree(v) == 0
                and self.g.degree(v) == 3)

    def all_tents(self) -> bool:
        return all(self.is_tent(v) for v in self.d_vertices())

    def u_edge_total(self) -> int:
        """Total multiplicity of edges inside ``U``, loops counted once."""
        total = 0
        for v, s in self.side.items():
            if s != U_SIDE:
                continue
            total += 2 * self.g.loops(v)
            for w in self.g.neighbors(v):
                if self.side[w] == U_SIDE:
                    total += self.g.multiplicity(v, w)
        return total // 2


@dataclass(frozen=True)
class InstanceMeasures:
    """All potential-function ingredients, recomputed from scratch.

    ``u_gap`` is the undeletable side's vertex count minus its induced edge
    count; it equals ``u_components`` whenever that side is acyclic, and
    generalizes it when the fast algorithm lets cycles appear there.
    """

    k: int
    u_components: int
    u_gap: int
    tents: int
    simple_potential: int
    alpha_potential: float


def measures(inst: Instance) -> InstanceMeasures:
    u = [v for v, s in inst.side.items() if s == U_SIDE]
    u_components = inst.g.component_count(u)
    u_gap = len(u) - inst.u_edge_total()
    tents = sum(1 for v in inst.side if inst.side[v] == D_SIDE and inst.is_tent(v))
    return InstanceMeasures(
        k=inst.k,
        u_components=u_components,
        u_gap=u_gap,
        tents=tents,
        simple_potential=inst.k + u_components - tents,
        alpha_potential=inst.k + inst.alpha * u_gap - tents,
    )


# -- rooted classification ---------------------------------------------

TENT = "tent"
SINGLE = "single"
DOUBLE = "double"
STANDARD = "standard"

# Guide types that cannot occur on an irreducible instance.
FORBIDDEN_GUIDE_TYPES = frozenset({
    (0, 0, 1), (0, 1, 0), (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 2, 0),
})


@dataclass(frozen=True)
class RootedView:
    """Rooted orientation of the deletable side plus the vertex classes."""

    roots: tuple[int, ...]
    parent: dict[int, int | None]
    children: dict[int, tuple[int, ...]]
    cls: dict[int, str]


@dataclass(frozen=True)
class GuideInfo:
    """A guide vertex with its type triple.

    ``f`` is the guide's undeletable degree, ``s`` and ``d`` count its
    single and double children under the rooted orientation.
    """

    vertex: int
    f: int
    s: int
    d: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.f, self.s, self.d)


def classify(inst: Instance) -> RootedView:
    """Root every deletable tree at a lowest-id vertex of deletable degree
    at most one, orient it, and type every deletable vertex.

    Classes: a tent is deletable-isolated of degree 3; a single is any other
    vertex of undeletable degree 3 without children; a double has
    undeletable degree 0 and exactly two children, both singles; everything
    else is standard.
    """
    d_verts = inst.d_vertices()
    d_set = set(d_verts)
    seen: set[int] = set()
    roots: list[int] = []
    parent: dict[int, int | None] = {}
    children: dict[int, list[int]] = {v: [] for v in d_verts}

    for start in d_verts:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        i = 0
        while i < len(comp):
            v = comp[i]
            i += 1
            for w in inst.g.neighbors(v):
                if w in d_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
        eligible = [v for v in comp if inst.d_degree(v) <= 1]
        if not eligible:
            raise InvariantError("deletable tree without a leaf")
        root = min(eligible)
        roots.append(root)
        parent[root] = None
        order = [root]
        placed = {root}
        j = 0
        while j < len(order):
            v = order[j]
            j += 1
            for w in sorted(inst.g.neighbors(v)):
                if w in d_set and w not in placed:
                    placed.add(w)
                    parent[w] = v
                    children[v].append(w)
                    order.append(w)

    cls: dict[int, str] = {}
    for v in d_verts:
        if inst.is_tent(v):
            cls[v] = TENT
    for v in d_verts:
        if v not in cls and inst.u_degree(v) == 3 and not children[v]:
            cls[v] = SINGLE
    for v in d_verts:
        if (v not in cls and inst.u_degree(v) == 0 and len(children[v]) == 2
                and all(cls.get(c) == SINGLE for c in children[v])):
            cls[v] = DOUBLE
    for v in d_verts:
        cls.setdefault(v, STANDARD)

    return RootedView(
        roots=tuple(sorted(roots)),
        parent=parent,
        children={v: tuple(c) for v, c in children.items()},
        cls=cls,
    )


def find_guide(inst: Instance, view: RootedView | None = None) -> GuideInfo:
    """Lowest-id standard vertex none of whose children is standard.

    Raises :class:`NoGuideError` when no standard vertex exists, which on a
    supposedly irreducible instance means the caller skipped a reduction.
    """
    if view is None:
        view = classify(inst)
    candidates = [
        v for v, c in view.cls.items()
        if c == STANDARD
        and all(view.cls[w] != STANDARD for w in view.children[v])
    ]
    if not candidates:
        raise NoGuideError("no guide: a reduction rule was still applicable")
    v = min(candidates)
    s = sum(1 for w in view.children[v] if view.cls[w] == SINGLE)
    d = sum(1 for w in view.children[v] if view.cls[w] == DOUBLE)
    return GuideInfo(vertex=v, f=inst.u_degree(v), s=s, d=d)


# -- primitive mutations -----------------------------------------------
#
# These implement the shared building blocks of the reduction rules and the
# branching rules; every caller relies on the precondition asserts.

def delete_vertex(inst: Instance, v: int) -> int | None:
    """Remove ``v``; returns the original id it stood for if deletable."""
    orig = inst.rep.pop(v, None) if inst.side[v] == D_SIDE else None
    inst.g.remove_vertex(v)
    del inst.side[v]
    return orig


def move_to_u(inst: Instance, v: int) -> None:
    if inst.side[v] != D_SIDE:
        raise InvariantError(f"vertex {v} is not deletable")
    inst.side[v] = U_SIDE
    inst.rep.pop(v, None)


def contract_degree2(inst: Instance, v: int, w: int) -> int:
    """Contract the edge ``vw`` at a degree-2 deletable vertex ``v``.

    Both endpoints must be deletable; the merged vertex stays deletable and
    maps back to the neighbour ``w`` (every cycle through ``v`` also passes
    through ``w``, so deleting the merged vertex is realized as deleting
    ``w`` in the original graph).
    """
    if inst.side[v] != D_SIDE or inst.side[w] != D_SIDE:
        raise InvariantError("degree-2 contraction requires deletable endpoints")
    if inst.g.degree(v) != 2:
        raise InvariantError(f"vertex {v} does not have degree 2")
    orig = inst.rep[w]
    x = inst.g.contract_edge(v, w)
    del inst.side[v]
    del inst.side[w]
    del inst.rep[v]
    del inst.rep[w]
    inst.side[x] = D_SIDE
    inst.rep[x] = orig
    return x


def subdivide_leaf_edge(inst: Instance, v: int) -> int:
    """Split the lone deletable-side edge at ``v`` and keep the midpoint
    undeletable, which turns ``v`` into a tent.

    ``v`` must be a deletable leaf (exactly one deletable neighbour) of
    undeletable degree 2.
    """
    d_nbrs = [w for w in inst.g.neighbors(v) if inst.side[w] == D_SIDE]
    if inst.side[v] != D_SIDE or len(d_nbrs) != 1 or inst.u_degree(v) != 2:
        raise InvariantError(f"vertex {v} is not a deletable leaf of U-degree 2")
    x = inst.g.subdivide_edge(v, d_nbrs[0])
    inst.side[x] = U_SIDE
    if not inst.is_tent(v):
        raise InvariantError(f"vertex {v} failed to become a tent")
    return x
