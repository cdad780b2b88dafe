"""Undirected multigraph with contraction that keeps loops and parallel edges.

Contracting an edge ``uv`` of multiplicity ``p`` replaces both endpoints by a
fresh vertex carrying ``p - 1`` new loops, and joins that vertex to every
former neighbour ``w`` with multiplicity ``mult(u, w) + mult(v, w)``.  Nothing
is ever suppressed, so acyclicity questions survive contraction exactly.
"""

from __future__ import annotations

from array import array
from collections import Counter
from collections.abc import Iterable

from . import kernels


class GraphError(ValueError):
    """Raised on structurally invalid graph operations."""


class Multigraph:
    """Mutable undirected multigraph with stable integer vertex ids.

    Parallel edges are stored as per-pair multiplicities and loops as a
    per-vertex counter, so ``degree(v)`` is the sum of incident edge
    multiplicities plus twice the loop count.  Vertex ids are allocated from
    a monotone counter and never reused, which lets callers keep audit
    trails across contractions.
    """

    __slots__ = ("_adj", "_loops", "_next_id")

    def __init__(self) -> None:
        self._adj: dict[int, Counter] = {}
        self._loops: dict[int, int] = {}
        self._next_id = 0

    @classmethod
    def from_edges(cls, vertices: Iterable[int],
                   edges: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build a graph on the given vertex ids with unit-multiplicity edges."""
        g = cls()
        for v in vertices:
            g.add_vertex(v)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- basic queries -------------------------------------------------

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` (loops excluded), sorted."""
        return sorted(self._adj[v])

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return self._loops[u]
        return self._adj[u].get(v, 0)

    def loops(self, v: int) -> int:
        return self._loops[v]

    def degree(self, v: int) -> int:
        return sum(self._adj[v].values()) + 2 * self._loops[v]

    def edge_total(self) -> int:
        """Total edge multiplicity, counting each loop once."""
        half = sum(sum(c.values()) for c in self._adj.values())
        return half // 2 + sum(self._loops.values())

    def edge_list(self) -> list[tuple[int, int]]:
        """Every edge with multiplicity, loops as ``(v, v)``, sorted."""
        out = []
        for u, cnt in self._adj.items():
            for v, m in cnt.items():
                if u <= v:
                    out.extend([(u, v)] * m)
        for v, m in self._loops.items():
            out.extend([(v, v)] * m)
        out.sort()
        return out

    # -- mutation ------------------------------------------------------

    def add_vertex(self, v: int | None = None) -> int:
        if v is None:
            v = self._next_id
        elif v in self._adj:
            raise GraphError(f"vertex {v} already present")
        self._adj[v] = Counter()
        self._loops[v] = 0
        self._next_id = max(self._next_id, v + 1)
        return v

    def add_edge(self, u: int, v: int, count: int = 1) -> None:
        if count <= 0:
            raise GraphError("edge multiplicity must be positive")
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"unknown endpoint in edge ({u}, {v})")
        if u == v:
            self._loops[u] += count
        else:
            self._adj[u][v] += count
            self._adj[v][u] += count

    def remove_one_edge(self, u: int, v: int) -> None:
        if self.multiplicity(u, v) < 1:
            raise GraphError(f"no edge ({u}, {v}) to remove")
        if u == v:
            self._loops[u] -= 1
        else:
            self._adj[u][v] -= 1
            self._adj[v][u] -= 1
            if self._adj[u][v] == 0:
                del self._adj[u][v]
                del self._adj[v][u]

    def remove_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v}")
        for w in list(self._adj[v]):
            del self._adj[w][v]
        del self._adj[v]
        del self._loops[v]

    def contract_edge(self, u: int, v: int) -> int:
        """Contract one edge ``uv``; returns the fresh merged vertex.

        The merged vertex receives ``mult(u, v) - 1`` new loops plus any
        loops already sitting on ``u`` or ``v``, and inherits all remaining
        incident edges with summed multiplicities.
        """
        if u == v:
            raise GraphError("cannot contract a loop")
        p = self.multiplicity(u, v)
        if p < 1:
            raise GraphError(f"cannot contract missing edge ({u}, {v})")
        x = self.add_vertex()
        new_loops = self._loops[u] + self._loops[v] + (p - 1)
        merged = Counter()
        for w, m in self._adj[u].items():
            if w != v:
                merged[w] += m
        for w, m in self._adj[v].items():
            if w != u:
                merged[w] += m
        for w, m in merged.items():
            self.add_edge(x, w, m)
        self._loops[x] = new_loops
        self.remove_vertex(u)
        self.remove_vertex(v)
        return x

    def subdivide_edge(self, u: int, v: int) -> int:
        """Replace one copy of edge ``uv`` by a path through a fresh vertex."""
        if self.multiplicity(u, v) < 1:
            raise GraphError(f"cannot subdivide missing edge ({u}, {v})")
        self.remove_one_edge(u, v)
        x = self.add_vertex()
        self.add_edge(u, x)
        self.add_edge(x, v)
        return x

    def copy(self) -> "Multigraph":
        g = Multigraph()
        g._adj = {v: Counter(c) for v, c in self._adj.items()}
        g._loops = dict(self._loops)
        g._next_id = self._next_id
        return g

    # -- forest / component queries -------------------------------------

    def _index_pairs(self, restrict: Iterable[int] | None):
        """Distinct vertex pairs with an edge, indexed densely for kernels."""
        if restrict is None:
            verts = list(self._adj)
        else:
            verts = list(restrict)
            for v in verts:
                if v not in self._adj:
                    raise GraphError(f"restriction names unknown vertex {v}")
        idx = {v: i for i, v in enumerate(verts)}
        us = array("i")
        vs = array("i")
        for u in verts:
            iu = idx[u]
            for v in self._adj[u]:
                if v in idx and u < v:
                    us.append(iu)
                    vs.append(idx[v])
        return verts, idx, us, vs

    def component_count(self, restrict: Iterable[int] | None = None) -> int:
        """Number of connected components of the (induced sub)graph."""
        verts, _, us, vs = self._index_pairs(restrict)
        if not verts:
            return 0
        comp, _ = kernels.uf_forest(len(verts), us, vs)
        return comp

    def component_labels(self, restrict: Iterable[int] | None = None) -> dict[int, int]:
        """Map from vertex id to an arbitrary per-component label."""
        verts, _, us, vs = self._index_pairs(restrict)
        labels = kernels.uf_labels(len(verts), us, vs)
        return {v: labels[i] for i, v in enumerate(verts)}

    def is_forest(self, restrict: Iterable[int] | None = None) -> bool:
        """True iff the (induced sub)graph is acyclic.

        Any loop or parallel pair inside the restriction is a cycle.
        """
        verts, idx, us, vs = self._index_pairs(restrict)
        for u in verts:
            if self._loops[u] > 0:
                return False
            for v, m in self._adj[u].items():
                if m >= 2 and v in idx:
                    return False
        if not verts:
            return True
        _, acyclic = kernels.uf_forest(len(verts), us, vs)
        return acyclic

    def audit(self) -> None:
        """Walk the adjacency structure and verify symmetry; for tests."""
        for u, cnt in self._adj.items():
            for v, m in cnt.items():
                if m <= 0:
                    raise AssertionError(f"non-positive multiplicity at ({u}, {v})")
                if self._adj.get(v, Counter()).get(u, 0) != m:
                    raise AssertionError(f"asymmetric edge ({u}, {v})")
            if self._loops[u] < 0:
                raise AssertionError(f"negative loop count at {u}")
