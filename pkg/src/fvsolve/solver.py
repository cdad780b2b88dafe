"""Exact feedback vertex set solvers.

Two branch-and-reduce solvers for the disjoint compression subproblem:

  * the simple family keeps both sides acyclic, reduces with the classic
    rules and applies one branching rule (delete or fix a deletable vertex
    of maximum undeletable degree), giving potential drops of 1 and 2;
  * the fast family tolerates cycles on the undeletable side, uses the
    weighted potential, and branches through the guide-type rule table
    shared with the analyzer.

On top of either sits iterative compression: vertices are added one at a
time, the previous solution plus the new vertex forms the set whose
intersection with the next solution is guessed, and each guess becomes a
disjoint subproblem.  Certificates are verified unconditionally at every
level, including intermediate prefixes.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import analysis
from .instance import (
    D_SIDE,
    FORBIDDEN_GUIDE_TYPES,
    U_SIDE,
    Instance,
    InvariantError,
    classify,
    delete_vertex,
    find_guide,
    measures,
    move_to_u,
)
from .multigraph import Multigraph
from .reductions import (
    CHANGED,
    FAST,
    IRREDUCIBLE,
    NO_INSTANCE,
    POLY_SOLVED,
    SIMPLE,
    ReductionContext,
    reduce_to_fixpoint,
)
from .rules import SIMPLE_BRANCH_DROPS, apply_concrete

DEFAULT_ALPHA = 0.84
DROP_EPS = 1e-9


@dataclass
class SolveStats:
    """Search statistics; ``rules`` is a per-rule application histogram."""

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    max_disjoint_leaves: int = 0
    rules: Counter = field(default_factory=Counter)

    def merge(self, other: "SolveStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.max_disjoint_leaves = max(self.max_disjoint_leaves,
                                       other.max_disjoint_leaves)
        self.rules.update(other.rules)


@dataclass(frozen=True)
class SolveOutcome:
    """YES with a verified certificate of original vertex ids, or NO."""

    yes: bool
    certificate: frozenset | None
    stats: SolveStats


def _potential(inst: Instance, family: str) -> float:
    m = measures(inst)
    return m.simple_potential if family == SIMPLE else m.alpha_potential


class _DisjointSolver:
    def __init__(self, family: str, check: bool = True,
                 early_cycle_exit: bool = False, trace: list | None = None):
        if family not in (SIMPLE, FAST):
            raise ValueError(f"unknown family {family!r}")
        self.family = family
        self.check = check
        self.early_cycle_exit = early_cycle_exit
        self.trace = trace
        self.stats = SolveStats()

    def solve(self, inst: Instance) -> SolveOutcome:
        root_graph = inst.g.copy()
        root_d = {inst.rep[v] for v in inst.d_vertices()}
        root_k = inst.k
        if self.family == SIMPLE:
            if inst.alpha != 1.0:
                raise InvariantError("the simple family requires alpha = 1")
            if not inst.g.is_forest(inst.u_vertices()):
                raise InvariantError(
                    "the simple family requires an acyclic undeletable side")
        cert = self._recurse(inst, frozenset(), 0)
        self.stats.max_disjoint_leaves = self.stats.leaves
        if cert is None:
            return SolveOutcome(yes=False, certificate=None, stats=self.stats)
        if not cert <= root_d or len(cert) > root_k:
            raise InvariantError("certificate violates the deletable side or budget")
        pruned = root_graph.copy()
        for v in cert:
            pruned.remove_vertex(v)
        if not pruned.is_forest():
            raise InvariantError("certificate does not leave a forest")
        return SolveOutcome(yes=True, certificate=cert, stats=self.stats)

    def _recurse(self, inst: Instance, forced: frozenset, depth: int):
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)

        ctx = ReductionContext(trace=self.trace, check=self.check,
                               early_cycle_exit=self.early_cycle_exit)
        out = reduce_to_fixpoint(inst, self.family, ctx)
        self.stats.rules.update(ctx.histogram)
        forced = forced | set(out.forced)

        if out.kind == NO_INSTANCE:
            self.stats.leaves += 1
            return None
        if out.kind == POLY_SOLVED:
            self.stats.leaves += 1
            x = out.poly_min_x
            if len(x) <= inst.k:
                return forced | {inst.rep[v] for v in x}
            return None

        if self.family == SIMPLE:
            rule_name, children, predicted = self._branch_simple(inst)
        else:
            rule_name, children, predicted = self._branch_fast(inst)
        self.stats.rules[rule_name] += 1

        if self.check:
            pot = _potential(inst, self.family)
            for (child, _), need in zip(children, predicted):
                drop = pot - _potential(child, self.family)
                if drop < need - DROP_EPS:
                    raise InvariantError(
                        f"rule {rule_name} child dropped {drop:.6f}, "
                        f"analysis guarantees {need:.6f}")

        for child, extra in children:
            got = self._recurse(child, forced | set(extra), depth + 1)
            if got is not None:
                return got
        return None

    def _branch_simple(self, inst: Instance):
        best = None
        for v in inst.d_vertices():
            if inst.is_tent(v):
                continue
            ud = inst.u_degree(v)
            if best is None or ud > best[0]:
                best = (ud, v)
        if best is None:
            raise InvariantError("no branch candidate on an irreducible instance")
        ud, v = best
        if ud < 3:
            raise InvariantError(
                f"irreducible instance offers only undeletable degree {ud}")
        child_del = inst.copy()
        orig = delete_vertex(child_del, v)
        child_del.k -= 1
        child_fix = inst.copy()
        move_to_u(child_fix, v)
        predicted = [d.at(1.0) for d in SIMPLE_BRANCH_DROPS]
        return "branch-max-u", [(child_del, (orig,)), (child_fix, ())], predicted

    def _branch_fast(self, inst: Instance):
        view = classify(inst)
        guide = find_guide(inst, view)
        if guide.triple in FORBIDDEN_GUIDE_TYPES:
            raise InvariantError(
                f"forbidden guide type {guide.triple} on an irreducible instance")
        rule, leaves = apply_concrete(inst, guide, view)
        predicted = analysis.expand_rule(rule.name, guide.triple).values(inst.alpha)
        if len(leaves) != len(predicted):
            raise InvariantError("rule expansion disagrees between executors")
        children = [(leaf.inst, leaf.forced) for leaf in leaves]
        return rule.name, children, list(predicted)


def solve_disjoint(inst: Instance, family: str = FAST, *, check: bool = True,
                   early_cycle_exit: bool = False,
                   trace: list | None = None) -> SolveOutcome:
    """Decide a disjoint instance; consumes (mutates) ``inst``."""
    solver = _DisjointSolver(family, check=check,
                             early_cycle_exit=early_cycle_exit, trace=trace)
    return solver.solve(inst)


# -- iterative compression ------------------------------------------------

def vertex_order(vertices, edges, order) -> list[int]:
    """Insertion order for compression: input, seeded shuffle, or
    degree-descending."""
    verts = list(vertices)
    if order == "input" or order is None:
        return verts
    if order == "degree":
        deg = Counter()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return sorted(verts, key=lambda v: (-deg[v], v))
    if isinstance(order, tuple) and order[0] == "random":
        rng = random.Random(order[1])
        rng.shuffle(verts)
        return verts
    raise ValueError(f"unknown vertex order {order!r}")


def solve_fvs(vertices, edges, k: int, family: str = FAST,
              alpha: float | None = None, order="input", *,
              check: bool = True, early_cycle_exit: bool = False,
              trace: list | None = None) -> SolveOutcome:
    """Decide whether the graph has a feedback vertex set of size ``k``.

    Runs iterative compression over the chosen vertex order, guessing the
    intersection of the next solution with the previous solution plus the
    newly inserted vertex, and solving one disjoint subproblem per guess.
    The certificate (not necessarily minimum) is verified against every
    prefix graph and the full input.
    """
    if alpha is None:
        alpha = 1.0 if family == SIMPLE else DEFAULT_ALPHA
    if family == SIMPLE and alpha != 1.0:
        raise ValueError("the simple family runs at alpha = 1")
    stats = SolveStats()
    if k < 0:
        return SolveOutcome(yes=False, certificate=None, stats=stats)

    verts = vertex_order(vertices, edges, order)
    vset = set(verts)
    edges = [(u, v) for u, v in edges]
    for u, v in edges:
        if u not in vset or v not in vset:
            raise ValueError(f"edge ({u}, {v}) names an unknown vertex")

    current: list[int] = []
    from itertools import combinations

    for i in range(1, len(verts) + 1):
        if i <= k + 1:
            current = verts[:i - 1]
            continue
        prefix = verts[:i]
        in_prefix = set(prefix)
        g_i = Multigraph.from_edges(
            prefix, [(u, v) for u, v in edges if u in in_prefix and v in in_prefix])
        z = sorted(set(current) | {verts[i - 1]})
        d_side = [v for v in prefix if v not in set(z)]
        solution = None
        for size in range(0, min(len(z), k) + 1):
            for y in combinations(z, size):
                y_set = set(y)
                u_side = [v for v in z if v not in y_set]
                if not g_i.is_forest(u_side):
                    continue
                g_sub = g_i.copy()
                for v in y:
                    g_sub.remove_vertex(v)
                inst = Instance.build(g_sub, u_side, d_side, k - size, alpha)
                out = solve_disjoint(inst, family, check=check,
                                     early_cycle_exit=early_cycle_exit,
                                     trace=trace)
                stats.merge(out.stats)
                if out.yes:
                    solution = sorted(y_set | out.certificate)
                    break
            if solution is not None:
                break
        if solution is None:
            return SolveOutcome(yes=False, certificate=None, stats=stats)
        if len(solution) > k:
            raise InvariantError("compression produced an oversized solution")
        pruned = g_i.copy()
        for v in solution:
            pruned.remove_vertex(v)
        if not pruned.is_forest():
            raise InvariantError("compression solution fails verification")
        current = solution

    return SolveOutcome(yes=True, certificate=frozenset(current), stats=stats)


def min_fvs(vertices, edges, family: str = FAST, alpha: float | None = None,
            order="input", *, check: bool = True,
            early_cycle_exit: bool = False) -> tuple[int, SolveOutcome]:
    """Smallest budget with a YES answer, by ascending search.

    The failed run at ``k - 1`` certifies minimality.
    """
    n = len(list(vertices))
    for k in range(0, n + 1):
        out = solve_fvs(vertices, edges, k, family, alpha, order,
                        check=check, early_cycle_exit=early_cycle_exit)
        if out.yes:
            return k, out
    raise InvariantError("deleting every vertex must leave a forest")
