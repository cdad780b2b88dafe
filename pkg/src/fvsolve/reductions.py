"""Reduction rules for both solver families, applied lowest-numbered first.

The classic family (used by the golden-ratio solver, potential weight 1):

  1. prune: remove every vertex of degree at most 1, anywhere in the graph;
  2. force: a deletable vertex with two edges into one undeletable
     component lies on an unavoidable cycle, delete it and pay one budget;
  3. bypass: a degree-2 deletable vertex moves to the undeletable side if
     it has an undeletable neighbour, else one incident edge is contracted;
  4. bound: too many tents for the budget proves infeasibility;
  5. split: a deletable leaf of undeletable degree 2 has its deletable-side
     edge subdivided, turning it into a tent;
  6. parity: when every deletable vertex is a tent, the matroid-parity
     routine finishes in polynomial time.

The fast family drops the force rule (its potential tolerates cycles on
the undeletable side) and restricts pruning to deletable vertices:

  1'. prune deletable vertices of degree at most 1;
  2'. bypass degree-2 deletable vertices;
  3'. bound (expressed through the generalized potential);
  4'. split;
  5'. parity, answering NO outright if the undeletable side is cyclic.

Both bound rules reduce to the same exact integer test: with ``t`` tents,
``k`` budget and ``q`` the undeletable side's vertex-minus-edge gap, the
instance is infeasible once ``2t >= 2k + q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .instance import (
    D_SIDE,
    U_SIDE,
    Instance,
    InvariantError,
    contract_degree2,
    delete_vertex,
    measures,
    move_to_u,
    subdivide_leaf_edge,
)
from .parity import make_tent_instance, solve_tent_instance

SIMPLE = "simple"
FAST = "fast"

CHANGED = "changed"
NO_INSTANCE = "no-instance"
POLY_SOLVED = "poly-solved"
IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class RuleOutcome:
    """Result of one rule application (or of running to a fixpoint).

    ``forced`` lists original vertex ids pushed into the solution by the
    rule; ``poly_min_x`` carries the parity routine's minimum deletion set
    in current ids (its size may exceed the budget, callers decide).
    """

    kind: str
    rule: str | None = None
    forced: tuple[int, ...] = ()
    poly_min_x: frozenset | None = None


@dataclass
class TraceEntry:
    rule: str
    vertices: tuple[int, ...]
    potential_before: float
    potential_after: float | None


@dataclass
class ReductionContext:
    """Optional per-run hooks: structured trace and measure-drop checking."""

    trace: list[TraceEntry] | None = None
    check: bool = True
    early_cycle_exit: bool = False
    histogram: dict[str, int] = field(default_factory=dict)

    def record(self, rule: str) -> None:
        self.histogram[rule] = self.histogram.get(rule, 0) + 1


def _bound_reached(inst: Instance) -> bool:
    # The counting argument needs a tent to survive the budget: a kept tent
    # joins three undeletable components acyclically, so with t > k tents,
    # 2(t - k) <= gap - 1.  Without t > k the inequality can hold on
    # feasible corner cases (empty undeletable side), so it must be guarded.
    m = measures(inst)
    return m.tents > inst.k and 2 * m.tents >= 2 * inst.k + m.u_gap


def _tentcase(inst: Instance) -> RuleOutcome:
    x = solve_tent_instance(make_tent_instance(inst))
    return RuleOutcome(kind=POLY_SOLVED, rule="parity", poly_min_x=x)


def _prune(inst: Instance, only_d: bool) -> tuple[int, ...] | None:
    verts = inst.d_vertices() if only_d else sorted(inst.side)
    doomed = [v for v in verts if inst.g.degree(v) <= 1]
    if not doomed:
        return None
    for v in doomed:
        delete_vertex(inst, v)
    return tuple(doomed)


def _bypass(inst: Instance) -> tuple[int, ...] | None:
    """Resolve the lowest-id degree-2 deletable vertex.

    Moving it to the undeletable side is only sound while that cannot close
    an undeletable cycle; when both neighbours sit in one undeletable
    component, the vertex is the only deletable point on that cycle and is
    forced into the solution instead.  Returns the forced originals.
    """
    for v in inst.d_vertices():
        if inst.g.degree(v) != 2:
            continue
        u_nbrs = [w for w in inst.g.neighbors(v) if inst.side[w] == U_SIDE]
        if len(u_nbrs) == 2:
            labels = inst.g.component_labels(
                [w for w, s in inst.side.items() if s == U_SIDE])
            if labels[u_nbrs[0]] == labels[u_nbrs[1]]:
                orig = delete_vertex(inst, v)
                inst.k -= 1
                return (orig,)
            move_to_u(inst, v)
        elif len(u_nbrs) == 1:
            move_to_u(inst, v)
        else:
            nbrs = [w for w in inst.g.neighbors(v) if inst.side[w] == D_SIDE]
            if inst.g.multiplicity(v, nbrs[0]) != 1:
                raise InvariantError("parallel edge at a degree-2 deletable vertex")
            contract_degree2(inst, v, min(nbrs))
        return ()
    return None


def _split(inst: Instance) -> int | None:
    for v in inst.d_vertices():
        if inst.d_degree(v) == 1 and inst.u_degree(v) == 2 and inst.g.degree(v) == 3:
            subdivide_leaf_edge(inst, v)
            return v
    return None


def reduce_simple(inst: Instance) -> RuleOutcome:
    """Apply the lowest-numbered applicable classic rule once."""
    if inst.k < 0:
        return RuleOutcome(kind=NO_INSTANCE, rule="budget")

    pruned = _prune(inst, only_d=False)
    if pruned is not None:
        return RuleOutcome(kind=CHANGED, rule="r1-prune", forced=())

    comp = inst.g.component_labels([v for v, s in inst.side.items() if s == U_SIDE])
    for v in inst.d_vertices():
        per_comp: dict[int, int] = {}
        hit = None
        for w in inst.g.neighbors(v):
            if inst.side[w] == U_SIDE:
                c = comp[w]
                per_comp[c] = per_comp.get(c, 0) + inst.g.multiplicity(v, w)
                if per_comp[c] >= 2:
                    hit = v
                    break
        if hit is not None:
            orig = delete_vertex(inst, v)
            inst.k -= 1
            return RuleOutcome(kind=CHANGED, rule="r2-force", forced=(orig,))

    bypassed = _bypass(inst)
    if bypassed is not None:
        return RuleOutcome(kind=CHANGED, rule="r3-bypass", forced=bypassed)

    if _bound_reached(inst):
        return RuleOutcome(kind=NO_INSTANCE, rule="r4-bound")

    if _split(inst) is not None:
        return RuleOutcome(kind=CHANGED, rule="r5-split")

    if inst.all_tents():
        return _tentcase(inst)

    return RuleOutcome(kind=IRREDUCIBLE)


def reduce_fast(inst: Instance, early_cycle_exit: bool = False) -> RuleOutcome:
    """Apply the lowest-numbered applicable fast-family rule once."""
    if inst.k < 0:
        return RuleOutcome(kind=NO_INSTANCE, rule="budget")

    if early_cycle_exit and not inst.g.is_forest(
            [v for v, s in inst.side.items() if s == U_SIDE]):
        return RuleOutcome(kind=NO_INSTANCE, rule="f0-cycle-exit")

    pruned = _prune(inst, only_d=True)
    if pruned is not None:
        return RuleOutcome(kind=CHANGED, rule="f1-prune")

    bypassed = _bypass(inst)
    if bypassed is not None:
        return RuleOutcome(kind=CHANGED, rule="f2-bypass", forced=bypassed)

    if _bound_reached(inst):
        return RuleOutcome(kind=NO_INSTANCE, rule="f3-bound")

    if _split(inst) is not None:
        return RuleOutcome(kind=CHANGED, rule="f4-split")

    if inst.all_tents():
        if inst.g.is_forest([v for v, s in inst.side.items() if s == U_SIDE]):
            return _tentcase(inst)
        return RuleOutcome(kind=NO_INSTANCE, rule="f5-cyclic")

    return RuleOutcome(kind=IRREDUCIBLE)


def reduce_step(inst: Instance, family: str,
                early_cycle_exit: bool = False) -> RuleOutcome:
    if family == SIMPLE:
        return reduce_simple(inst)
    if family == FAST:
        return reduce_fast(inst, early_cycle_exit=early_cycle_exit)
    raise ValueError(f"unknown family {family!r}")


def reduce_to_fixpoint(inst: Instance, family: str,
                       ctx: ReductionContext | None = None) -> RuleOutcome:
    """Run single steps until an answer or an irreducible instance.

    Collects forced deletions across steps; verifies on request that no
    step increases the family's potential and that splits pay their
    guaranteed drop.
    """
    if ctx is None:
        ctx = ReductionContext(check=False)
    forced: list[int] = []
    # Each step removes a vertex, spends a unit of budget, or mints a tent;
    # this bound is far above anything a legal run can reach.
    step_limit = 30 * (len(inst.side) + 5) ** 2
    for _ in range(step_limit):
        before = measures(inst) if (ctx.check or ctx.trace is not None) else None
        out = reduce_step(inst, family, early_cycle_exit=ctx.early_cycle_exit)
        if out.kind in (NO_INSTANCE, POLY_SOLVED, IRREDUCIBLE):
            if out.rule:
                ctx.record(out.rule)
            return RuleOutcome(kind=out.kind, rule=out.rule,
                               forced=tuple(forced), poly_min_x=out.poly_min_x)
        forced.extend(out.forced)
        ctx.record(out.rule)
        if before is not None:
            after = measures(inst)
            if ctx.trace is not None:
                pot_b = (before.simple_potential if family == SIMPLE
                         else before.alpha_potential)
                pot_a = (after.simple_potential if family == SIMPLE
                         else after.alpha_potential)
                ctx.trace.append(TraceEntry(out.rule, out.forced, pot_b, pot_a))
            if ctx.check:
                _check_step(inst, family, out.rule, before, after)
    raise InvariantError("reduction did not reach a fixpoint within bounds")


def _check_step(inst, family, rule, before, after) -> None:
    eps = 1e-9
    if family == SIMPLE:
        drop = before.simple_potential - after.simple_potential
    else:
        drop = before.alpha_potential - after.alpha_potential
    if drop < -eps:
        raise InvariantError(f"rule {rule} increased the potential by {-drop}")
    if rule in ("r5-split", "f4-split") and family == FAST:
        if drop < (1 - inst.alpha) - eps:
            raise InvariantError(
                f"split drop {drop} below guaranteed {1 - inst.alpha}")
