"""The branching-rule table shared by the solver and the analyzer.

Each fast-family branching rule is written once, as a small program against
an abstract executor.  The solver runs the program with a concrete executor
that copies and mutates instances; the analyzer runs it with a symbolic
executor that only accumulates potential drops (affine expressions in the
weight ``alpha``).  Because both interpretations traverse the identical
branch tree, the complexity analysis and the actual execution cannot drift
apart, and the solver can assert at every node that the recomputed drop of
each generated child is at least the analyzer's prediction for that leaf.

Building blocks and their guaranteed drops:

  * elementary branch on a deletable vertex of undeletable degree ``f``:
    at least 1 in the delete branch, ``(f - 1) * alpha`` in the fix branch;
  * a vertex turning into a tent: 1;
  * the split rule (subdivide a deletable leaf's tree edge): ``1 - alpha``;
  * prune/bypass applications: no guaranteed drop.

Rules are dispatched on a guide's type triple ``(f, s, d)`` (undeletable
degree, single children, double children); ``>=`` patterns match at least.
When several rules match, the first in table order is used.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .instance import (
    D_SIDE,
    GuideInfo,
    Instance,
    InvariantError,
    RootedView,
    DOUBLE,
    SINGLE,
    contract_degree2,
    delete_vertex,
    move_to_u,
    subdivide_leaf_edge,
)


@dataclass(frozen=True)
class AffineDrop:
    """A potential drop of the form ``const + coeff * alpha``."""

    const: float
    coeff: float

    def at(self, alpha: float) -> float:
        return self.const + self.coeff * alpha

    def plus(self, other: "AffineDrop") -> "AffineDrop":
        return AffineDrop(self.const + other.const, self.coeff + other.coeff)

    def __str__(self) -> str:
        if self.coeff == 0:
            return f"{self.const:g}"
        a = f"{self.coeff:g}a" if self.coeff != 1 else "a"
        if self.const == 0:
            return a
        sign = "+" if self.coeff > 0 else "-"
        mag = f"{abs(self.coeff):g}a" if abs(self.coeff) != 1 else "a"
        return f"{self.const:g}{sign}{mag}"


ZERO = AffineDrop(0.0, 0.0)

# Drops used by the simple algorithm's lone branching rule: the chosen
# vertex has undeletable degree at least 3 across distinct components, so
# the fix branch merges at least three components into one.
SIMPLE_BRANCH_DROPS = (AffineDrop(1.0, 0.0), AffineDrop(0.0, 2.0))


# -- guide state ---------------------------------------------------------

@dataclass(frozen=True)
class GuideState:
    """The guide vertex and its currently-known children, threaded through
    a rule's execution as the rule text rewrites the guide's type."""

    v: object
    f: int
    singles: tuple
    doubles: tuple
    double_children: dict

    @property
    def s(self) -> int:
        return len(self.singles)

    @property
    def d(self) -> int:
        return len(self.doubles)

    def swap_double_for_single(self, u, merged) -> "GuideState":
        return replace(self, singles=self.singles + (merged,),
                       doubles=tuple(x for x in self.doubles if x != u))

    def drop_double_bump_f(self, u) -> "GuideState":
        return replace(self, f=self.f + 1,
                       doubles=tuple(x for x in self.doubles if x != u))

    def drop_single_bump_f(self, w) -> "GuideState":
        return replace(self, f=self.f + 1,
                       singles=tuple(x for x in self.singles if x != w))


class _SymVertex:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return self.name


def symbolic_guide_state(f: int, s: int, d: int) -> GuideState:
    singles = tuple(_SymVertex(f"s{i}") for i in range(s))
    doubles = tuple(_SymVertex(f"d{i}") for i in range(d))
    kids = {u: (_SymVertex(f"{u}a"), _SymVertex(f"{u}b")) for u in doubles}
    return GuideState(v=_SymVertex("v"), f=f, singles=singles,
                      doubles=doubles, double_children=kids)


def concrete_guide_state(inst: Instance, guide: GuideInfo,
                         view: RootedView) -> GuideState:
    v = guide.vertex
    singles = tuple(sorted(w for w in view.children[v] if view.cls[w] == SINGLE))
    doubles = tuple(sorted(w for w in view.children[v] if view.cls[w] == DOUBLE))
    kids = {u: tuple(sorted(view.children[u])) for u in doubles}
    return GuideState(v=v, f=guide.f, singles=singles, doubles=doubles,
                      double_children=kids)


# -- executors -----------------------------------------------------------

class SymbolicExec:
    """Accumulates the guaranteed potential drop along one branch path."""

    __slots__ = ("drop",)

    def __init__(self, drop: AffineDrop = ZERO):
        self.drop = drop

    def branch(self, x, udeg: int):
        return (SymbolicExec(self.drop.plus(AffineDrop(1.0, 0.0))),
                SymbolicExec(self.drop.plus(AffineDrop(0.0, udeg - 1))))

    def move_to_u(self, x) -> None:
        pass

    def dissolve(self, u, into):
        return _SymVertex(f"m({into!r})")

    def subdivide_to_tent(self, x) -> None:
        self.drop = self.drop.plus(AffineDrop(1.0, -1.0))

    def became_tent(self, x) -> None:
        self.drop = self.drop.plus(AffineDrop(1.0, 0.0))


class ConcreteExec:
    """Carries an instance copy along one branch path of a rule."""

    __slots__ = ("inst", "forced")

    def __init__(self, inst: Instance, forced: tuple[int, ...] = ()):
        self.inst = inst
        self.forced = forced

    def _fork(self) -> "ConcreteExec":
        return ConcreteExec(self.inst.copy(), self.forced)

    def branch(self, x, udeg: int):
        if self.inst.u_degree(x) != udeg:
            raise InvariantError(
                f"vertex {x} has undeletable degree {self.inst.u_degree(x)}, "
                f"rule expected {udeg}")
        exd = self._fork()
        orig = delete_vertex(exd.inst, x)
        exd.inst.k -= 1
        exd.forced = exd.forced + (orig,)
        exf = self._fork()
        move_to_u(exf.inst, x)
        return exd, exf

    def move_to_u(self, x) -> None:
        if self.inst.g.degree(x) != 2 or self.inst.u_degree(x) < 1:
            raise InvariantError(f"vertex {x} cannot be bypassed into U")
        move_to_u(self.inst, x)

    def dissolve(self, u, into):
        if self.inst.g.degree(u) != 2:
            raise InvariantError(f"vertex {u} cannot be dissolved")
        return contract_degree2(self.inst, u, into)

    def subdivide_to_tent(self, x) -> None:
        subdivide_leaf_edge(self.inst, x)

    def became_tent(self, x) -> None:
        if not self.inst.is_tent(x):
            raise InvariantError(f"vertex {x} was expected to become a tent")


# -- the rules -----------------------------------------------------------

def _branch_guarded_child(ex, parent, w):
    """Branch on ``w``, the only remaining child of ``parent`` (the
    ``(1,1,0)`` shape): deleting ``w`` leaves ``parent`` with degree 2 and
    an undeletable neighbour, so it is bypassed into the undeletable side;
    fixing ``w`` leaves ``parent`` a deletable leaf of undeletable degree
    2, so the split rule turns it into a tent."""
    exd, exf = ex.branch(w, 3)
    exd.move_to_u(parent)
    exf.subdivide_to_tent(parent)
    return [exd, exf]


def _eliminate_double(ex, g: GuideState):
    """Shared subroutine: resolve the guide's lowest double child ``u``.

    Branches on one of ``u``'s singles.  In the delete branch ``u`` gets
    dissolved and the guide gains the merged vertex as a single child; in
    the fix branch ``u`` itself becomes a ``(1,1,0)`` guide and is resolved
    recursively, raising the guide's undeletable degree by one either way.
    Returns the delete-branch executor and guide state, then the list of
    fix-side leaf executors and their guide state.
    """
    u = g.doubles[0]
    w1, w2 = g.double_children[u]
    exd, exf = ex.branch(w1, 3)
    merged = exd.dissolve(u, into=w2)
    g_del = g.swap_double_for_single(u, merged)
    fix_leaves = _branch_guarded_child(exf, u, w2)
    g_fix = g.drop_double_bump_f(u)
    return exd, g_del, fix_leaves, g_fix


def rule_f4(ex, g):
    """(>=4,0,0): plain elementary branch on the guide."""
    exd, exf = ex.branch(g.v, g.f)
    return [exd, exf]


def rule_110(ex, g):
    """(1,1,0): branch on the only child."""
    return _branch_guarded_child(ex, g.v, g.singles[0])


def rule_f2_s1(ex, g):
    """(>=2,>=1,>=0): branch on the guide; deleting it makes a single
    child a tent, fixing it promotes that child to a (>=4,0,0) guide."""
    w = g.singles[0]
    exd, exf = ex.branch(g.v, g.f)
    exd.became_tent(w)
    wd, wf = exf.branch(w, 4)
    return [exd, wd, wf]


def rule_f2_d1(ex, g):
    """(>=2,>=0,>=1): eliminate a double, then handle the extra single."""
    exd, g_del, fix_leaves, _ = _eliminate_double(ex, g)
    return rule_f2_s1(exd, g_del) + fix_leaves


def rule_101(ex, g):
    """(1,0,1): eliminate the only double; afterwards the guide is a
    deletable leaf of undeletable degree 2 and is split away."""
    exd, g_del, fix_leaves, _ = _eliminate_double(ex, g)
    out = _branch_guarded_child(exd, g_del.v, g_del.singles[0])
    for leaf in fix_leaves:
        leaf.subdivide_to_tent(g.v)
    return out + fix_leaves


def rule_1_s2(ex, g):
    """(1,>=2,>=0): branch on the guide; deleting it tents two singles,
    fixing it promotes both to (>=4,0,0) guides resolved in sequence."""
    w1, w2 = g.singles[0], g.singles[1]
    exd, exf = ex.branch(g.v, g.f)
    exd.became_tent(w1)
    exd.became_tent(w2)
    leaves = []
    ad, af = exf.branch(w1, 4)
    for e in (ad, af):
        bd, bf = e.branch(w2, 4)
        leaves.extend([bd, bf])
    return [exd] + leaves


def rule_1_s1_d1(ex, g):
    """(1,>=1,>=1): eliminate a double, then recurse per remaining shape."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_1_s2(exd, g_del)
    for leaf in fix_leaves:
        out += rule_f2_s1(leaf, g_fix)
    return out


def rule_1_d2(ex, g):
    """(1,>=0,>=2)."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_1_s1_d1(exd, g_del)
    for leaf in fix_leaves:
        out += rule_f2_d1(leaf, g_fix)
    return out


def rule_011(ex, g):
    """(0,1,1): eliminate the double; the delete branch leaves the guide a
    double itself, nothing more to do there."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = [exd]
    for leaf in fix_leaves:
        out += rule_110(leaf, g_fix)
    return out


def rule_002(ex, g):
    """(0,0,2)."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_011(exd, g_del)
    for leaf in fix_leaves:
        out += rule_101(leaf, g_fix)
    return out


def rule_0_s3(ex, g):
    """(0,>=3,>=0): branch on a single child; nothing extra on delete,
    the fix raises the guide to (1,>=2,>=0)."""
    w = g.singles[0]
    exd, exf = ex.branch(w, 3)
    return [exd] + rule_1_s2(exf, g.drop_single_bump_f(w))


def rule_0_s2_d1(ex, g):
    """(0,>=2,>=1)."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_0_s3(exd, g_del)
    for leaf in fix_leaves:
        out += rule_1_s2(leaf, g_fix)
    return out


def rule_0_s1_d2(ex, g):
    """(0,>=1,>=2)."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_0_s2_d1(exd, g_del)
    for leaf in fix_leaves:
        out += rule_1_s1_d1(leaf, g_fix)
    return out


def rule_0_d3(ex, g):
    """(0,>=0,>=3)."""
    exd, g_del, fix_leaves, g_fix = _eliminate_double(ex, g)
    out = rule_0_s1_d2(exd, g_del)
    for leaf in fix_leaves:
        out += rule_1_d2(leaf, g_fix)
    return out


# -- dispatch table --------------------------------------------------------

@dataclass(frozen=True)
class GuidePattern:
    f: int
    s: int
    d: int
    f_ge: bool = False
    s_ge: bool = False
    d_ge: bool = False

    def matches(self, f: int, s: int, d: int) -> bool:
        return ((f == self.f or (self.f_ge and f > self.f))
                and (s == self.s or (self.s_ge and s > self.s))
                and (d == self.d or (self.d_ge and d > self.d)))

    @property
    def min_params(self) -> tuple[int, int, int]:
        return (self.f, self.s, self.d)


@dataclass(frozen=True)
class BranchRule:
    name: str
    pattern: GuidePattern
    fn: object


RULE_TABLE: tuple[BranchRule, ...] = (
    BranchRule("(>=4,0,0)", GuidePattern(4, 0, 0, f_ge=True), rule_f4),
    BranchRule("(1,1,0)", GuidePattern(1, 1, 0), rule_110),
    BranchRule("(>=2,>=1,>=0)",
               GuidePattern(2, 1, 0, f_ge=True, s_ge=True, d_ge=True), rule_f2_s1),
    BranchRule("(>=2,>=0,>=1)",
               GuidePattern(2, 0, 1, f_ge=True, s_ge=True, d_ge=True), rule_f2_d1),
    BranchRule("(1,0,1)", GuidePattern(1, 0, 1), rule_101),
    BranchRule("(1,>=2,>=0)",
               GuidePattern(1, 2, 0, s_ge=True, d_ge=True), rule_1_s2),
    BranchRule("(1,>=1,>=1)",
               GuidePattern(1, 1, 1, s_ge=True, d_ge=True), rule_1_s1_d1),
    BranchRule("(1,>=0,>=2)",
               GuidePattern(1, 0, 2, s_ge=True, d_ge=True), rule_1_d2),
    BranchRule("(0,1,1)", GuidePattern(0, 1, 1), rule_011),
    BranchRule("(0,0,2)", GuidePattern(0, 0, 2), rule_002),
    BranchRule("(0,>=3,>=0)",
               GuidePattern(0, 3, 0, s_ge=True, d_ge=True), rule_0_s3),
    BranchRule("(0,>=2,>=1)",
               GuidePattern(0, 2, 1, s_ge=True, d_ge=True), rule_0_s2_d1),
    BranchRule("(0,>=1,>=2)",
               GuidePattern(0, 1, 2, s_ge=True, d_ge=True), rule_0_s1_d2),
    BranchRule("(0,>=0,>=3)",
               GuidePattern(0, 0, 3, s_ge=True, d_ge=True), rule_0_d3),
)


def dispatch(f: int, s: int, d: int) -> BranchRule | None:
    """First rule in table order matching the guide type, if any."""
    for rule in RULE_TABLE:
        if rule.pattern.matches(f, s, d):
            return rule
    return None


def rule_by_name(name: str) -> BranchRule:
    for rule in RULE_TABLE:
        if rule.name == name:
            return rule
    raise KeyError(f"unknown branching rule {name!r}")


def expand_symbolic(rule: BranchRule, f: int, s: int, d: int) -> tuple[AffineDrop, ...]:
    """Per-leaf guaranteed drops of ``rule`` at concrete guide parameters."""
    if not rule.pattern.matches(f, s, d):
        raise ValueError(f"parameters ({f},{s},{d}) do not match {rule.name}")
    leaves = rule.fn(SymbolicExec(), symbolic_guide_state(f, s, d))
    return tuple(leaf.drop for leaf in leaves)


def apply_concrete(inst: Instance, guide: GuideInfo,
                   view: RootedView) -> tuple[BranchRule, list[ConcreteExec]]:
    """Run the matching rule on a concrete instance; children come back in
    the same order as the symbolic expansion's leaves."""
    rule = dispatch(guide.f, guide.s, guide.d)
    if rule is None:
        raise InvariantError(
            f"no branching rule matches guide type {guide.triple}")
    state = concrete_guide_state(inst, guide, view)
    leaves = rule.fn(ConcreteExec(inst.copy()), state)
    return rule, leaves
