"""Automated branching-vector analysis of the solvers' rule systems.

For every branching rule the shared rule table is expanded symbolically
into per-leaf potential drops, the characteristic root of each resulting
vector is found by bisection, and the worst root over all rules bounds the
search-tree growth per unit of potential.  For the disjoint subproblems
arising from compression the potential is at most ``(1 + alpha) * k + 1``,
and summing the subset-guessing layer on top turns a per-potential base
``b`` into a feedback-vertex-set base of ``1 + b ** (1 + alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import rules as rules_mod
from .instance import FORBIDDEN_GUIDE_TYPES
from .rules import RULE_TABLE, SIMPLE_BRANCH_DROPS, AffineDrop

SIMPLE = "simple"
FAST = "fast"

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2

ROOT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BranchingVector:
    """Per-leaf potential drops of one rule at concrete guide parameters."""

    rule: str
    params: tuple[int, int, int] | None
    drops: tuple[AffineDrop, ...]

    def values(self, alpha: float) -> tuple[float, ...]:
        return tuple(d.at(alpha) for d in self.drops)

    def root(self, alpha: float) -> float:
        return characteristic_root(self.values(alpha))


def characteristic_root(drops) -> float:
    """The unique ``x >= 1`` with ``sum(x ** -d) == 1``.

    A single-entry vector is degenerate (no real branching) and yields
    exactly 1.  All drops must be positive.
    """
    drops = tuple(drops)
    if not drops:
        raise ValueError("empty branching vector")
    if any(d <= 0 for d in drops):
        raise ValueError(f"non-positive drop in branching vector {drops}")
    if len(drops) == 1:
        return 1.0

    def f(x: float) -> float:
        return sum(x ** -d for d in drops) - 1.0

    lo = 1.0
    hi = 2.0
    while f(hi) > 0:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if hi - lo <= ROOT_TOLERANCE:
            break
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def simple_vector() -> BranchingVector:
    """The simple algorithm's lone branching rule, drops ``(1, 2*alpha)``."""
    return BranchingVector("branch-max-u", None, SIMPLE_BRANCH_DROPS)


def expand_rule(name: str, params: tuple[int, int, int]) -> BranchingVector:
    """Symbolic expansion of a named fast-family rule at concrete
    ``(f, s, d)``; raises if the parameters do not match the rule."""
    rule = rules_mod.rule_by_name(name)
    drops = rules_mod.expand_symbolic(rule, *params)
    return BranchingVector(rule.name, params, drops)


def family_vectors(family: str) -> list[BranchingVector]:
    """Worst-case vectors: each rule at its minimum admissible parameters.

    Raising any parameter only adds to some fix-branch drops, which never
    increases a characteristic root; the analyzer verifies this numerically
    over a parameter horizon (see :func:`worst_case_is_at_minimum`).
    """
    if family == SIMPLE:
        return [simple_vector()]
    if family == FAST:
        return [expand_rule(rule.name, rule.pattern.min_params)
                for rule in RULE_TABLE]
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class RuleReport:
    rule: str
    params: tuple[int, int, int] | None
    drops: tuple[float, ...]
    root: float


@dataclass(frozen=True)
class AlphaReport:
    """Branching analysis at one weight ``alpha``.

    ``beta`` is the worst characteristic root; ``per_solve_base`` is
    ``beta ** (1 + alpha)``, the disjoint-subproblem cost per unit of
    budget; ``exponent_base`` adds the compression layer's subset sum and
    is the base of the full solver's running time.
    """

    family: str
    alpha: float
    beta: float
    per_solve_base: float
    exponent_base: float
    per_rule: tuple[RuleReport, ...]

    @property
    def worst_rule(self) -> str:
        return max(self.per_rule, key=lambda r: r.root).rule


def analyze(alpha: float, family: str = FAST) -> AlphaReport:
    """Full analysis at one alpha: per-rule vectors, worst root, bases."""
    if not 0.5 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [1/2, 1]")
    reports = []
    for vec in family_vectors(family):
        vals = vec.values(alpha)
        reports.append(RuleReport(vec.rule, vec.params, vals,
                                  characteristic_root(vals)))
    beta = max(r.root for r in reports)
    per_solve = beta ** (1 + alpha)
    return AlphaReport(family=family, alpha=alpha, beta=beta,
                       per_solve_base=per_solve,
                       exponent_base=1 + per_solve,
                       per_rule=tuple(reports))


@dataclass(frozen=True)
class SweepResult:
    family: str
    reports: tuple[AlphaReport, ...]
    best: AlphaReport


def sweep(family: str = FAST, lo: float = 0.5, hi: float = 1.0,
          step: float = 0.005) -> SweepResult:
    """Minimize the solver's exponent base over an alpha grid."""
    if not (0.5 <= lo <= hi <= 1.0):
        raise ValueError("grid must lie within [1/2, 1]")
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(round((hi - lo) / step))
    alphas = sorted({round(lo + i * step, 12) for i in range(count + 1)} | {hi})
    reports = tuple(analyze(a, family) for a in alphas if 0.5 <= a <= 1.0)
    best = min(reports, key=lambda r: r.exponent_base)
    return SweepResult(family=family, reports=reports, best=best)


def admissible_guide_types(f_max: int, s_max: int, d_max: int):
    """All guide types in the box that can occur on irreducible instances."""
    for f in range(f_max + 1):
        for s in range(s_max + 1):
            for d in range(d_max + 1):
                if (f, s, d) not in FORBIDDEN_GUIDE_TYPES:
                    yield (f, s, d)


def table_is_exhaustive(f_max: int = 6, s_max: int = 4, d_max: int = 4) -> bool:
    """Every admissible guide type in the box matches some rule."""
    return all(rules_mod.dispatch(f, s, d) is not None
               for (f, s, d) in admissible_guide_types(f_max, s_max, d_max))


def worst_case_is_at_minimum(alpha: float, f_max: int = 8, s_max: int = 5,
                             d_max: int = 5) -> bool:
    """Check numerically that no admissible parameterization of any rule
    has a larger root than that rule's minimum-parameter instantiation."""
    for (f, s, d) in admissible_guide_types(f_max, s_max, d_max):
        rule = rules_mod.dispatch(f, s, d)
        if rule is None:
            return False
        base = expand_rule(rule.name, rule.pattern.min_params).root(alpha)
        here = expand_rule(rule.name, (f, s, d)).root(alpha)
        if here > base + 1e-9:
            return False
    return True
