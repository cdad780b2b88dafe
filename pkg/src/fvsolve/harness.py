"""Randomized cross-checking suites and instance generators.

Everything the ``verify`` subcommand and the acceptance tests share lives
here: seeded generators for graphs and disjoint instances, constructed
witnesses for each guide type, and the suites that compare the production
solvers against the brute-force oracles.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import oracle
from .graphio import SimpleGraph
from .instance import Instance, classify, find_guide, measures
from .multigraph import Multigraph
from .parity import build_parity_input, make_tent_instance, solve_tent_instance
from .reductions import (
    CHANGED,
    FAST,
    IRREDUCIBLE,
    NO_INSTANCE,
    POLY_SOLVED,
    SIMPLE,
    reduce_step,
)
from .solver import min_fvs, solve_disjoint


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < 25:
            self.failures.append(msg)


# -- generators ------------------------------------------------------------

def gnp(rng: random.Random, n: int, p: float) -> SimpleGraph:
    verts = tuple(range(n))
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < p)
    return SimpleGraph(vertices=verts, edges=edges)


def complete_graph(n: int) -> SimpleGraph:
    verts = tuple(range(n))
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    return SimpleGraph(vertices=verts, edges=edges)


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in outer + spokes + inner))
    return SimpleGraph(vertices=tuple(range(10)), edges=edges)


def _random_forest_edges(rng, ids, attach_prob=0.7):
    edges = []
    for i in range(1, len(ids)):
        if rng.random() < attach_prob:
            edges.append((ids[rng.randrange(i)], ids[i]))
    return edges


def random_instance(rng: random.Random, max_n: int = 10, alpha: float = 1.0,
                    u_cycles: bool = False) -> Instance:
    """Random disjoint instance: both sides are random forests joined by
    random cross edges; with ``u_cycles`` a few extra undeletable edges may
    close cycles there (fast family only)."""
    n_d = rng.randint(1, max(1, max_n - 1))
    n_u = rng.randint(0, max_n - n_d)
    ids = list(range(n_d + n_u))
    rng.shuffle(ids)
    d_ids, u_ids = ids[:n_d], ids[n_d:]
    g = Multigraph.from_edges(ids, [])
    present = set()

    def put(u, v):
        e = (min(u, v), max(u, v))
        if u != v and e not in present:
            present.add(e)
            g.add_edge(u, v)

    for u, v in _random_forest_edges(rng, d_ids):
        put(u, v)
    for u, v in _random_forest_edges(rng, u_ids):
        put(u, v)
    if u_cycles and len(u_ids) >= 3:
        for _ in range(rng.randint(0, 2)):
            put(rng.choice(u_ids), rng.choice(u_ids))
    p_cross = rng.choice([0.15, 0.3, 0.5])
    for u in u_ids:
        for d in d_ids:
            if rng.random() < p_cross:
                put(u, d)
    k = rng.randint(0, n_d)
    return Instance.build(g, u_ids, d_ids, k, alpha)


def random_tent_instance(rng: random.Random, max_d: int = 10,
                         alpha: float = 0.84) -> Instance:
    """All-tents instance over a random undeletable forest; a tent's three
    neighbours may share components."""
    n_t = rng.randint(0, max_d)
    n_u = rng.randint(3, 9)
    u_ids = list(range(n_u))
    t_ids = list(range(n_u, n_u + n_t))
    g = Multigraph.from_edges(u_ids + t_ids,
                              _random_forest_edges(rng, u_ids, attach_prob=0.5))
    for t in t_ids:
        for u in rng.sample(u_ids, 3):
            g.add_edge(t, u)
    k = rng.randint(0, max(0, n_t))
    return Instance.build(g, u_ids, t_ids, k, alpha)


def random_overloaded_instance(rng: random.Random,
                               alpha: float = 1.0) -> Instance:
    """Instance with more tents than the budget and component count allow:
    with ``t`` tents, ``c`` undeletable components and budget
    ``k <= (2t - c) // 2`` the answer is always NO."""
    comps = rng.randint(1, 5)
    u_ids = []
    g = Multigraph()
    for _ in range(comps):
        size = rng.randint(1, 3)
        chain = [g.add_vertex() for _ in range(size)]
        for a, b in zip(chain, chain[1:]):
            g.add_edge(a, b)
        u_ids.extend(chain)
    while len(u_ids) < 3:
        u_ids.append(g.add_vertex())
        comps += 1
    t = rng.randint((comps + 1) // 2 + 1, (comps + 1) // 2 + 5)
    t_ids = []
    for _ in range(t):
        v = g.add_vertex()
        t_ids.append(v)
        for u in rng.sample(u_ids, 3):
            g.add_edge(v, u)
    k = rng.randint(0, max(0, (2 * t - comps) // 2))
    inst = Instance.build(g, u_ids, t_ids, k, alpha)
    m = measures(inst)
    assert 2 * m.tents >= 2 * inst.k + m.u_components
    return inst


def guide_witness(f: int, s: int, d: int, alpha: float = 0.84) -> tuple[Instance, int]:
    """Irreducible instance whose unique guide is ``v`` with type
    ``(f, s, d)``: a root of undeletable degree 3 parents the guide, whose
    children are ``s`` singles and ``d`` doubles."""
    g = Multigraph()
    root = g.add_vertex(0)
    guide = g.add_vertex(1)
    g.add_edge(root, guide)
    d_ids = [root, guide]
    u_ids = []

    def fresh_u(attach_to, count):
        for _ in range(count):
            u = g.add_vertex(100 + len(u_ids))
            u_ids.append(u)
            g.add_edge(attach_to, u)

    def add_single(parent):
        w = g.add_vertex(len(d_ids) + 2)
        d_ids.append(w)
        g.add_edge(parent, w)
        fresh_u(w, 3)
        return w

    fresh_u(root, 3)
    fresh_u(guide, f)
    for _ in range(s):
        add_single(guide)
    for _ in range(d):
        dbl = g.add_vertex(len(d_ids) + 2)
        d_ids.append(dbl)
        g.add_edge(guide, dbl)
        add_single(dbl)
        add_single(dbl)
    inst = Instance.build(g, u_ids, d_ids, k=len(d_ids) + 2, alpha=alpha)
    info = find_guide(inst, classify(inst))
    if info.vertex != guide or info.triple != (f, s, d):
        raise AssertionError(f"witness built guide {info} instead of {(f, s, d)}")
    return inst, guide


def fit_slope(xs, ys) -> float:
    """Least-squares slope of ``ys`` against ``xs``."""
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def hard_instance(k: int, cap: int = 14) -> SimpleGraph:
    """Deterministic random graph whose minimum feedback vertex set has
    size exactly ``k``, found by seeded rejection sampling."""
    rng = random.Random(7000 + k)
    n = min(cap, k + 4)
    p = 0.65
    for _ in range(2000):
        g = gnp(rng, n, p)
        size = len(oracle.brute_fvs(g.vertices, g.edges, cap=cap))
        if size == k:
            return g
        p = min(0.95, p + 0.03) if size < k else max(0.2, p - 0.03)
    raise RuntimeError(f"could not calibrate a hard instance for k={k}")


# -- suites ------------------------------------------------------------

def suite_solver_exactness(trials: int = 120, seed: int = 1, n_max: int = 12,
                           families=(SIMPLE, FAST),
                           ps=(0.2, 0.4, 0.6)) -> SuiteResult:
    """Both solvers must find the oracle's minimum with valid certificates."""
    rng = random.Random(seed)
    res = SuiteResult("solver-exactness", trials)
    for t in range(trials):
        n = rng.randint(3, n_max)
        p = rng.choice(ps)
        g = gnp(rng, n, p)
        want = len(oracle.brute_fvs(g.vertices, g.edges))
        for family in families:
            try:
                got, out = min_fvs(g.vertices, g.edges, family)
            except Exception as exc:
                res.fail(f"trial {t} {family}: solver raised {exc!r}")
                continue
            if got != want:
                res.fail(f"trial {t} {family}: minimum {got} != oracle {want} "
                         f"on n={n} p={p} edges={g.edges}")
                continue
            kept = [v for v in g.vertices if v not in out.certificate]
            sub = [e for e in g.edges
                   if e[0] in set(kept) and e[1] in set(kept)]
            if not oracle.edges_form_forest(kept, sub):
                res.fail(f"trial {t} {family}: certificate not a solution")
    return res


def suite_reduction_safeness(applications: int = 400, seed: int = 2,
                             n_max: int = 10) -> SuiteResult:
    """Every single rule application preserves the oracle answer, budgets
    included, and back-mapped certificates stay valid for the original."""
    rng = random.Random(seed)
    res = SuiteResult("reduction-safeness", applications)
    done = 0
    while done < applications:
        family = SIMPLE if done % 2 == 0 else FAST
        alpha = 1.0 if family == SIMPLE else 0.84
        inst = random_instance(rng, n_max, alpha,
                               u_cycles=(family == FAST and rng.random() < 0.3))
        g_orig = inst.g.copy()
        k_orig = inst.k
        forced: list[int] = []
        while done < applications:
            before = oracle.brute_disjoint_fvs(inst)
            out = reduce_step(inst, family)
            if out.kind == IRREDUCIBLE:
                break
            done += 1
            if out.kind == NO_INSTANCE:
                if before.yes:
                    res.fail(f"{family} rule {out.rule} rejected a YES instance")
                break
            if out.kind == POLY_SOLVED:
                yes_after = len(out.poly_min_x) <= inst.k
                if yes_after != before.yes:
                    res.fail(f"{family} parity case flipped the answer")
                elif yes_after:
                    cert = set(forced) | {inst.rep[v] for v in out.poly_min_x}
                    if len(cert) > k_orig or not oracle.graph_is_forest(
                            g_orig, without=cert):
                        res.fail(f"{family} parity certificate invalid")
                break
            forced.extend(out.forced)
            after = oracle.brute_disjoint_fvs(inst)
            if after.yes != before.yes:
                res.fail(f"{family} rule {out.rule} flipped the answer")
                break
            if after.yes and after.min_x is not None:
                cert = set(forced) | {inst.rep[v] for v in after.min_x}
                if len(cert) > k_orig or not oracle.graph_is_forest(
                        g_orig, without=cert):
                    res.fail(f"{family} rule {out.rule} broke back-mapping")
                    break
    return res


def suite_parity(trials: int = 100, seed: int = 3, max_d: int = 10) -> SuiteResult:
    """The contraction correspondence and the exact parity optimum."""
    rng = random.Random(seed)
    res = SuiteResult("matroid-parity", trials)
    for t in range(trials):
        inst = random_tent_instance(rng, max_d)
        tent = make_tent_instance(inst)
        parity = build_parity_input(tent)
        d_verts = inst.d_vertices()
        s_edges = []
        for u, w in inst.g.edge_list():
            if inst.side[u] == "U" and inst.side[w] == "U":
                s_edges.append((u, w))
        for v, (e0, _, _) in tent.edge_enum.items():
            s_edges.append((v, e0))
        all_g = inst.g.vertices()
        h_verts = parity.h.vertices()
        for mask in range(1 << len(d_verts)):
            j = [d_verts[i] for i in range(len(d_verts)) if mask >> i & 1]
            a_j = []
            for v in j:
                _, e1, e2 = tent.edge_enum[v]
                a_j.extend([(v, e1), (v, e2)])
            in_g = oracle.edges_form_forest(all_g, s_edges + a_j)
            removed = oracle.graph_is_forest(inst.g, without=set(d_verts) - set(j))
            in_h = oracle.edges_form_forest(
                h_verts, [e for v in j for e in parity.pairs[v]])
            if not (in_g == removed == in_h):
                res.fail(f"trial {t}: correspondence broke for J={j}")
                break
        got = solve_tent_instance(tent)
        brute = oracle.brute_disjoint_fvs(inst)
        if len(got) != (len(brute.min_x) if brute.min_x is not None else None):
            res.fail(f"trial {t}: tent minimum {len(got)} != oracle")
        if len(d_verts) <= oracle.MAX_PARITY_PAIRS:
            from .parity import graphic_matroid_parity
            if len(graphic_matroid_parity(parity)) != len(oracle.brute_parity(parity)):
                res.fail(f"trial {t}: parity optimum mismatch")
    return res


def suite_overloaded_no(trials: int = 100, seed: int = 4) -> SuiteResult:
    """Instances with too many tents are NO for the oracle and both solvers."""
    rng = random.Random(seed)
    res = SuiteResult("tent-overload-no", trials)
    for t in range(trials):
        inst = random_overloaded_instance(rng)
        if oracle.brute_disjoint_fvs(inst).yes:
            res.fail(f"trial {t}: oracle says YES on an overloaded instance")
            continue
        for family in (SIMPLE, FAST):
            probe = inst.copy()
            probe.alpha = 1.0 if family == SIMPLE else 0.84
            if solve_disjoint(probe, family).yes:
                res.fail(f"trial {t}: {family} solver says YES")
    return res


ALL_SUITES = {
    "solver-exactness": suite_solver_exactness,
    "reduction-safeness": suite_reduction_safeness,
    "matroid-parity": suite_parity,
    "tent-overload-no": suite_overloaded_no,
}
