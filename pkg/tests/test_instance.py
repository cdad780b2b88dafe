import pytest

from fvsolve.harness import guide_witness, random_instance
from fvsolve.instance import (
    FORBIDDEN_GUIDE_TYPES,
    Instance,
    NoGuideError,
    classify,
    find_guide,
    measures,
)
from fvsolve.multigraph import GraphError, Multigraph
from fvsolve.reductions import FAST, IRREDUCIBLE, reduce_step, reduce_to_fixpoint

import random


def build(edges, u, d, k, alpha=1.0, extra_vertices=()):
    verts = set(u) | set(d) | set(extra_vertices)
    g = Multigraph.from_edges(sorted(verts), edges)
    return Instance.build(g, u, d, k, alpha)


class TestBuild:
    def test_deletable_side_must_be_forest(self):
        with pytest.raises(GraphError):
            build([(0, 1), (1, 2), (0, 2)], [], [0, 1, 2], 1)

    def test_partition_checked(self):
        g = Multigraph.from_edges([0, 1], [(0, 1)])
        with pytest.raises(GraphError):
            Instance.build(g, [0], [0, 1], 1)


class TestMeasures:
    def test_isolated_undeletable_vertices(self):
        inst = build([], [0, 1, 2], [], 2)
        m = measures(inst)
        assert (m.u_components, m.tents, m.simple_potential) == (3, 0, 5)

    def test_single_tent(self):
        # one tent adjacent to three single-vertex undeletable components
        inst = build([(3, 0), (3, 1), (3, 2)], [0, 1, 2], [3], 1, alpha=0.84)
        m = measures(inst)
        assert (m.u_components, m.tents, m.simple_potential) == (3, 1, 3)
        assert m.u_gap == 3
        assert m.alpha_potential == pytest.approx(1 + 0.84 * 3 - 1)
        assert m.alpha_potential == pytest.approx(2.52)

    def test_cyclic_undeletable_side_gap(self):
        inst = build([(0, 1), (1, 2), (0, 2)], [0, 1, 2], [], 0, alpha=0.84)
        assert measures(inst).u_gap == 0

    def test_gap_equals_components_on_forests(self):
        rng = random.Random(42)
        for _ in range(60):
            inst = random_instance(rng, 10)
            m = measures(inst)
            assert m.u_gap == m.u_components


class TestClassify:
    def test_single_tent_class(self):
        inst = build([(3, 0), (3, 1), (3, 2)], [0, 1, 2], [3], 1)
        view = classify(inst)
        assert view.cls[3] == "tent"

    def test_two_vertex_path_rooting(self):
        # deletable path w-v, w of undeletable degree 4, v of degree 3;
        # w gets the lower id so the deterministic tie-break roots at w
        edges = [(1, 2)]
        edges += [(1, u) for u in (10, 11, 12, 13)]
        edges += [(2, u) for u in (14, 15, 16)]
        inst = build(edges, list(range(10, 17)), [1, 2], 1)
        view = classify(inst)
        assert view.roots == (1,)
        assert view.parent[2] == 1
        assert view.cls[2] == "single"
        assert view.cls[1] == "standard"

    def test_double(self):
        # center of undeletable degree 0 with two single children
        edges = [(0, 1), (1, 2), (1, 3)]
        edges += [(0, u) for u in (10, 11, 12)]
        edges += [(2, u) for u in (13, 14, 15)]
        edges += [(3, u) for u in (16, 17, 18)]
        inst = build(edges, list(range(10, 19)), [0, 1, 2, 3], 2)
        view = classify(inst)
        assert view.roots == (0,)
        assert view.cls[1] == "double"
        assert view.cls[2] == "single" and view.cls[3] == "single"

    def test_every_vertex_gets_one_class(self):
        rng = random.Random(7)
        for _ in range(80):
            inst = random_instance(rng, 10)
            view = classify(inst)
            assert set(view.cls) == set(inst.d_vertices())
            for root in view.roots:
                assert inst.d_degree(root) <= 1

    def test_parent_of_standard_is_standard(self):
        rng = random.Random(8)
        for _ in range(80):
            inst = random_instance(rng, 10)
            view = classify(inst)
            for v, c in view.cls.items():
                if c == "standard" and view.parent[v] is not None:
                    assert view.cls[view.parent[v]] == "standard"


class TestFindGuide:
    def test_all_tents_has_no_guide(self):
        inst = build([(3, 0), (3, 1), (3, 2)], [0, 1, 2], [3], 1)
        with pytest.raises(NoGuideError):
            find_guide(inst)

    def test_standard_with_three_single_children(self):
        inst, vertex = guide_witness(0, 3, 0)
        info = find_guide(inst)
        assert info.vertex == vertex
        assert info.triple == (0, 3, 0)

    def test_root_with_one_double_child(self):
        # mechanically classified even though such an instance is not
        # irreducible (the root has degree 2)
        edges = [(0, 1), (1, 2), (1, 3), (0, 10)]
        edges += [(2, u) for u in (11, 12, 13)]
        edges += [(3, u) for u in (14, 15, 16)]
        inst = build(edges, list(range(10, 17)), [0, 1, 2, 3], 2)
        info = find_guide(inst)
        assert info.vertex == 0
        assert info.triple == (1, 0, 1)

    def test_guides_on_irreducible_instances_are_admissible(self):
        rng = random.Random(9)
        seen = 0
        for _ in range(300):
            inst = random_instance(rng, 11, alpha=0.84)
            out = reduce_to_fixpoint(inst, FAST)
            if out.kind != IRREDUCIBLE:
                continue
            seen += 1
            info = find_guide(inst)
            assert info.triple not in FORBIDDEN_GUIDE_TYPES
            # leaves and isolated deletable vertices carry undeletable
            # degree at least 3 once nothing is reducible
            for v in inst.d_vertices():
                if inst.d_degree(v) <= 1:
                    assert inst.u_degree(v) >= 3
                if inst.u_degree(v) == 0:
                    assert inst.d_degree(v) >= 3
        assert seen > 20
