import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fvsolve.multigraph import GraphError, Multigraph


def triangle():
    return Multigraph.from_edges([0, 1, 2], [(0, 1), (1, 2), (0, 2)])


class TestContract:
    def test_triangle_contraction_doubles_edge(self):
        g = triangle()
        x = g.contract_edge(0, 1)
        assert len(g) == 2
        assert g.multiplicity(x, 2) == 2
        assert g.loops(x) == 0

    def test_path_contraction_stays_simple(self):
        g = Multigraph.from_edges([0, 1, 2], [(0, 1), (1, 2)])
        x = g.contract_edge(0, 1)
        assert sorted(g.edge_list()) == [(min(x, 2), max(x, 2))]
        assert g.loops(x) == 0

    def test_double_edge_contraction_leaves_loop(self):
        g = Multigraph.from_edges([0, 1], [])
        g.add_edge(0, 1, count=2)
        x = g.contract_edge(0, 1)
        assert len(g) == 1
        assert g.loops(x) == 1

    def test_missing_edge_rejected(self):
        g = Multigraph.from_edges([0, 1, 2], [(0, 1)])
        with pytest.raises(GraphError):
            g.contract_edge(0, 2)

    def test_loop_contraction_rejected(self):
        g = Multigraph.from_edges([0], [])
        g.add_edge(0, 0)
        with pytest.raises(GraphError):
            g.contract_edge(0, 0)


class TestSubdivide:
    def test_single_edge(self):
        g = Multigraph.from_edges([0, 1], [(0, 1)])
        x = g.subdivide_edge(0, 1)
        assert g.degree(x) == 2
        assert g.multiplicity(0, 1) == 0
        assert g.multiplicity(0, x) == 1 and g.multiplicity(x, 1) == 1

    def test_double_edge_keeps_one_copy(self):
        g = Multigraph.from_edges([0, 1], [])
        g.add_edge(0, 1, count=2)
        x = g.subdivide_edge(0, 1)
        assert g.multiplicity(0, 1) == 1
        assert g.multiplicity(0, x) == 1 and g.multiplicity(x, 1) == 1

    def test_subdivide_then_contract_restores(self):
        g = Multigraph.from_edges([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
        reference = sorted(g.edge_list())
        x = g.subdivide_edge(0, 1)
        merged = g.contract_edge(0, x)
        relabel = {merged: 0}
        restored = sorted(
            tuple(sorted((relabel.get(u, u), relabel.get(v, v))))
            for u, v in g.edge_list())
        assert restored == reference

    def test_missing_edge_rejected(self):
        g = Multigraph.from_edges([0, 1], [])
        with pytest.raises(GraphError):
            g.subdivide_edge(0, 1)


class TestForestQueries:
    def test_k3_is_not_forest(self):
        assert not triangle().is_forest()

    def test_empty_graph_is_forest(self):
        assert Multigraph().is_forest()
        assert Multigraph().component_count() == 0

    def test_path_is_forest(self):
        g = Multigraph.from_edges([0, 1, 2], [(0, 1), (1, 2)])
        assert g.is_forest()

    def test_loop_and_multiedge_break_forest(self):
        g = Multigraph.from_edges([0, 1], [(0, 1)])
        g.add_edge(0, 1)
        assert not g.is_forest()
        h = Multigraph.from_edges([0], [])
        h.add_edge(0, 0)
        assert not h.is_forest()

    def test_component_counts(self):
        assert triangle().component_count(set()) == 0
        g = Multigraph.from_edges([0, 1, 2, 3], [(0, 1), (2, 3)])
        assert g.component_count() == 2
        p = Multigraph.from_edges([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)])
        assert p.component_count([0, 3]) == 2

    def test_restrict_to_unknown_vertex_rejected(self):
        with pytest.raises(GraphError):
            triangle().component_count([7])


@st.composite
def simple_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=16))
    return n, edges


@settings(max_examples=120, deadline=None)
@given(simple_graphs())
def test_contraction_counts(data):
    n, edges = data
    if not edges:
        return
    g = Multigraph.from_edges(range(n), edges)
    u, v = edges[0]
    before_v, before_e = len(g), g.edge_total()
    g.contract_edge(u, v)
    assert len(g) == before_v - 1
    assert g.edge_total() == before_e - 1
    g.audit()


@settings(max_examples=120, deadline=None)
@given(simple_graphs())
def test_forest_iff_edge_count_identity(data):
    n, edges = data
    g = Multigraph.from_edges(range(n), edges)
    # simple graph: forest <=> components == vertices - edges
    assert g.is_forest() == (g.component_count() == n - len(edges))


@settings(max_examples=60, deadline=None)
@given(simple_graphs())
def test_audit_after_mutations(data):
    n, edges = data
    g = Multigraph.from_edges(range(n), edges)
    g.audit()
    if edges:
        g.subdivide_edge(*edges[0])
        g.audit()
