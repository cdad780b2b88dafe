"""Differential tests between the compiled and pure union-find kernels."""

from array import array

from hypothesis import given, settings
from hypothesis import strategies as st

from fvsolve import kernels


@st.composite
def edge_arrays(draw):
    n = draw(st.integers(min_value=1, max_value=30))
    m = draw(st.integers(min_value=0, max_value=60))
    us = array("i", [draw(st.integers(0, n - 1)) for _ in range(m)])
    vs = array("i", [draw(st.integers(0, n - 1)) for _ in range(m)])
    return n, us, vs


@settings(max_examples=200, deadline=None)
@given(edge_arrays())
def test_backends_agree(data):
    n, us, vs = data
    results = {name: mod.uf_forest(n, us, vs)
               for name, mod in kernels.backends().items()}
    assert len(set((c, bool(a)) for c, a in results.values())) == 1
    labels = {name: mod.uf_labels(n, us, vs)
              for name, mod in kernels.backends().items()}
    # labels are arbitrary roots; compare the induced partitions
    partitions = set()
    for lab in labels.values():
        groups = {}
        for i, root in enumerate(lab):
            groups.setdefault(root, []).append(i)
        partitions.add(frozenset(map(tuple, groups.values())))
    assert len(partitions) == 1


def test_basics():
    for mod in kernels.backends().values():
        assert mod.uf_forest(3, array("i", [0, 1]), array("i", [1, 2])) == (1, True)
        assert mod.uf_forest(3, array("i", [0, 1, 2]), array("i", [1, 2, 0]))[1] is False
        assert mod.uf_forest(2, array("i", [0]), array("i", [0]))[1] is False
        assert mod.uf_forest(4, array("i"), array("i")) == (4, True)
