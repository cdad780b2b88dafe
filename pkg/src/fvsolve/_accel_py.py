"""Pure-Python union-find kernels, the fallback twin of ``_accel``."""

from __future__ import annotations


def uf_forest(n, us, vs):
    """Union-find sweep over edges ``(us[i], vs[i])`` on vertices ``0..n-1``.

    Returns ``(component_count, acyclic)``.  Repeated edges and self loops
    count as cycles.
    """
    parent = list(range(n))
    comp = n
    acyclic = True
    for a, b in zip(us, vs):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            acyclic = False
        else:
            parent[a] = b
            comp -= 1
    return comp, acyclic


def uf_labels(n, us, vs):
    """Component label (union-find root index) of each of ``0..n-1``."""
    parent = list(range(n))
    for a, b in zip(us, vs):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
    out = [0] * n
    for i in range(n):
        a = i
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        out[i] = a
    return out
