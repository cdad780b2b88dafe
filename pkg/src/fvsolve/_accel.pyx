# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled union-find kernels for forest and component queries.

These are the innermost loops of the whole library: every reduction step,
measure recomputation and certificate verification funnels into one of the
two sweeps below.  The pure-Python twin lives in ``_accel_py``; both expose
identical signatures and are cross-checked by differential tests.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def uf_forest(int n, int[:] us, int[:] vs):
    """Union-find sweep over edges ``(us[i], vs[i])`` on vertices ``0..n-1``.

    Returns ``(component_count, acyclic)``.  Repeated edges and self loops
    count as cycles.
    """
    cdef Py_ssize_t m = us.shape[0]
    cdef int *parent = NULL
    cdef Py_ssize_t i
    cdef int a, b, comp
    cdef bint acyclic = True

    if n > 0:
        parent = <int *> PyMem_Malloc(n * sizeof(int))
        if parent == NULL:
            raise MemoryError()
    try:
        for a in range(n):
            parent[a] = a
        comp = n
        for i in range(m):
            a = us[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = vs[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a == b:
                acyclic = False
            else:
                parent[a] = b
                comp -= 1
        return comp, bool(acyclic)
    finally:
        if parent != NULL:
            PyMem_Free(parent)


def uf_labels(int n, int[:] us, int[:] vs):
    """Component label (union-find root index) of each of ``0..n-1``."""
    cdef Py_ssize_t m = us.shape[0]
    cdef int *parent = NULL
    cdef Py_ssize_t i
    cdef int a, b
    cdef list out

    if n > 0:
        parent = <int *> PyMem_Malloc(n * sizeof(int))
        if parent == NULL:
            raise MemoryError()
    try:
        for a in range(n):
            parent[a] = a
        for i in range(m):
            a = us[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = vs[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
        out = [0] * n
        for i in range(n):
            a = <int> i
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            out[i] = a
        return out
    finally:
        if parent != NULL:
            PyMem_Free(parent)
