# cython: language_level=3
# cython: boundscheck=False
"""Compiled twin of the ground countermodel DFS in fol/groundsearch.py.

Same algorithm, same inputs, same answers; selected at import when built.
"""


cdef bint _checks_ok(tuple cks, list val):
    cdef Py_ssize_t l, r
    cdef bint want
    for (l, r, want) in cks:
        if (val[l] == val[r]) != want:
            return False
    return True


cdef bint _go(Py_ssize_t pos, Py_ssize_t n, int k, list prepared, list val, dict table):
    if pos == n:
        return True
    sym, kids, cks = prepared[pos]
    cdef list argvals = []
    cdef Py_ssize_t c
    for c in kids:
        argvals.append(val[c])
    cdef tuple key = (sym, tuple(argvals))
    cdef bint fresh = key not in table
    cdef int v
    if fresh:
        for v in range(k):
            val[pos] = v
            table[key] = v
            if _checks_ok(cks, val) and _go(pos + 1, n, k, prepared, val, table):
                return True
            del table[key]
        return False
    v = table[key]
    val[pos] = v
    if _checks_ok(cks, val) and _go(pos + 1, n, k, prepared, val, table):
        return True
    return False


def search(nodes, checks, int k):
    """DFS over interpretations; returns the node-value vector or None."""
    cdef Py_ssize_t n = len(nodes)
    cdef list val = [0] * n
    cdef list prepared = []
    cdef Py_ssize_t i
    for i in range(n):
        sym, kids = nodes[i]
        prepared.append((sym, tuple(kids), tuple(checks[i])))
    if _go(0, n, k, prepared, val, {}):
        return val
    return None
