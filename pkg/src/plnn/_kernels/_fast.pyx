# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Arithmetic runs on gmpy2 ``mpq`` when available.

Same algorithm and pivot order as ``_pure.py``; results are converted back to
``fractions.Fraction`` before they leave this module.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 ships with the build env
    _Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


cdef inline object _to_q(object v):
    if isinstance(v, Fraction):
        return _Q(v.numerator, v.denominator)
    return _Q(v)


cdef inline object _to_frac(object v):
    return Fraction(int(v.numerator), int(v.denominator))


cdef void _pivot(list T, list obj, list basis, Py_ssize_t r, Py_ssize_t c):
    cdef list row = T[r]
    cdef list other
    cdef object p = row[c]
    cdef object f
    cdef Py_ssize_t i, k, nrows = len(T), width = len(row)
    cdef list nz
    if p != 1:
        for k in range(width):
            row[k] = row[k] / p
    nz = [k for k in range(width) if row[k]]
    for i in range(nrows):
        if i == r:
            continue
        other = T[i]
        f = other[c]
        if f:
            for k in nz:
                other[k] = other[k] - f * row[k]
    f = obj[c]
    if f:
        for k in nz:
            obj[k] = obj[k] - f * row[k]
    basis[r] = c


cdef str _run(list T, list obj, list basis, Py_ssize_t n_enter):
    cdef Py_ssize_t rhs = len(obj) - 1
    cdef Py_ssize_t enter, leave, i, j, nrows = len(T)
    cdef list row
    cdef object a, ratio, best
    while True:
        enter = -1
        for j in range(n_enter):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(nrows):
            row = T[i]
            a = row[enter]
            if a > 0:
                ratio = row[rhs] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(T, obj, basis, leave, enter)


def simplex_eq(A, b, c):
    """Minimise ``c.x`` subject to ``A x = b``, ``x >= 0``. See ``_pure.simplex_eq``."""
    cdef Py_ssize_t m = len(A), n = len(c), i, j, k, width
    cdef list T = [], sign = [], basis, obj, row, cost, x, duals
    cdef int s
    zero = _Q(0)
    one = _Q(1)
    for i in range(m):
        s = -1 if b[i] < 0 else 1
        sign.append(s)
        row = [_to_q(v) * s for v in A[i]]
        for k in range(m):
            row.append(one if k == i else zero)
        row.append(_to_q(b[i]) * s)
        T.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1

    obj = [zero] * width
    for row in T:
        for j in range(n):
            obj[j] = obj[j] - row[j]
        obj[width - 1] = obj[width - 1] - row[width - 1]
    _run(T, obj, basis, n)
    if obj[width - 1] != 0:
        return INFEASIBLE, None, None, None

    for i in range(m):
        if basis[i] >= n:
            row = T[i]
            for j in range(n):
                if row[j] != 0:
                    _pivot(T, obj, basis, i, j)
                    break

    cost = [_to_q(v) for v in c] + [zero] * m
    obj = [zero] * width
    for j in range(width - 1):
        obj[j] = cost[j]
    for i in range(m):
        cb = cost[basis[i]]
        if cb:
            row = T[i]
            for j in range(width):
                obj[j] = obj[j] - cb * row[j]
    status = _run(T, obj, basis, n)
    if status != OPTIMAL:
        return status, None, None, None

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = _to_frac(T[i][width - 1])
    value = _to_frac(-obj[width - 1])
    duals = [_to_frac(-sign[i] * obj[n + i]) for i in range(m)]
    return OPTIMAL, x, value, duals


def max_affine_int(rows, point):
    """``max_k rows[k] . point`` over Python ints."""
    cdef object best = None, s, a
    cdef list r
    cdef Py_ssize_t k, npt = len(point)
    pt = list(point)
    for r in rows:
        s = 0
        for k in range(npt):
            a = r[k]
            if a:
                s += a * pt[k]
        if best is None or s > best:
            best = s
    return best
