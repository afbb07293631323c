"""Pure-Python kernels (stdlib ``Fraction`` only).

Mirrors ``_fast.pyx`` line for line; both must return identical results.
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(T, obj, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        row[:] = [v / p for v in row]
    nz = [k for k, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i == r:
            continue
        f = other[c]
        if f:
            for k in nz:
                other[k] -= f * row[k]
    f = obj[c]
    if f:
        for k in nz:
            obj[k] -= f * row[k]
    basis[r] = c


def _run(T, obj, basis, n_enter):
    # Bland's rule; obj holds reduced costs of a minimisation.
    rhs = len(obj) - 1
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
        for i, row in enumerate(T):
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
    """Minimise ``c.x`` subject to ``A x = b``, ``x >= 0``.

    Returns ``(status, x, value, duals)``; ``x``, ``value`` and ``duals`` are
    ``None`` unless the status is ``"optimal"``. ``duals`` satisfy
    ``A^T duals <= c`` and ``b.duals == value``.
    """
    m = len(A)
    n = len(c)
    zero = Fraction(0)
    sign = []
    T = []
    for i in range(m):
        s = -1 if b[i] < 0 else 1
        sign.append(s)
        row = [Fraction(s * v) for v in A[i]]
        row.extend(Fraction(int(k == i)) for k in range(m))
        row.append(Fraction(s * b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1

    obj = [zero] * width
    for row in T:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    _run(T, obj, basis, n)
    if obj[-1] != 0:
        return INFEASIBLE, None, None, None

    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j] != 0:
                    _pivot(T, obj, basis, i, j)
                    break

    cost = [Fraction(v) for v in c] + [zero] * m
    obj = [zero] * width
    for j in range(width - 1):
        obj[j] = cost[j]
    for i, row in enumerate(T):
        cb = cost[basis[i]]
        if cb:
            for j in range(width):
                obj[j] -= cb * row[j]
    status = _run(T, obj, basis, n)
    if status != OPTIMAL:
        return status, None, None, None

    x = [zero] * n
    for i, row in enumerate(T):
        if basis[i] < n:
            x[basis[i]] = row[-1]
    value = -obj[-1]
    duals = [-sign[i] * obj[n + i] for i in range(m)]
    return OPTIMAL, x, value, duals


def max_affine_int(rows, point):
    """``max_k rows[k] . point`` over Python ints."""
    best = None
    for row in rows:
        s = 0
        for a, v in zip(row, point):
            if a:
                s += a * v
        if best is None or s > best:
            best = s
    return best
