# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: exact-integer LLL and SVP enumeration.

Algorithmically identical to _purekernels.py (the pure-Python fallback);
values stay arbitrary-precision Python ints, Cython removes the interpreter
overhead of the inner loops. Outputs are bit-for-bit equal to the fallback.
"""

BACKEND_NAME = "compiled"


cdef object _dot(list u, list v):
    cdef Py_ssize_t i, n = len(u)
    s = 0
    for i in range(n):
        s += u[i] * v[i]
    return s


def lll_kernel(basis, delta_num, delta_den):
    """All-integer LLL on column vectors; see _purekernels.lll_kernel."""
    cdef Py_ssize_t n = len(basis)
    cdef Py_ssize_t i, j, k, l
    cdef list b = [list(col) for col in basis]
    cdef list u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]

    cdef list big_d = [1] * (n + 1)
    cdef list lam = [[0] * n for _ in range(n)]
    cdef list lam_i, lam_j, lam_k, lam_l, bk, bl, uk, ul
    for i in range(n):
        lam_i = lam[i]
        for j in range(i + 1):
            t = _dot(b[i], b[j])
            lam_j = lam[j]
            for k in range(j):
                t = (big_d[k + 1] * t - lam_i[k] * lam_j[k]) // big_d[k]
            if j < i:
                lam_i[j] = t
            else:
                if t <= 0:
                    raise ValueError("basis is rank deficient")
                big_d[i + 1] = t

    k = 1
    while k < n:
        _size_reduce(n, b, u, lam, big_d, k, k - 1)
        lam_k = lam[k]
        lkk = lam_k[k - 1]
        if delta_den * (big_d[k + 1] * big_d[k - 1] + lkk * lkk) < delta_num * big_d[k] ** 2:
            b[k], b[k - 1] = b[k - 1], b[k]
            u[k], u[k - 1] = u[k - 1], u[k]
            lam_k = lam[k]
            lam_l = lam[k - 1]
            for j in range(k - 1):
                lam_k[j], lam_l[j] = lam_l[j], lam_k[j]
            lam_val = lam_k[k - 1]
            new_dk = (big_d[k - 1] * big_d[k + 1] + lam_val * lam_val) // big_d[k]
            for i in range(k + 1, n):
                lam_i = lam[i]
                t = lam_i[k]
                lam_i[k] = (big_d[k + 1] * lam_i[k - 1] - lam_val * t) // big_d[k]
                lam_i[k - 1] = (new_dk * t + lam_val * lam_i[k]) // big_d[k + 1]
            big_d[k] = new_dk
            k = k - 1 if k > 1 else 1
        else:
            for l in range(k - 2, -1, -1):
                _size_reduce(n, b, u, lam, big_d, k, l)
            k += 1
    return b, u


cdef void _size_reduce(Py_ssize_t n, list b, list u, list lam, list big_d,
                       Py_ssize_t k, Py_ssize_t l):
    cdef Py_ssize_t i, j
    cdef list lam_k = lam[k]
    cdef list lam_l = lam[l]
    cdef list bk, bl, uk, ul
    dl = big_d[l + 1]
    lkl = lam_k[l]
    if 2 * abs(lkl) > dl:
        if lkl >= 0:
            r = (2 * lkl + dl) // (2 * dl)
        else:
            r = -((-2 * lkl + dl) // (2 * dl))
        bk = b[k]
        bl = b[l]
        for i in range(n):
            bk[i] -= r * bl[i]
        uk = u[k]
        ul = u[l]
        for i in range(n):
            uk[i] -= r * ul[i]
        lam_k[l] = lkl - r * dl
        for j in range(l):
            lam_k[j] -= r * lam_l[j]


def svp_kernel(basis, bound):
    """Exhaustive shortest-vector search; see _purekernels.svp_kernel."""
    cdef Py_ssize_t n = len(basis)
    cdef Py_ssize_t dim = len(basis[0])
    cdef list partial = [0] * dim
    cdef list coeffs = [0] * n
    state = {"norm": None, "vec": None, "coeffs": None}
    _svp_recurse(basis, int(bound), n, dim, partial, coeffs, 0, False, state)
    return state["vec"], state["coeffs"], state["norm"]


cdef _svp_recurse(list basis, long bound, Py_ssize_t n, Py_ssize_t dim,
                  list partial, list coeffs, Py_ssize_t i, bint nonzero_seen,
                  dict state):
    cdef Py_ssize_t j
    cdef long c, lo
    cdef list col
    if i == n:
        if not nonzero_seen:
            return
        norm = 0
        for j in range(dim):
            norm += partial[j] * partial[j]
        if state["norm"] is None or norm < state["norm"]:
            state["norm"] = norm
            state["vec"] = list(partial)
            state["coeffs"] = list(coeffs)
        return
    lo = 0 if not nonzero_seen else -bound
    col = basis[i]
    for c in range(lo, bound + 1):
        coeffs[i] = c
        if c != 0:
            for j in range(dim):
                partial[j] += c * col[j]
        _svp_recurse(basis, bound, n, dim, partial, coeffs, i + 1,
                     nonzero_seen or c != 0, state)
        if c != 0:
            for j in range(dim):
                partial[j] -= c * col[j]
    coeffs[i] = 0
