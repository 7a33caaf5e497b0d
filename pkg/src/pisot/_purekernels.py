"""Pure-Python hot kernels: exact-integer LLL and SVP enumeration.

The compiled twin in _corekernels.pyx implements the identical algorithms;
outputs are bit-for-bit equal. Everything here is exact integer arithmetic
(the all-integer LLL of de Weger / Cohen Alg. 2.6.7), so results are
reproducible across runs and platforms.
"""

BACKEND_NAME = "pure"


def _dot(u, v):
    s = 0
    for a, b in zip(u, v):
        s += a * b
    return s


def lll_kernel(basis, delta_num, delta_den):
    """All-integer LLL on column vectors.

    `basis` is a list of n column vectors (lists of n ints). Returns
    (reduced_columns, transform_columns) with reduced = original * U and
    det(U) = +-1. Raises ValueError on rank-deficient input.
    """
    n = len(basis)
    b = [list(col) for col in basis]
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # columns of U

    # D[i] = Gram determinant of the first i vectors (D[0] = 1);
    # lam[i][j] = D[j+1] * mu_{i,j} with all entries integral.
    big_d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            t = _dot(b[i], b[j])
            for k in range(j):
                t = (big_d[k + 1] * t - lam[i][k] * lam[j][k]) // big_d[k]
            if j < i:
                lam[i][j] = t
            else:
                if t <= 0:
                    raise ValueError("basis is rank deficient")
                big_d[i + 1] = t

    def size_reduce(k, l):
        dl = big_d[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            if lam[k][l] >= 0:
                r = (2 * lam[k][l] + dl) // (2 * dl)
            else:
                r = -((-2 * lam[k][l] + dl) // (2 * dl))
            bk, bl = b[k], b[l]
            for i in range(n):
                bk[i] -= r * bl[i]
            uk, ul = u[k], u[l]
            for i in range(n):
                uk[i] -= r * ul[i]
            lam[k][l] -= r * dl
            for j in range(l):
                lam[k][j] -= r * lam[l][j]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        # Lovasz condition in integral form; swap only on strict failure.
        lkk = lam[k][k - 1]
        if delta_den * (big_d[k + 1] * big_d[k - 1] + lkk * lkk) < delta_num * big_d[k] ** 2:
            b[k], b[k - 1] = b[k - 1], b[k]
            u[k], u[k - 1] = u[k - 1], u[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            lam_val = lam[k][k - 1]
            new_dk = (big_d[k - 1] * big_d[k + 1] + lam_val * lam_val) // big_d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (big_d[k + 1] * lam[i][k - 1] - lam_val * t) // big_d[k]
                lam[i][k - 1] = (new_dk * t + lam_val * lam[i][k]) // big_d[k + 1]
            big_d[k] = new_dk
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return b, u


def svp_kernel(basis, bound):
    """Exhaustive shortest-vector search over coefficients in [-bound, bound].

    Only coefficient vectors whose first nonzero entry is positive are
    visited (sign symmetry). Returns (vector, coeffs, norm_sq) of the first
    minimum in depth-first lexicographic order.
    """
    n = len(basis)
    dim = len(basis[0])
    best_norm = None
    best_vec = None
    best_coeffs = None
    partial = [0] * dim
    coeffs = [0] * n

    def recurse(i, nonzero_seen):
        nonlocal best_norm, best_vec, best_coeffs
        if i == n:
            if not nonzero_seen:
                return
            norm = 0
            for x in partial:
                norm += x * x
            if best_norm is None or norm < best_norm:
                best_norm = norm
                best_vec = list(partial)
                best_coeffs = list(coeffs)
            return
        lo = 0 if not nonzero_seen else -bound
        col = basis[i]
        for c in range(lo, bound + 1):
            coeffs[i] = c
            if c != 0:
                for j in range(dim):
                    partial[j] += c * col[j]
            recurse(i + 1, nonzero_seen or c != 0)
            if c != 0:
                for j in range(dim):
                    partial[j] -= c * col[j]
        coeffs[i] = 0

    recurse(0, False)
    return best_vec, best_coeffs, best_norm
