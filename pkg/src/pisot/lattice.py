"""Exact-integer LLL reduction with transform tracking, plus verification
and a brute-force shortest-vector oracle for tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import errors
from ._backend import lll_kernel, svp_kernel


@dataclass(frozen=True)
class IntLattice:
    """Full-rank integer lattice given by k column vectors of length k."""

    basis: tuple[tuple[int, ...], ...]  # columns

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in col) for col in self.basis)
        if not cols or any(len(c) != len(cols) for c in cols):
            raise ValueError("basis must be a square set of column vectors")
        object.__setattr__(self, "basis", cols)

    @property
    def k(self) -> int:
        return len(self.basis)

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        n = self.k
        m = [[self.basis[j][i] for j in range(n)] for i in range(n)]
        sign = 1
        prev = 1
        for col in range(n - 1):
            if m[col][col] == 0:
                for r in range(col + 1, n):
                    if m[r][col] != 0:
                        m[col], m[r] = m[r], m[col]
                        sign = -sign
                        break
                else:
                    return 0
            for r in range(col + 1, n):
                for c in range(col + 1, n):
                    m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
                m[r][col] = 0
            prev = m[col][col]
        return sign * m[n - 1][n - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return self.basis[j]


@dataclass(frozen=True)
class LLLResult:
    reduced: IntLattice
    transform: tuple[tuple[int, ...], ...]  # columns of U; reduced = original * U
    delta: Fraction


@dataclass(frozen=True)
class ReducednessReport:
    basis_product_ok: bool
    unimodular_ok: bool
    size_reduced_ok: bool
    lovasz_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.basis_product_ok
            and self.unimodular_ok
            and self.size_reduced_ok
            and self.lovasz_ok
        )


def lll_reduce(lat: IntLattice, delta: Fraction = Fraction(3, 4)) -> LLLResult:
    """LLL-reduce the lattice basis; the returned transform U is unimodular
    with reduced.basis = lat.basis * U."""
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    try:
        reduced_cols, u_cols = lll_kernel(
            [list(c) for c in lat.basis], delta.numerator, delta.denominator
        )
    except ValueError as exc:
        raise errors.RankDeficient(str(exc)) from exc
    return LLLResult(
        reduced=IntLattice(tuple(tuple(c) for c in reduced_cols)),
        transform=tuple(tuple(c) for c in u_cols),
        delta=delta,
    )


def _gram_schmidt(cols):
    """Exact rational Gram-Schmidt; returns (orthogonal vectors, mu matrix)."""
    n = len(cols)
    star = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in cols[i]]
        for j in range(i):
            denom = sum(x * x for x in star[j])
            mu[i][j] = sum(Fraction(a) * b for a, b in zip(cols[i], star[j])) / denom
            v = [a - mu[i][j] * b for a, b in zip(v, star[j])]
        star.append(v)
    return star, mu


def check_reduced(result: LLLResult, original: IntLattice) -> ReducednessReport:
    """Verify B*U = B', det(U) = +-1, size-reduction, and the Lovasz
    condition, all in exact rational arithmetic."""
    n = original.k
    b = original.basis
    u = result.transform
    bp = result.reduced.basis
    product_ok = all(
        bp[j][i] == sum(b[l][i] * u[j][l] for l in range(n))
        for i in range(n)
        for j in range(n)
    )
    unimodular_ok = abs(IntLattice(u).det()) == 1

    star, mu = _gram_schmidt(bp)
    size_ok = all(
        abs(mu[i][j]) <= Fraction(1, 2) for i in range(n) for j in range(i)
    )
    lovasz_ok = True
    for i in range(1, n):
        lhs = sum(x * x for x in star[i])
        prev = sum(x * x for x in star[i - 1])
        if lhs < (result.delta - mu[i][i - 1] ** 2) * prev:
            lovasz_ok = False
            break
    return ReducednessReport(product_ok, unimodular_ok, size_ok, lovasz_ok)


def svp_bruteforce(lat: IntLattice, coeff_bound: int):
    """Shortest nonzero vector with coefficients bounded by coeff_bound.

    Exhaustive; intended as a test oracle on small, already-reduced bases.
    Returns (vector, coefficients, norm_sq).
    """
    if lat.k > 6:
        raise errors.DimensionTooLarge("brute-force oracle is limited to k <= 6")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    vec, coeffs, norm = svp_kernel([list(c) for c in lat.basis], coeff_bound)
    return tuple(vec), tuple(coeffs), norm
