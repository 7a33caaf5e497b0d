"""Nearest integer to alpha^n via companion-matrix powers.

For n at or above the certified threshold, [alpha^n] equals the integer
power sum of the roots, i.e. the trace of C(f)^n; below it, the dominant
root is powered directly in ball arithmetic and rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .algebraic import IntPoly, MinPolyInfo, poly_roots
from .balls import Ball, mpf_to_fraction

DIRECT_RETRY_CAP = 16


@dataclass(frozen=True)
class CompanionMatrix:
    d: int
    rows: tuple[tuple[int, ...], ...]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.d))


def companion_matrix(f: IntPoly) -> CompanionMatrix:
    """Companion matrix: subdiagonal ones, last column -c_0 ... -c_{d-1}."""
    if not f.is_monic:
        raise errors.NotMonic("companion matrix requires a monic polynomial")
    d = f.degree
    if d < 2:
        raise ValueError("degree must be >= 2")
    rows = []
    for i in range(d):
        row = [0] * d
        if i > 0:
            row[i - 1] = 1
        row[d - 1] = -f.coefficients[i]
        rows.append(tuple(row))
    return CompanionMatrix(d=d, rows=tuple(rows))


def _mat_mul(a, b, d, m=None):
    out = []
    for i in range(d):
        row = []
        ai = a[i]
        for j in range(d):
            s = 0
            for l in range(d):
                s += ai[l] * b[l][j]
            row.append(s % m if m is not None else s)
        out.append(tuple(row))
    return tuple(out)


def matpow(c: CompanionMatrix, n: int, modulus: int | None = None):
    """C^n by repeated squaring, optionally with entries reduced mod m."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if modulus is not None and modulus < 2:
        raise errors.BadModulus(f"modulus must be >= 2, got {modulus}")
    d = c.d
    ident = tuple(
        tuple((1 if i == j else 0) % modulus if modulus is not None else (1 if i == j else 0)
              for j in range(d))
        for i in range(d)
    )
    if n == 0:
        return ident
    base = tuple(
        tuple(x % modulus if modulus is not None else x for x in row) for row in c.rows
    )
    result = base
    for bit in bin(n)[3:]:
        result = _mat_mul(result, result, d, modulus)
        if bit == "1":
            result = _mat_mul(result, base, d, modulus)
    return result


def _trace(m) -> int:
    return sum(m[i][i] for i in range(len(m)))


def nearest_power(f: IntPoly, n: int, info: MinPolyInfo) -> int:
    """[alpha^n] exactly, where alpha is the Pisot root of f."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n >= info.threshold_n0:
        return _trace(matpow(companion_matrix(f), n))
    # Small n: power the certified dominant root directly and round.
    prec = info.precision_bits
    root = info.dominant_root.value
    alpha = Ball(root.mid.real, root.rad, root.prec)
    for _ in range(DIRECT_RETRY_CAP):
        p = alpha.pow_int(n)
        m = p.nearest_int()
        err = abs(mpf_to_fraction(p.mid) - m) + mpf_to_fraction(p.rad)
        if err < Fraction(1, 2):
            return m
        prec *= 2
        roots = poly_roots(f, prec)
        dom = max(
            (r for r in roots if r.is_real),
            key=lambda r: r.value.mid.real,
        )
        alpha = Ball(dom.value.mid.real, dom.value.rad, dom.value.prec)
    raise errors.PrecisionExhausted(
        f"could not certify the nearest integer to alpha^{n}"
    )


def nearest_power_mod(f: IntPoly, n: int, m: int, info: MinPolyInfo) -> int:
    """[alpha^n] mod m in time polynomial in log(mn)."""
    if m < 2:
        raise errors.BadModulus(f"modulus must be >= 2, got {m}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n != 0 and n >= info.threshold_n0:
        return _trace(matpow(companion_matrix(f), n, m)) % m
    return nearest_power(f, n, info) % m
