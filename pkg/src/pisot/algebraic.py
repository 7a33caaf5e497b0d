"""Totally real fields, their embeddings, and certified polynomial root data.

Everything numeric is carried as balls (midpoint + error radius); every
certification made here states the radius it was checked against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp, mpc, mpf

from . import errors
from .balls import GUARD_BITS, Ball, CBall, ball_det, mpf_to_fraction

ROOT_RETRY_CAP = 16
DET_RETRY_CAP = 8


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending: c_0 + c_1 x + ... + c_d x^d."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) < 2 or coeffs[-1] == 0:
            raise ValueError("polynomial must have degree >= 1 with nonzero leading coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def eval_mpc(self, x):
        """Horner evaluation at an mpf/mpc point, under the caller's precision."""
        acc = mpc(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{e}" if mag == 1 else f"{mag}x^{e}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldSpec:
    """Input description of a totally real Galois field."""

    kind: str  # "cyclotomic" | "explicit"
    conductor: int | None = None
    basis_labels: tuple[str, ...] | None = None
    embedding_rows: tuple[tuple[str, ...], ...] | None = None
    stated_precision_bits: int | None = None
    discriminant: int | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("kind")
        if kind == "cyclotomic":
            return cls(kind="cyclotomic", conductor=int(obj["conductor"]))
        if kind == "explicit":
            disc = obj.get("discriminant")
            return cls(
                kind="explicit",
                basis_labels=tuple(obj.get("basis_labels", ())),
                embedding_rows=tuple(tuple(row) for row in obj["embedding_rows"]),
                stated_precision_bits=int(obj["precision_bits"]),
                discriminant=None if disc is None else int(disc),
            )
        raise errors.ParseError(f"unknown field kind: {kind!r}")

    @classmethod
    def from_file(cls, path) -> "FieldSpec":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "conductor": self.conductor}
        obj = {
            "kind": "explicit",
            "basis_labels": list(self.basis_labels or ()),
            "embedding_rows": [list(row) for row in self.embedding_rows],
            "precision_bits": self.stated_precision_bits,
        }
        if self.discriminant is not None:
            obj["discriminant"] = str(self.discriminant)
        return obj


@dataclass(frozen=True)
class EmbeddingMatrix:
    """All real embeddings of an integral basis; row 0 is the identity embedding."""

    k: int
    entries: tuple[tuple[Ball, ...], ...]
    det_abs: Ball
    precision_bits: int
    conductor: int | None = None
    discriminant: int | None = None
    basis_verified: bool = False

    def row(self, i: int) -> tuple[Ball, ...]:
        return self.entries[i]


@dataclass(frozen=True)
class PolyRoot:
    value: CBall
    is_real: bool

    def modulus(self) -> Ball:
        return self.value.abs_ball()


@dataclass(frozen=True)
class MinPolyInfo:
    """Certified root layout of a Pisot minimal polynomial."""

    poly: IntPoly
    roots: tuple[PolyRoot, ...]
    dominant_index: int
    second_modulus: Ball
    threshold_n0: int
    precision_bits: int

    @property
    def dominant_root(self) -> PolyRoot:
        return self.roots[self.dominant_index]


def _coprime_residues(n: int) -> list[int]:
    """Representatives of (Z/nZ)*/{±1}, sorted ascending."""
    return [a for a in range(1, n // 2 + 1) if gcd(a, n) == 1]


def cyclotomic_embeddings(conductor: int, precision_bits: int) -> EmbeddingMatrix:
    """Embedding matrix of the real subfield of the cyclotomic field of the
    given conductor, with integral basis {2cos(2*pi*a/n)}."""
    n = int(conductor)
    if n % 4 == 2:
        raise errors.UnsupportedConductor(f"conductor {n} is 2 mod 4")
    reps = _coprime_residues(n)
    k = len(reps)
    if k < 2:
        raise errors.UnsupportedConductor(f"conductor {n} gives degree {k} < 2")

    prec = precision_bits
    for _ in range(DET_RETRY_CAP):
        entries = []
        with mp.workprec(prec + GUARD_BITS):
            two_pi = 2 * mpmath.pi
            for t in reps:
                row = []
                for a in reps:
                    v = 2 * mpmath.cos(two_pi * ((t * a) % n) / n)
                    rad = (abs(v) + 1) * mpf(2) ** (1 - prec)
                    row.append(Ball(v, rad, prec))
                entries.append(tuple(row))
        try:
            det = ball_det([list(r) for r in entries], prec)
            break
        except errors.PrecisionError:
            prec *= 2
    else:
        raise errors.PrecisionError(
            f"could not certify det != 0 for conductor {n} within the retry cap"
        )

    det_abs = abs(det)
    disc = _round_if_near_integer(det_abs * det_abs)
    verified = False
    if disc is not None and _is_prime(n):
        verified = disc == n ** ((n - 3) // 2)
    return EmbeddingMatrix(
        k=k,
        entries=tuple(entries),
        det_abs=det_abs,
        precision_bits=prec,
        conductor=n,
        discriminant=disc,
        basis_verified=verified,
    )


def explicit_embeddings(spec: FieldSpec, precision_bits: int) -> EmbeddingMatrix:
    """Embedding matrix parsed from decimal strings supplied by the user."""
    if spec.kind != "explicit":
        raise errors.ParseError("explicit_embeddings requires an explicit-kind FieldSpec")
    if spec.stated_precision_bits is None or spec.stated_precision_bits < precision_bits:
        raise errors.PrecisionError(
            "requested precision exceeds the stated precision of the input"
        )
    rows = spec.embedding_rows or ()
    k = len(rows)
    if k < 2 or any(len(r) != k for r in rows):
        raise errors.ParseError("embedding matrix must be square with k >= 2")

    entries = []
    for row in rows:
        parsed = []
        for s in row:
            try:
                parsed.append(Ball.from_str(s, precision_bits))
            except ValueError as exc:
                raise errors.ParseError(f"bad decimal entry {s!r}") from exc
        entries.append(tuple(parsed))

    try:
        det = ball_det([list(r) for r in entries], precision_bits)
    except errors.PrecisionError as exc:
        raise errors.RankDeficient(
            "embedding matrix determinant not certified nonzero"
        ) from exc
    det_abs = abs(det)

    if spec.discriminant is not None:
        det_sq = det_abs * det_abs
        target = abs(spec.discriminant)
        lo = mpf_to_fraction(det_sq.lower())
        hi = mpf_to_fraction(det_sq.upper())
        if not (lo <= target <= hi):
            raise errors.DiscriminantMismatch(
                f"det^2 in [{float(lo):.6g}, {float(hi):.6g}] but |discriminant| = {target}"
            )
    return EmbeddingMatrix(
        k=k,
        entries=tuple(entries),
        det_abs=det_abs,
        precision_bits=precision_bits,
        discriminant=spec.discriminant,
        basis_verified=spec.discriminant is not None,
    )


def embeddings_for(spec: FieldSpec, precision_bits: int) -> EmbeddingMatrix:
    if spec.kind == "cyclotomic":
        return cyclotomic_embeddings(spec.conductor, precision_bits)
    return explicit_embeddings(spec, precision_bits)


def eval_combination(z, emb: EmbeddingMatrix) -> list[Ball]:
    """Images of sum_j z_j * beta_j under every embedding; component 0 is the
    value itself."""
    z = [int(c) for c in z]
    if len(z) != emb.k:
        raise ValueError(f"coefficient vector has length {len(z)}, expected {emb.k}")
    out = []
    for row in emb.entries:
        acc = Ball.from_int(0, emb.precision_bits)
        for c, b in zip(z, row):
            if c:
                acc = acc + b * Ball.from_int(c, emb.precision_bits)
        out.append(acc)
    return out


def poly_roots(f: IntPoly, precision_bits: int) -> list[PolyRoot]:
    """All complex roots with certified, pairwise disjoint error disks.

    Root disks come from the Weierstrass residual bound: the disks of radius
    d*|f(x_i)| / |prod_{j != i} (x_i - x_j)| around the approximations jointly
    cover the roots, and contain exactly one root each once disjoint.
    """
    d = f.degree
    lead = f.coefficients[-1]
    coeffs_desc = [c for c in reversed(f.coefficients)]
    w = precision_bits + 32
    for _ in range(ROOT_RETRY_CAP):
        try:
            with mp.workprec(w):
                approx = mpmath.polyroots(coeffs_desc, maxsteps=200, extraprec=w)
        except (mpmath.libmp.NoConvergence, ZeroDivisionError):
            w *= 2
            continue
        with mp.workprec(w):
            radii = []
            ok = True
            for i, x in enumerate(approx):
                denom = mpc(lead)
                for j, y in enumerate(approx):
                    if j != i:
                        denom *= x - y
                if denom == 0:
                    ok = False
                    break
                r = d * abs(f.eval_mpc(x) / denom)
                radii.append(r * (1 + mpf(2) ** -20) + mpf(2) ** (-2 * w))
            if ok:
                for i in range(d):
                    if radii[i] > mpf(2) ** (-precision_bits) * (abs(approx[i]) + 1):
                        ok = False
                        break
            if ok:
                for i in range(d):
                    for j in range(i + 1, d):
                        if abs(approx[i] - approx[j]) <= radii[i] + radii[j]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                roots = _classify_roots(approx, radii, precision_bits)
                if roots is not None:
                    return roots
                ok = False
        w *= 2
    raise errors.PrecisionExhausted(
        "root disks could not be separated; the polynomial is likely not squarefree"
    )


def _classify_roots(approx, radii, prec) -> list[PolyRoot] | None:
    """Flag real roots by conjugation symmetry; None means ambiguous (retry)."""
    d = len(approx)
    roots = []
    for i, x in enumerate(approx):
        r = radii[i]
        if abs(x.imag) > r:
            roots.append(PolyRoot(CBall(x, r, prec), is_real=False))
            continue
        # Disk crosses the real axis. The conjugate of the true root is also
        # a root; if it cannot lie in any other disk it lies in this one, so
        # the root is fixed by conjugation, i.e. real.
        conj = mpc(x.real, -x.imag)
        clash = any(
            j != i and abs(conj - approx[j]) <= r + radii[j] for j in range(d)
        )
        if clash:
            return None
        roots.append(
            PolyRoot(CBall(mpc(x.real, 0), r + abs(x.imag), prec), is_real=True)
        )
    return roots


def minimal_polynomial(conjugates) -> IntPoly:
    """Monic integer polynomial with the given certified values as its roots.

    Expands the product of (x - v_i) in ball arithmetic and rounds each
    coefficient, requiring the whole error interval to sit within 1/4 of an
    integer.
    """
    values = [v if isinstance(v, CBall) else CBall.from_ball(v) for v in conjugates]
    if not values:
        raise ValueError("need at least one conjugate")
    prec = min(v.prec for v in values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if not values[i].disjoint(values[j]):
                raise errors.DuplicateConjugates(
                    f"conjugates {i} and {j} are not certified distinct"
                )

    coeffs = [CBall.from_int(1, prec)]
    for v in values:
        nxt = [CBall.from_int(0, prec) for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - v * c
        coeffs = nxt

    out = []
    quarter = Fraction(1, 4)
    for c in coeffs:
        with mp.workprec(c.prec + GUARD_BITS):
            re_ball = Ball(c.mid.real, c.rad + abs(c.mid.imag), c.prec)
        n = re_ball.nearest_int()
        err = abs(mpf_to_fraction(re_ball.mid) - n) + mpf_to_fraction(re_ball.rad)
        if err >= quarter:
            raise errors.AmbiguousRounding(
                f"coefficient near {n} has error {float(err):.3g} >= 1/4; "
                "re-evaluate at higher precision"
            )
        out.append(n)
    return IntPoly(tuple(out))


def analyze_minpoly(f: IntPoly, precision_bits: int) -> MinPolyInfo:
    """Certify that f is the minimal polynomial of a Pisot number and locate
    its roots, dominant root, and the trace-path threshold."""
    if not f.is_monic:
        raise errors.NotMonic("analyze_minpoly requires a monic polynomial")
    if f.degree < 2:
        raise errors.NotPisot("degree must be at least 2")

    prec = precision_bits
    for _ in range(8):
        roots = poly_roots(f, prec)
        verdict = _certify_pisot_roots(roots)
        if verdict == "ambiguous":
            prec *= 2
            continue
        if isinstance(verdict, str):
            raise errors.NotPisot(verdict)
        dominant_index = verdict
        others = [r for i, r in enumerate(roots) if i != dominant_index]
        second = max((r.modulus() for r in others), key=lambda b: b.upper())
        n0 = _threshold_n0(second, f.degree, prec)
        if n0 is not None:
            return MinPolyInfo(
                poly=f,
                roots=tuple(roots),
                dominant_index=dominant_index,
                second_modulus=second,
                threshold_n0=n0,
                precision_bits=prec,
            )
        prec *= 2
    raise errors.PrecisionExhausted("could not certify Pisot structure at the retry cap")


def _certify_pisot_roots(roots):
    """Index of the dominant root, a NotPisot reason string, or 'ambiguous'."""
    dominant = []
    for i, r in enumerate(roots):
        if not r.is_real:
            continue
        real_ball = Ball(r.value.mid.real, r.value.rad, r.value.prec)
        lo = mpf_to_fraction(real_ball.lower())
        hi = mpf_to_fraction(real_ball.upper())
        if lo > 1:
            dominant.append(i)
        elif hi > 1:
            return "ambiguous"
    if len(dominant) > 1:
        return "more than one real root greater than 1"
    if not dominant:
        return "no real root greater than 1"
    idx = dominant[0]
    for i, r in enumerate(roots):
        if i == idx:
            continue
        m = r.modulus()
        if m.lt(1):
            continue
        if mpf_to_fraction(m.lower()) >= 1:
            return (
                f"conjugate root {i} has modulus >= 1 "
                f"(~{mpmath.nstr(m.mid, 8)})"
            )
        return "ambiguous"
    return idx


def _threshold_n0(second: Ball, d: int, prec: int) -> int | None:
    """Smallest n with (d-1)*|alpha_2|^n < 1/2, by certified comparison.

    Returns None when a comparison at the 1/2 boundary is not certified at
    the current precision; the caller then retries with more bits.
    """
    half = Fraction(1, 2)
    dm1 = Ball.from_int(d - 1, prec)
    for n in range(1, 100000):
        b = dm1 * second.pow_int(n)
        if mpf_to_fraction(b.upper()) < half:
            # every earlier n was certified >= 1/2, so this n is minimal
            return n
        if mpf_to_fraction(b.lower()) < half:
            return None
    return None


def _round_if_near_integer(b: Ball) -> int | None:
    n = b.nearest_int()
    err = abs(mpf_to_fraction(b.mid) - n) + mpf_to_fraction(b.rad)
    return n if err < Fraction(1, 4) else None


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True
