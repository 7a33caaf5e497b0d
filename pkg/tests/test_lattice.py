"""LLL reduction: correctness against an exact rational checker and a
brute-force shortest-vector oracle."""

import random
from fractions import Fraction

import pytest

from pisot import errors
from pisot.lattice import IntLattice, check_reduced, lll_reduce, svp_bruteforce


def random_lattice(rng: random.Random, k: int, bound: int = 1 << 20) -> IntLattice:
    while True:
        cols = tuple(
            tuple(rng.randint(-bound, bound) for _ in range(k)) for _ in range(k)
        )
        lat = IntLattice(cols)
        if lat.det() != 0:
            return lat


def norm_sq(v) -> int:
    return sum(x * x for x in v)


class TestIntLattice:
    def test_det_known(self):
        assert IntLattice(((2, 0), (0, 3))).det() == 6
        assert IntLattice(((1, 2), (3, 4))).det() == 4 - 6
        assert IntLattice(((1, 2), (2, 4))).det() == 0

    def test_det_matches_permanence_under_transpose_free_definition(self):
        # columns (1,0,0),(1,1,0),(1,1,1): upper-triangular by columns
        assert IntLattice(((1, 0, 0), (1, 1, 0), (1, 1, 1))).det() == 1

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            IntLattice(((1, 2), (3,)))


class TestLLL:
    def test_identity_fixed(self):
        lat = IntLattice(((1, 0), (0, 1)))
        res = lll_reduce(lat)
        assert res.reduced.basis == lat.basis
        assert check_reduced(res, lat).all_ok

    def test_classic_2d(self):
        # basis (1, 1), (1, 0): shortest vector has norm 1
        lat = IntLattice(((1, 1), (1, 0)))
        res = lll_reduce(lat)
        assert check_reduced(res, lat).all_ok
        assert norm_sq(res.reduced.column(0)) == 1

    def test_rank_deficient_rejected(self):
        with pytest.raises(errors.RankDeficient):
            lll_reduce(IntLattice(((1, 2), (2, 4))))

    def test_bad_delta_rejected(self):
        lat = IntLattice(((1, 0), (0, 1)))
        with pytest.raises(ValueError):
            lll_reduce(lat, Fraction(1, 4))
        with pytest.raises(ValueError):
            lll_reduce(lat, Fraction(1))

    def test_transform_reconstructs_basis(self):
        rng = random.Random(7)
        lat = random_lattice(rng, 4, bound=100)
        res = lll_reduce(lat)
        k = lat.k
        for j in range(k):
            recon = tuple(
                sum(lat.basis[l][i] * res.transform[j][l] for l in range(k))
                for i in range(k)
            )
            assert recon == res.reduced.column(j)
        assert abs(IntLattice(res.transform).det()) == 1

    @pytest.mark.parametrize("seed", range(8))
    @pytest.mark.parametrize("k", [2, 3, 5, 8])
    def test_random_lattices_fully_reduced(self, seed, k):
        rng = random.Random(1000 * k + seed)
        lat = random_lattice(rng, k)
        res = lll_reduce(lat)
        report = check_reduced(res, lat)
        assert report.basis_product_ok
        assert report.unimodular_ok
        assert report.size_reduced_ok
        assert report.lovasz_ok

    @pytest.mark.parametrize("delta_num,delta_den", [(1, 2), (9, 10)])
    def test_other_deltas(self, delta_num, delta_den):
        rng = random.Random(delta_num * 31 + delta_den)
        lat = random_lattice(rng, 4, bound=10**6)
        res = lll_reduce(lat, Fraction(delta_num, delta_den))
        assert check_reduced(res, lat).all_ok

    def test_first_vector_within_hermite_factor(self):
        # ||v1||^2 <= 2^(k-1) * lambda_1^2 for delta = 3/4
        rng = random.Random(42)
        for k in (2, 3, 4, 5):
            lat = random_lattice(rng, k, bound=500)
            res = lll_reduce(lat)
            _, _, opt = svp_bruteforce(res.reduced, coeff_bound=4)
            assert norm_sq(res.reduced.column(0)) <= 2 ** (k - 1) * opt


class TestSVP:
    def test_known_shortest(self):
        lat = IntLattice(((2, 0), (1, 2)))
        vec, coeffs, n = svp_bruteforce(lat, 3)
        assert n == 4  # (2,0) and (1,2)... (2,0) has norm 4, (1,2) has norm 5
        assert norm_sq(vec) == n

    def test_canonical_sign(self):
        lat = IntLattice(((0, -3), (2, 0)))
        vec, coeffs, n = svp_bruteforce(lat, 2)
        assert vec == (2, 0) and n == 4
        assert coeffs[next(i for i, c in enumerate(coeffs) if c)] > 0

    def test_dimension_cap(self):
        cols = tuple(
            tuple(1 if i == j else 0 for i in range(7)) for j in range(7)
        )
        with pytest.raises(errors.DimensionTooLarge):
            svp_bruteforce(IntLattice(cols), 1)
