"""
Tests for G_M, group-ring arithmetic, the augmentation filtration and
characters.
"""

import random
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from src.core.errors import ModulusTooSmall, NotADivisor, NotAUnit
from src.groupring import (
    INTEGERS,
    RATIONALS,
    Z_HALF,
    AbelianGroup,
    GroupRingElement,
    Lattice,
    OrdKind,
    OrdResult,
    augmentation_order,
    character_table,
    characters,
    conductor,
    corestriction,
    evaluate,
    filtration_for,
    fourier_inverse,
    galois_group,
    in_power,
    involution,
    is_primitive,
    localization,
    orthogonality_defect,
    parse_dump,
    project,
    ring_from_name,
    sigma,
    smith_normal_form,
)


def _g_minus_one(G, index):
    return GroupRingElement.basis(G, index) - GroupRingElement.one(G)


# every abelian group of order <= 12, by invariant factors
SMALL_GROUPS = [
    (2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4), (2, 2, 2),
    (9,), (3, 3), (10,), (11,), (12,), (2, 6),
]


def _brute_powers(G, depth):
    """I^1..I^depth spanned by all products of (g - 1), in I-coordinates."""
    gens = [_g_minus_one(G, g) for g in range(1, G.order)]
    powers, layer = [], gens
    for _ in range(depth):
        powers.append(Lattice(G.order - 1, [x.integer_vector()[1:] for x in layer]))
        layer = [x * g for x in layer for g in gens]
    return powers


def _brute_order(xi, powers):
    if xi.is_zero():
        return OrdResult(OrdKind.ZERO)
    if xi.augmentation() != 0:
        return OrdResult.finite(0)
    vec = xi.integer_vector()[1:]
    r = 1
    while r < len(powers) and vec in powers[r]:
        r += 1
    return OrdResult.finite(r) if r < len(powers) else OrdResult(OrdKind.AT_LEAST, r)


def _random_element(G, rng):
    """Integer combination of short products of (g - 1), units included."""
    xi = GroupRingElement.zero(G)
    for _ in range(rng.randint(1, 3)):
        term = GroupRingElement.basis(G, rng.randrange(G.order))
        for _ in range(rng.randint(0, 3)):
            term = term * _g_minus_one(G, rng.randrange(1, G.order))
        xi = xi + rng.randint(-3, 3) * term
    return xi


class TestSmithForm:
    """Smith normal form with transforms."""

    def test_diagonal_divisibility(self):
        snf = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert snf.diagonal == [2, 6, 12]

    def test_transforms_reproduce_diagonal(self):
        A = [[6, 4], [4, 6], [2, 2]]
        snf = smith_normal_form(A)
        U, V = Matrix(snf.left), Matrix(snf.right)
        D = U * Matrix(A) * V
        for i in range(D.rows):
            for j in range(D.cols):
                expected = snf.diagonal[i] if i == j and i < len(snf.diagonal) else 0
                assert D[i, j] == expected
        assert Matrix(snf.right) * Matrix(snf.right_inverse) == Matrix.eye(2)


class TestGaloisGroup:
    """Structure of (Z/M)*/{+-1}."""

    @pytest.mark.parametrize("M,orders", [
        (3, ()), (4, ()), (5, (2,)), (7, (3,)), (8, (2,)), (11, (5,)),
        (12, (2,)), (13, (6,)), (15, (4,)), (16, (4,)), (21, (6,)), (24, (2, 2)),
    ])
    def test_invariant_factors(self, M, orders):
        G = galois_group(M)
        assert G.orders == orders
        assert G.order == max(1, sum(1 for a in range(1, M) if gcd(a, M) == 1) // 2)

    def test_small_modulus_rejected(self):
        with pytest.raises(ModulusTooSmall):
            galois_group(2)

    def test_classes_pair_a_with_minus_a(self):
        G = galois_group(13)
        for a in range(1, 13):
            assert G.index_of(a) == G.index_of(13 - a)
        assert sorted(G.representatives) == [1, 2, 3, 4, 5, 6]

    def test_non_unit_rejected(self):
        with pytest.raises(NotAUnit):
            galois_group(12).index_of(3)

    def test_identity_is_sigma_one(self):
        G = galois_group(20)
        assert G.index_of(1) == G.identity == 0

    def test_multiplication_matches_residues(self):
        G = galois_group(35)
        for a in (2, 3, 4, 6, 8):
            for b in (3, 9, 11, 12):
                assert G.mul(G.index_of(a), G.index_of(b)) == G.index_of(a * b)


class TestElements:
    """Group-ring arithmetic and maps between levels."""

    def test_sigma_multiplication(self):
        G = galois_group(11)
        assert sigma(G, 2) * sigma(G, 3) == sigma(G, 6)
        assert sigma(G, 2) * sigma(G, 6) == sigma(G, 1)

    def test_dump_parse_round_trip(self):
        G = galois_group(13)
        xi = GroupRingElement.from_residues(G, {1: 3, 2: -1, 5: 7})
        text = xi.dump()
        assert text.startswith("13; 1:3, 2:-1, 3:0")
        assert parse_dump(text) == xi

    def test_rational_dump(self):
        G = galois_group(5)
        xi = GroupRingElement.from_residues(G, {1: Fraction(1, 2)}, RATIONALS)
        assert xi.dump() == "5; 1:1/2, 2:0"

    def test_ring_rejects_denominators(self):
        G = galois_group(5)
        with pytest.raises(ValueError):
            GroupRingElement(G, [Fraction(1, 3), 0], Z_HALF)

    def test_project_is_ring_map(self):
        big, small = galois_group(35), galois_group(7)
        x = GroupRingElement.from_residues(big, {2: 1, 3: -2, 11: 5})
        y = GroupRingElement.from_residues(big, {1: 4, 4: 1})
        assert project(big, small, x * y) == project(big, small, x) * project(big, small, y)
        assert project(big, small, x).augmentation() == x.augmentation()

    def test_project_needs_divisor(self):
        with pytest.raises(NotADivisor):
            project(galois_group(15), galois_group(7), GroupRingElement.zero(galois_group(15)))

    def test_corestriction_multiplies_augmentation(self):
        small, big = galois_group(5), galois_group(15)
        x = GroupRingElement.from_residues(small, {1: 2, 2: 1})
        lifted = corestriction(small, big, x)
        assert lifted.augmentation() == x.augmentation() * (big.order // small.order)
        # projecting back multiplies by the kernel size
        assert project(big, small, lifted) == (big.order // small.order) * x

    def test_involution(self):
        G = galois_group(13)
        assert involution(sigma(G, 2)) == sigma(G, pow(2, -1, 13))
        x = GroupRingElement.from_residues(G, {2: 1, 3: 4})
        assert involution(involution(x)) == x

    def test_ring_names(self):
        assert ring_from_name("Z[1/2]") == Z_HALF
        assert ring_from_name("Z[1/2,3]") == localization([2, 3])
        with pytest.raises(ValueError):
            ring_from_name("R")


class TestLattice:
    """Echelon lattices against sympy's Hermite normal form."""

    @pytest.mark.parametrize("rows", [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[3, 1, 0], [0, 5, 2], [1, 1, 7]],
        [[4, 6, 8], [6, 9, 12], [1, 0, 3]],
    ])
    def test_index_matches_determinant(self, rows):
        lattice = Lattice(3, rows)
        det = abs(Matrix(rows).det())
        if det:
            assert lattice.index() == det
            hnf = hermite_normal_form(Matrix(rows).T)
            assert abs(hnf.det()) == det

    def test_membership(self):
        lattice = Lattice(2, [[2, 0], [0, 3]])
        assert [4, 9] in lattice
        assert [1, 0] not in lattice
        assert lattice.contains_over([1, 0], Z_HALF)
        assert not lattice.contains_over([0, 1], Z_HALF)
        assert lattice.contains_over([Fraction(1, 5), 7], RATIONALS)

    def test_equality_is_basis_independent(self):
        a = Lattice(2, [[1, 1], [0, 2]])
        b = Lattice(2, [[1, -1], [2, 0]])
        assert a == b


class TestFiltration:
    """Powers of the augmentation ideal and ord."""

    def test_order_two_powers_over_z(self):
        # I^n = 2^(n-1) I for the group of order 2; coordinates in the basis g - 1
        G = AbelianGroup((2,))
        filt = filtration_for(G)
        for n in range(1, 7):
            assert filt.power(n) == Lattice(1, [[2 ** (n - 1)]])

    def test_order_two_stabilizes_over_z_half(self):
        G = AbelianGroup((2,))
        result = augmentation_order(_g_minus_one(G, 1), r_max=5, ring=Z_HALF)
        assert result.kind is OrdKind.STABILIZED
        assert result.value == 1

    def test_finite_orders_over_z(self):
        G = AbelianGroup((2,))
        x = _g_minus_one(G, 1)
        assert augmentation_order(x).value == 1
        assert augmentation_order(2 * x).value == 2
        assert augmentation_order(4 * x).value == 3

    def test_zero_and_nonzero_augmentation(self):
        G = galois_group(7)
        assert augmentation_order(GroupRingElement.zero(G)).kind is OrdKind.ZERO
        result = augmentation_order(sigma(G, 2))
        assert result.is_finite and result.value == 0

    def test_generator_minus_one_has_order_one(self):
        # I/I^2 is G, and g - 1 maps to a generator
        G = AbelianGroup((5,))
        assert augmentation_order(_g_minus_one(G, 1)).value == 1

    def test_products_land_in_higher_powers(self):
        G = AbelianGroup((3, 3))
        x = _g_minus_one(G, 1)
        y = _g_minus_one(G, 3)
        assert in_power(x * y, 2)
        assert in_power(x * y * x, 3)
        assert not in_power(x, 2)

    @pytest.mark.parametrize("orders", SMALL_GROUPS)
    def test_powers_match_products(self, orders):
        G = AbelianGroup(orders)
        for r, spanned in enumerate(_brute_powers(G, 3), start=1):
            assert spanned == filtration_for(G).power(r), (orders, r)

    @pytest.mark.parametrize("orders", SMALL_GROUPS)
    def test_order_matches_products_on_random_elements(self, orders):
        G = AbelianGroup(orders)
        powers = _brute_powers(G, 3)
        rng = random.Random(G.order * 1000 + len(orders))
        for _ in range(100):
            xi = _random_element(G, rng)
            assert augmentation_order(xi, r_max=2) == _brute_order(xi, powers), (orders, xi.dump())

    def test_r_max_validated(self):
        with pytest.raises(ValueError):
            augmentation_order(sigma(galois_group(5), 1), r_max=0)


class TestCharacters:
    """Character tables of G_M."""

    @pytest.mark.parametrize("M", [5, 7, 12, 15, 16, 21])
    def test_orthogonality(self, M):
        assert orthogonality_defect(galois_group(M)) < 1e-9

    def test_table_shape(self):
        G = galois_group(13)
        assert character_table(G).shape == (6, 6)

    def test_evaluate_sigma(self):
        G = galois_group(7)
        for chi in characters(G):
            assert evaluate(chi, sigma(G, 3)) == pytest.approx(chi(G.index_of(3)))

    def test_conductors_mod_15(self):
        G = galois_group(15)
        found = sorted(conductor(chi) for chi in characters(G))
        # trivial, the quadratic character mod 5, two of conductor 15
        assert found == [1, 5, 15, 15]
        assert sum(1 for chi in characters(G) if is_primitive(chi)) == sum(1 for f in found if f == 15)

    def test_fourier_inverse_recovers_coefficients(self):
        G = galois_group(13)
        x = GroupRingElement.from_residues(G, {1: 2, 2: -3, 5: 1})
        values = {chi.index: evaluate(chi, x) for chi in characters(G)}
        recovered = fourier_inverse(G, values)
        assert np.allclose(recovered, [float(c) for c in x.coeffs])

    def test_fourier_inverse_needs_all_values(self):
        G = galois_group(7)
        with pytest.raises(ValueError):
            fourier_inverse(G, {0: 1.0})

    def test_integers_ring_default(self):
        assert GroupRingElement.one(galois_group(5)).ring == INTEGERS
