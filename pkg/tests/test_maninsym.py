"""
Tests for P^1(Z/N), modular symbol spaces, Hecke and Fricke operators and
the period map.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd

import pytest
from sympy import Matrix, primerange

from src.core.errors import (
    EigenspaceEmpty,
    EigenspaceNotRankOne,
    InconsistentInput,
    NotProjectivePoint,
)
from src.curve import CurveData, reduce_mod_p
from src.maninsym import (
    P1List,
    build_space,
    convergents,
    cut_eigenspace,
    dump_period_map,
    fricke,
    fricke_eigenvalue,
    fricke_matrix,
    hecke_eigenvalue,
    hecke_matrix,
    hecke_matrix_by_paths,
    hecke_rows,
    lift_to_sl2,
    load_period_map,
    merel,
    p1_normalize,
    p1_reduce,
    path_from_infinity,
    path_symbols,
    period_map_for,
    period_map_path,
    symbol_endpoints,
    symbol_value,
)
from src.maninsym.period_map import _map_lock_for
from src.maninsym.space import s_pair, star_pair, t2_pair, t_pair


class TestP1:
    """Canonical representatives of P^1(Z/N)."""

    @pytest.mark.parametrize("N,size", [(11, 12), (37, 38), (12, 24), (25, 30), (389, 390)])
    def test_size_is_psi(self, N, size):
        assert len(P1List(N)) == size

    def test_reduction_is_idempotent(self):
        for c in range(12):
            for d in range(12):
                if gcd(gcd(c, d), 12) == 1:
                    pair = p1_reduce(12, c, d)
                    assert p1_reduce(12, *pair) == pair

    def test_scalar_multiples_identified(self):
        for u in (2, 3, 5, 7, 10):
            assert p1_reduce(11, 3 * u, 4 * u) == p1_reduce(11, 3, 4)

    def test_non_projective_rejected(self):
        with pytest.raises(NotProjectivePoint):
            p1_reduce(12, 2, 4)

    def test_try_index(self):
        p1 = P1List(12)
        assert p1.try_index(2, 4) == -1
        assert p1.try_index(1, 5) == p1.index(1, 5)

    def test_normalize_symbol(self):
        symbol = p1_normalize(11, 22, 3)
        assert symbol.pair == (0, 1)


class TestSpaces:
    """Dimensions and relations of the presented quotients."""

    def test_level_11(self):
        space = build_space(11)
        assert space.dimension(0) == 3
        assert space.dimension(1) == 2

    def test_level_37(self):
        space = build_space(37)
        assert space.dimension(0) == 5
        assert space.dimension(1) == 3

    def test_relations_hold_in_quotient(self):
        space = build_space(37)
        q = space.full
        for c, d in space.p1:
            i = space.p1.index(c, d)
            s_sum = q.project_sum([(1, i), (1, space.p1.index(*s_pair(c, d)))])
            assert not any(s_sum)
            t_sum = q.project_sum([
                (1, i), (1, space.p1.index(*t_pair(c, d))), (1, space.p1.index(*t2_pair(c, d))),
            ])
            assert not any(t_sum)

    def test_star_is_involution(self):
        space = build_space(11)
        plus = space.plus
        for c, d in space.p1:
            i = space.p1.index(c, d)
            assert plus.dense(i) == plus.dense(space.p1.index(*star_pair(c, d)))

    def test_plus_basis_dimension(self):
        space = build_space(11)
        assert len(space.plus_basis()) == space.dimension(1)

    def test_sign_validated(self):
        with pytest.raises(ValueError):
            build_space(11).quotient(-1)

    @pytest.mark.parametrize("N", [11, 14, 37])
    @pytest.mark.parametrize("sign", [0, 1])
    def test_dimension_matches_dense_rank(self, N, sign):
        space = build_space(N)
        n = len(space.p1)
        dense = [[row.get(j, 0) for j in range(n)] for row in space.relation_rows(sign)]
        assert space.dimension(sign) == n - Matrix(dense).rank()


class TestHecke:
    """Merel matrices and T_p."""

    def test_merel_count(self):
        assert len(merel(2)) == 4
        assert len(merel(3)) == 7

    def test_merel_determinants(self):
        for a, b, c, d in merel(5):
            assert a * d - b * c == 5

    def test_t2_eigenvalues_level_11(self):
        eigen = hecke_matrix(build_space(11), 2).eigenvals()
        assert eigen == {-2: 1, 3: 1}

    def test_t2_eigenvalues_level_37(self):
        eigen = hecke_matrix(build_space(37), 2).eigenvals()
        assert eigen == {-2: 1, 0: 1, 3: 1}

    @pytest.mark.parametrize("N,p", [(11, 2), (11, 3), (37, 2), (37, 5)])
    def test_paths_agree_with_merel(self, N, p):
        space = build_space(N)
        assert hecke_matrix_by_paths(space, p, 1) == hecke_rows(space, p, 1)

    def test_hecke_commutes(self):
        space = build_space(37)
        t2, t3 = hecke_matrix(space, 2), hecke_matrix(space, 3)
        assert t2 * t3 == t3 * t2


class TestPaths:
    """Continued fractions and Manin's trick."""

    def test_convergents(self):
        assert convergents(Fraction(7, 5)) == [(1, 1), (3, 2), (7, 5)]

    def test_path_to_zero(self):
        assert path_from_infinity(Fraction(0)) == [(-1, 0)]

    def test_infinity_path_is_empty(self):
        assert path_from_infinity(None) == []

    def test_lift_to_sl2(self):
        for c, d in P1List(12):
            a, b, cc, dd = lift_to_sl2(c, d, 12)
            assert a * dd - b * cc == 1
            assert p1_reduce(12, cc, dd) == (c, d)

    def test_symbol_endpoints_rebuild_symbol(self):
        space = build_space(11)
        for i, (c, d) in enumerate(space.p1):
            alpha, beta = symbol_endpoints(c, d, 11)
            terms = [(coef, space.p1.index(*pair)) for coef, pair in path_symbols(alpha, beta)]
            assert space.full.project_sum(terms) == space.full.dense(i)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_paths_telescope(self, seed):
        rng = random.Random(seed)
        space = build_space(37)

        def cusp():
            if rng.random() < 0.1:
                return None
            return Fraction(rng.randint(-200, 200), rng.randint(1, 60))

        def symbol(alpha, beta):
            terms = [(coef, space.p1.index(*pair)) for coef, pair in path_symbols(alpha, beta)]
            return space.full.project_sum(terms)

        def act(z):
            # z -> z / (37z + 1), lower-triangular in Gamma_0(37)
            if z is None:
                return Fraction(1, 37)
            return None if 37 * z + 1 == 0 else z / (37 * z + 1)

        for _ in range(20):
            alpha, beta, gamma = cusp(), cusp(), cusp()
            left = [x + y for x, y in zip(symbol(alpha, beta), symbol(beta, gamma))]
            assert left == symbol(alpha, gamma)
            assert symbol(act(alpha), act(beta)) == symbol(alpha, beta)

    def test_fricke(self):
        assert fricke(None, 11) == 0
        assert fricke(Fraction(0), 11) is None
        assert fricke(Fraction(1, 2), 11) == Fraction(-2, 11)

    def test_fricke_is_involution_on_plus(self):
        space = build_space(11)
        W = fricke_matrix(space, 1)
        n = len(W)
        square = [[sum(W[i][k] * W[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert square == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


class TestPeriodMap:
    """Cutting, normalisation, eigenvalues and the cache format."""

    def test_values_are_coprime_integers(self, phi11):
        nonzero = [v for v in phi11.values if v]
        assert nonzero[0] > 0
        g = 0
        for v in nonzero:
            g = gcd(g, v)
        assert g == 1

    def test_relations_respected(self, phi37):
        p1 = phi37.p1
        for c, d in p1:
            assert phi37.value_on(c, d) + phi37.value_on(*s_pair(c, d)) == 0
            assert phi37.value_on(c, d) == phi37.value_on(*star_pair(c, d))

    @pytest.mark.parametrize("p,ap", [(2, -2), (3, -1), (5, 1), (7, -2)])
    def test_hecke_eigenvalues_11a1(self, phi11, p, ap):
        assert hecke_eigenvalue(phi11, p) == ap

    @pytest.mark.parametrize("p,ap", [(2, -2), (3, -3), (5, -2)])
    def test_hecke_eigenvalues_37a1(self, phi37, p, ap):
        assert hecke_eigenvalue(phi37, p) == ap

    @pytest.mark.parametrize("curve_name", ["e11", "e37"])
    def test_hecke_eigenvalues_match_point_counts(self, request, curve_name):
        curve = request.getfixturevalue(curve_name)
        phi = request.getfixturevalue(curve_name.replace("e", "phi"))
        for p in primerange(2, 51):
            if curve.conductor % p:
                assert hecke_eigenvalue(phi, p) == reduce_mod_p(curve, p).ap, p

    @pytest.mark.slow
    def test_hecke_eigenvalues_match_point_counts_389(self, e389, phi389):
        for p in primerange(2, 51):
            assert hecke_eigenvalue(phi389, p) == reduce_mod_p(e389, p).ap, p

    def test_fricke_signs(self, phi11, phi37):
        assert fricke_eigenvalue(phi11) == -1
        assert fricke_eigenvalue(phi37) == 1

    @pytest.mark.slow
    def test_fricke_sign_389(self, phi389):
        assert fricke_eigenvalue(phi389) == -1

    def test_symbol_value_periodic(self, phi11):
        for a in range(1, 11):
            q = Fraction(a, 11)
            assert symbol_value(phi11, q) == symbol_value(phi11, q + 3)

    def test_symbol_value_even(self, phi11):
        for a in range(1, 7):
            assert symbol_value(phi11, Fraction(a, 7)) == symbol_value(phi11, Fraction(-a, 7))

    def test_level_mismatch(self, e37):
        with pytest.raises(InconsistentInput):
            cut_eigenspace(build_space(11), e37)

    def test_too_few_primes(self, e11):
        with pytest.raises(EigenspaceNotRankOne):
            cut_eigenspace(build_space(11), e11, prime_bound=1)

    def test_no_eigenvector(self):
        # 53a1 has a_2 = -1, which T_2 does not take at level 37
        impostor = CurveData(1, -1, 1, 0, 0, conductor=37, label="impostor")
        with pytest.raises(EigenspaceEmpty):
            cut_eigenspace(build_space(37), impostor)

    def test_dump_load_round_trip(self, e11, phi11):
        loaded = load_period_map(dump_period_map(phi11), e11)
        assert loaded == phi11
        assert loaded.fingerprint == phi11.fingerprint

    def test_load_rejects_other_curve(self, e37, phi11):
        assert load_period_map(dump_period_map(phi11), e37) is None

    def test_load_rejects_garbage(self, e11):
        assert load_period_map("not a period map\n", e11) is None

    def test_cache_written_and_reused(self, e11, tmp_path):
        first = period_map_for(e11, cache_dir=tmp_path)
        path = period_map_path(e11, tmp_path)
        assert path.exists()
        second = period_map_for(e11, cache_dir=tmp_path)
        assert first == second

    def test_other_curve_not_blocked_by_held_lock(self, e11, e37, phi37, tmp_path):
        held = _map_lock_for(e11, period_map_path(e11, tmp_path))
        assert held is _map_lock_for(e11, period_map_path(e11, tmp_path))
        with held:
            # the same thread would deadlock on a module-wide lock
            assert period_map_for(e37, cache_dir=tmp_path) == phi37
        assert not held.locked()

    def test_concurrent_builds_match_serial(self, e11, e37, phi11, phi37, tmp_path):
        with ThreadPoolExecutor(max_workers=4) as pool:
            maps = list(pool.map(lambda c: period_map_for(c, cache_dir=tmp_path), [e11, e37, e11, e37]))
        assert maps == [phi11, phi37, phi11, phi37]

    def test_scaled(self, phi11):
        doubled = phi11.scaled(2)
        assert doubled.values == tuple(2 * v for v in phi11.values)
        assert doubled.normalization_id != phi11.normalization_id
        with pytest.raises(ValueError):
            phi11.scaled(0)
