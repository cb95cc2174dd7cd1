"""
Tests for Weierstrass models, reduction types and coefficient tables.
"""

import pytest
from sympy import primerange

from src.core.errors import DiscriminantZero, InconsistentConductor
from src.curve import (
    CurveData,
    ReductionKind,
    an_table,
    ap_cache_path,
    ap_table,
    bad_reduction,
    count_points,
    count_points_bruteforce,
    hasse_bound_holds,
    read_ap_cache,
    reduce_mod_p,
    root_number_from_reduction,
    validate_conductor,
)
from src.curve.coefficients import clear_memory_cache


class TestCurveData:
    """Model invariants and validation."""

    def test_discriminants(self, e11, e37, e389):
        assert e11.disc == -161051
        assert e37.disc == 37
        assert e389.disc == 389

    def test_singular_model_rejected(self):
        # y^2 = x^3 has a cusp
        with pytest.raises(DiscriminantZero):
            CurveData(0, 0, 0, 0, 0, conductor=11)

    def test_tiny_conductor_rejected(self):
        with pytest.raises(InconsistentConductor):
            CurveData(0, -1, 1, -10, -20, conductor=5)

    def test_name_falls_back_to_coefficients(self):
        curve = CurveData(0, -1, 1, -10, -20, conductor=11)
        assert curve.name == "[0,-1,1,-10,-20]"

    def test_cache_key_tracks_conductor(self, e11):
        other = CurveData(0, -1, 1, -10, -20, conductor=121, label="11a1")
        assert other.cache_key != e11.cache_key
        assert e11.cache_key.startswith("11a1_")


class TestPointCounting:
    """#E(F_p) and a_p."""

    @pytest.mark.parametrize("p", list(primerange(2, 201)))
    def test_fast_count_matches_bruteforce(self, e11, e37, e389, p):
        for curve in (e11, e37, e389):
            assert count_points(curve, p) == count_points_bruteforce(curve, p), curve.name

    def test_known_ap_11a1(self, e11):
        expected = {2: -2, 3: -1, 5: 1, 7: -2, 13: 4, 17: -2, 19: 0, 23: -1}
        for p, ap in expected.items():
            assert reduce_mod_p(e11, p).ap == ap

    def test_known_ap_37a1(self, e37):
        expected = {2: -2, 3: -3, 5: -2, 7: -1, 11: -5}
        for p, ap in expected.items():
            assert reduce_mod_p(e37, p).ap == ap

    def test_hasse_bound(self, e389):
        for p, ap in ap_table(e389, 200, use_cache=False).items():
            assert hasse_bound_holds(p, ap), p

    def test_non_prime_rejected(self, e11):
        with pytest.raises(ValueError):
            reduce_mod_p(e11, 9)

    def test_bound_enforced(self, e11):
        with pytest.raises(ValueError, match="bound"):
            reduce_mod_p(e11, 101, bound=100)


class TestReduction:
    """Reduction types at bad primes."""

    def test_11a1_split_at_11(self, e11):
        info = reduce_mod_p(e11, 11)
        assert info.kind is ReductionKind.SPLIT_MULTIPLICATIVE
        assert info.ap == 1

    def test_37a1_nonsplit_at_37(self, e37):
        info = reduce_mod_p(e37, 37)
        assert info.kind is ReductionKind.NONSPLIT_MULTIPLICATIVE
        assert info.ap == -1

    def test_389a1_split_at_389(self, e389):
        assert reduce_mod_p(e389, 389).kind is ReductionKind.SPLIT_MULTIPLICATIVE

    def test_27a1_additive_at_3(self):
        curve = CurveData(0, 0, 1, 0, -7, conductor=27, label="27a1")
        info = reduce_mod_p(curve, 3)
        assert info.kind is ReductionKind.ADDITIVE
        assert info.ap == 0
        assert root_number_from_reduction(curve) is None

    def test_good_prime(self, e11):
        assert reduce_mod_p(e11, 5).kind is ReductionKind.GOOD

    def test_bad_reduction_keys(self, e11):
        assert set(bad_reduction(e11)) == {11}

    def test_wrong_conductor_detected(self):
        # 11a1 model claimed at level 13: good at 11 but 11 | disc, bad "at" 13
        curve = CurveData(0, -1, 1, -10, -20, conductor=13)
        with pytest.raises(InconsistentConductor):
            validate_conductor(curve)

    def test_validate_accepts_fixtures(self, e11, e37, e389):
        for curve in (e11, e37, e389):
            validate_conductor(curve)

    def test_root_numbers(self, e11, e37, e389):
        assert root_number_from_reduction(e11) == 1
        assert root_number_from_reduction(e37) == -1
        assert root_number_from_reduction(e389) == 1


class TestCoefficientTables:
    """a_p cache and the a_n recursion."""

    def test_an_11a1(self, e11):
        an = an_table(e11, 20, use_cache=False)
        assert an[1:21] == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4, 4, -1, -4, -2, 4, 0, 2]

    def test_an_multiplicative(self, e37):
        an = an_table(e37, 60, use_cache=False)
        assert an[6] == an[2] * an[3]
        assert an[35] == an[5] * an[7]
        assert an[4] == an[2] ** 2 - 2
        assert an[37] == -1
        assert an[74] == an[2] * an[37]

    def test_ap_cache_round_trip(self, e11, tmp_path):
        clear_memory_cache()
        table = ap_table(e11, 50, cache_dir=tmp_path)
        path = ap_cache_path(e11, 50, tmp_path)
        assert path.exists()
        assert read_ap_cache(path, e11, 50) == table

    def test_stale_cache_ignored(self, e11, e37, tmp_path):
        clear_memory_cache()
        ap_table(e11, 30, cache_dir=tmp_path)
        path = ap_cache_path(e11, 30, tmp_path)
        assert read_ap_cache(path, e37, 30) is None

    def test_corrupt_cache_ignored(self, e11, tmp_path):
        clear_memory_cache()
        path = ap_cache_path(e11, 30, tmp_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("garbage\n")
        assert read_ap_cache(path, e11, 30) is None
        assert ap_table(e11, 30, cache_dir=tmp_path)[2] == -2

    def test_p_max_validated(self, e11):
        with pytest.raises(ValueError):
            ap_table(e11, 1)
