"""
Tests for Dirichlet characters, twisted L-values and the special-value fit.
"""

from fractions import Fraction

import mpmath
import pytest

from src.core.errors import HypothesisViolated, NotPrimitive, PrecisionNotReached
from src.groupring import characters, galois_group, is_primitive
from src.lseries import (
    PAIRINGS,
    DirichletCharacter,
    LSeriesContext,
    check_special_values,
    gauss_sum,
    l_value_twisted,
    truncation_length,
)
from src.lseries import series

L_11A1 = 0.2538418608559106


def _primitive_characters(M):
    return [
        DirichletCharacter.from_group_character(chi)
        for chi in characters(galois_group(M)) if is_primitive(chi)
    ]


class TestDirichletCharacters:
    """Exact angles, conductors and Gauss sums."""

    def test_trivial(self):
        chi = DirichletCharacter.trivial()
        assert chi.is_trivial and chi.is_primitive()
        assert chi(7) == 1

    def test_values_vanish_off_units(self):
        chi = _primitive_characters(5)[0]
        assert chi(10) == 0
        assert chi.angle(5) is None

    def test_group_characters_are_even(self):
        for M in (5, 7, 13, 16):
            for chi in characters(galois_group(M)):
                assert DirichletCharacter.from_group_character(chi).is_even

    def test_quadratic_mod_5(self):
        (chi,) = _primitive_characters(5)
        assert chi.order == 2
        assert chi(2) == -1
        assert complex(gauss_sum(chi)) == pytest.approx(5 ** 0.5)

    @pytest.mark.parametrize("M", [5, 7, 8, 13, 15])
    def test_gauss_sum_modulus(self, M):
        for chi in _primitive_characters(M):
            assert abs(complex(gauss_sum(chi))) ** 2 == pytest.approx(M)

    def test_imprimitive(self):
        G = galois_group(15)
        chi = next(c for c in characters(G) if not c.is_trivial and not is_primitive(c))
        dchi = DirichletCharacter.from_group_character(chi)
        assert dchi.conductor() == 5
        assert dchi.primitive().modulus == 5
        assert dchi.primitive().is_primitive()
        with pytest.raises(NotPrimitive):
            gauss_sum(dchi)

    def test_conjugate(self):
        (chi,) = [c for c in _primitive_characters(7) if c.order == 3][:1]
        conj = chi.conjugate()
        assert conj.angle(3) == (-chi.angle(3)) % 1
        assert complex(chi(3) * conj(3)) == pytest.approx(1)
        assert conj.angle(1) == Fraction(0)


class TestTwistedLValues:
    """Approximate functional equation."""

    def test_truncation_length(self):
        assert truncation_length(1, 11, 8) == 20
        assert truncation_length(1, 1, 1) == 10
        assert truncation_length(5, 37, 8) > truncation_length(1, 37, 8)

    def test_central_value_11a1(self, e11):
        ctx = LSeriesContext(e11, digits=10)
        value = l_value_twisted(ctx, DirichletCharacter.trivial())
        assert complex(value).real == pytest.approx(L_11A1, abs=1e-9)
        assert abs(complex(value).imag) < 1e-12

    def test_central_value_rank_one(self, e37):
        ctx = LSeriesContext(e37, digits=8)
        assert abs(complex(l_value_twisted(ctx, DirichletCharacter.trivial()))) < 1e-8

    def test_root_number_default(self, e11, e37):
        assert LSeriesContext(e11).root_number == 1
        assert LSeriesContext(e37).root_number == -1

    def test_twisted_root_number_has_modulus_one(self, e11):
        ctx = LSeriesContext(e11)
        with mpmath.workdps(30):
            for chi in _primitive_characters(7):
                assert abs(complex(ctx.twisted_root_number(chi))) == pytest.approx(1)

    def test_conjugate_values_are_conjugate_for_real_curve(self, e11):
        ctx = LSeriesContext(e11, digits=8)
        for chi in _primitive_characters(7):
            a = complex(l_value_twisted(ctx, chi))
            b = complex(l_value_twisted(ctx, chi.conjugate()))
            assert a == pytest.approx(b.conjugate(), abs=1e-7)

    def test_imprimitive_rejected(self, e11):
        G = galois_group(15)
        chi = next(c for c in characters(G) if not c.is_trivial and not is_primitive(c))
        with pytest.raises(NotPrimitive):
            l_value_twisted(LSeriesContext(e11), DirichletCharacter.from_group_character(chi))

    def test_modulus_sharing_conductor_rejected(self, e11):
        (chi,) = _primitive_characters(11)[:1]
        with pytest.raises(HypothesisViolated):
            l_value_twisted(LSeriesContext(e11), chi)

    def test_short_series_detected(self, e11, monkeypatch):
        monkeypatch.setattr(series, "truncation_length", lambda m, N, digits=8: 2)
        with pytest.raises(PrecisionNotReached):
            l_value_twisted(LSeriesContext(e11, digits=8), DirichletCharacter.trivial())

    def test_bad_context_arguments(self, e11):
        with pytest.raises(ValueError):
            LSeriesContext(e11, digits=0)
        with pytest.raises(ValueError):
            LSeriesContext(e11, root_number=2)


class TestSpecialValues:
    """One scalar relates character values of Theta to twisted L-values."""

    def test_11a1(self, e11, phi11):
        report = check_special_values(e11, phi11, [3, 4, 5, 7, 8])
        assert report.passed, report.max_residual
        assert report.c is not None
        assert report.pairing_name in PAIRINGS
        assert report.rows[0].modulus == 1

    def test_11a1_odd_prime_power_moduli(self, e11, phi11):
        report = check_special_values(e11, phi11, [5, 7, 9, 13])
        assert report.passed, report.max_residual
        assert {row.modulus for row in report.rows} >= {1, 5, 7, 9, 13}

    def test_37a1_rank_one(self, e37, phi37):
        report = check_special_values(e37, phi37, [3, 5, 7])
        assert report.passed, report.max_residual

    def test_scaling_the_map_scales_c(self, e11, phi11):
        base = check_special_values(e11, phi11, [5, 7])
        doubled = check_special_values(e11, phi11.scaled(2), [5, 7])
        assert doubled.passed
        assert doubled.c == pytest.approx(2 * base.c)

    def test_non_coprime_modulus_rejected(self, e11, phi11):
        with pytest.raises(HypothesisViolated):
            check_special_values(e11, phi11, [22])

    def test_to_dict(self, e11, phi11):
        data = check_special_values(e11, phi11, [5]).to_dict()
        assert data["curve"] == "11a1"
        assert data["passed"] is True
        assert {row["modulus"] for row in data["rows"]} >= {1, 5}
