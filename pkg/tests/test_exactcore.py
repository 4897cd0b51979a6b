from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath
import pytest

from gext_lab.exactcore.factor import factor_finite
from gext_lab.exactcore.irreducible import (
    CERTIFIED_IRREDUCIBLE,
    CERTIFIED_REDUCIBLE,
    poly_irreducible,
    rabin_irreducible,
)
from gext_lab.exactcore.poly import DensePoly, from_integers, poly_gcd, poly_xgcd, squarefree
from gext_lab.exactcore.reconstruct import exact_value, rational_reconstruct
from gext_lab.exactcore.scalar import PrimeField, RationalField, Residue, base_field_from_tag
from gext_lab.helpers.errors import DivisionByZeroError, FieldMismatchError

Q = RationalField()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def qpoly(*coeffs: int) -> DensePoly:
    return from_integers(Q, coeffs)


def fpoly(field: PrimeField, *coeffs: int) -> DensePoly:
    return from_integers(field, coeffs)


class TestScalars:
    def test_rationals_are_normalised(self) -> None:
        assert Q.coerce(Fraction(4, -6)) == Fraction(-2, 3)
        assert Q.render(Fraction(4, -6)) == "-2/3"
        assert Q.render(Q.coerce(5)) == "5/1"

    def test_residue_arithmetic(self) -> None:
        F7 = PrimeField(7)
        a = F7.coerce(3)
        assert a * 5 == 1
        assert a.inverse() == 5
        assert a - 4 == 6
        assert F7.render(a**3) == 6

    def test_residue_inverse_of_zero(self) -> None:
        with pytest.raises(DivisionByZeroError):
            Residue(0, 5).inverse()

    def test_mixed_moduli_are_rejected(self) -> None:
        with pytest.raises(FieldMismatchError):
            Residue(1, 3) + Residue(1, 5)

    @pytest.mark.parametrize(["tag", "expected"], [("Q", Q), ("F2", F2), ("F5", F5)])
    def test_base_field_from_tag(self, tag: str, expected: object) -> None:
        assert base_field_from_tag(tag) == expected

    @pytest.mark.parametrize("tag", ["F4", "F1", "R", "F"])
    def test_base_field_from_bad_tag(self, tag: str) -> None:
        with pytest.raises(ValueError):
            base_field_from_tag(tag)

    def test_modulus_limit(self) -> None:
        assert PrimeField(2**31 - 1).p == 2**31 - 1
        with pytest.raises(ValueError):
            PrimeField(2**31 + 11)

    @pytest.mark.parametrize("p", [1, 9, 561])
    def test_composite_modulus(self, p: int) -> None:
        with pytest.raises(ValueError):
            PrimeField(p)


class TestDensePoly:
    def test_trailing_zeros_are_trimmed(self) -> None:
        p = qpoly(1, 2, 0, 0)
        assert p.degree == 1
        assert DensePoly.zero(Q).degree == -1

    @pytest.mark.parametrize(
        ["a", "b"],
        [
            ((1, 0, 0, 0, 1), (1, 1)),
            ((-2, 0, 1), (0, 0, 0, 1)),
            ((3, -1, 4, 1, -5, 9), (2, 6, 5)),
        ],
    )
    def test_divrem_reconstructs(self, a: Sequence[int], b: Sequence[int]) -> None:
        pa, pb = qpoly(*a), qpoly(*b)
        q, r = pa.divrem(pb)
        assert q * pb + r == pa
        assert r.degree < pb.degree

    def test_division_by_zero(self) -> None:
        with pytest.raises(DivisionByZeroError):
            qpoly(1, 1).divrem(DensePoly.zero(Q))

    def test_gcd_is_monic_and_divides(self) -> None:
        a = qpoly(-1, 0, 1) * qpoly(2, 1)
        b = qpoly(-2, 2) * qpoly(3, 1)
        g = poly_gcd(a, b)
        assert g == qpoly(-1, 1)
        assert g.divides(a) and g.divides(b)

    def test_xgcd_bezout(self) -> None:
        a, b = fpoly(F5, 1, 0, 1), fpoly(F5, 2, 1)
        g, s, t = poly_xgcd(a, b)
        assert g.is_monic()
        assert s * a + t * b == g

    def test_mixed_fields_are_rejected(self) -> None:
        with pytest.raises(FieldMismatchError):
            qpoly(1, 1) + fpoly(F2, 1, 1)

    def test_derivative(self) -> None:
        assert qpoly(1, -3, 0, 1).derivative() == qpoly(-3, 0, 3)
        assert fpoly(F3, 1, 0, 0, 1).derivative() == DensePoly.zero(F3)

    def test_evaluation(self) -> None:
        assert qpoly(-2, 0, 1)(Fraction(3, 2)) == Fraction(1, 4)
        assert fpoly(F3, 1, 0, 1)(F3.coerce(1)) == 2

    @pytest.mark.parametrize(
        ["poly", "expected"],
        [
            (qpoly(-1, 1) ** 2 * qpoly(1, 1), qpoly(-1, 0, 1)),
            (qpoly(-2, 0, 1), qpoly(-2, 0, 1)),
            (fpoly(F3, -1, 0, 0, 1), fpoly(F3, -1, 1)),
            (fpoly(F5, -1, 0, 0, 0, 0, 1), fpoly(F5, -1, 1)),
        ],
    )
    def test_squarefree(self, poly: DensePoly, expected: DensePoly) -> None:
        assert squarefree(poly) == expected


class TestFactorFinite:
    @pytest.mark.parametrize(
        ["poly", "expected"],
        [
            (fpoly(F2, 1, 0, 0, 0, 1), [((1, 1), 4)]),
            (fpoly(F5, 1, 0, 1), [((2, 1), 1), ((3, 1), 1)]),
            (fpoly(F3, 1, 0, 1), [((1, 0, 1), 1)]),
        ],
    )
    def test_examples(self, poly: DensePoly, expected: List[Tuple[Tuple[int, ...], int]]) -> None:
        factors = factor_finite(poly)
        assert [(f, m) for f, m in factors] == [(fpoly(poly.field, *c), m) for c, m in expected]

    @pytest.mark.parametrize(
        "coeffs",
        [
            (1, 1, 0, 1, 1, 0, 0, 1, 1),
            (0, 1, 1, 0, 0, 1, 0, 1, 1, 1, 1),
            (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1),
        ],
    )
    def test_product_of_factors_is_input(self, coeffs: Sequence[int]) -> None:
        f = fpoly(F2, *coeffs)
        product = DensePoly.constant(F2, 1)
        for g, m in factor_finite(f):
            assert rabin_irreducible(g).irreducible
            product = product * g**m
        assert product == f.monic()

    def test_factoring_over_q_is_refused(self) -> None:
        with pytest.raises(ValueError):
            factor_finite(qpoly(1, 0, 1))


class TestIrreducibility:
    @pytest.mark.parametrize(
        ["poly", "status"],
        [
            (qpoly(-2, 0, 1), CERTIFIED_IRREDUCIBLE),
            (qpoly(1, 0, 0, 0, 1), CERTIFIED_IRREDUCIBLE),
            (qpoly(-2, 0, 0, 1), CERTIFIED_IRREDUCIBLE),
            (qpoly(1, -3, 0, 1), CERTIFIED_IRREDUCIBLE),
            (qpoly(-1, 0, 1), CERTIFIED_REDUCIBLE),
            (qpoly(4, 0, 5, 0, 1), CERTIFIED_REDUCIBLE),
            (fpoly(F2, 1, 1, 0, 0, 1), CERTIFIED_IRREDUCIBLE),
            (fpoly(F2, 1, 0, 0, 0, 1), CERTIFIED_REDUCIBLE),
            (fpoly(F3, 1, 0, 1), CERTIFIED_IRREDUCIBLE),
        ],
    )
    def test_verdicts(self, poly: DensePoly, status: str) -> None:
        assert poly_irreducible(poly).status == status

    def test_reducible_rational_witness_divides(self) -> None:
        verdict = poly_irreducible(qpoly(-1, 0, 1))
        assert verdict.witness in (qpoly(-1, 1), qpoly(1, 1))
        assert verdict.witness.divides(qpoly(-1, 0, 1))

    def test_integer_factorisation_witness(self) -> None:
        poly = qpoly(4, 0, 5, 0, 1)
        verdict = poly_irreducible(poly)
        assert verdict.method == "integer factorisation"
        assert verdict.witness.degree == 2
        assert verdict.witness.divides(poly)

    def test_biquadratic_minpoly_is_irreducible(self) -> None:
        assert poly_irreducible(qpoly(1, 0, -10, 0, 1)).irreducible

    def test_constant_is_an_error(self) -> None:
        with pytest.raises(ValueError):
            poly_irreducible(qpoly(3))

    def test_rabin_agrees_with_factoring(self) -> None:
        for coeffs in [(1, 1, 0, 0, 0, 0, 1), (1, 0, 0, 1, 0, 0, 1), (1, 1, 1)]:
            f = fpoly(F2, *coeffs)
            by_factoring = len(factor_finite(f)) == 1 and factor_finite(f)[0][1] == 1
            assert rabin_irreducible(f).irreducible == by_factoring


class TestRationalReconstruct:
    def test_half(self) -> None:
        assert rational_reconstruct("0.5", 10) == Fraction(1, 2)

    def test_sqrt2_convergent(self) -> None:
        with mpmath.workdps(50):
            assert rational_reconstruct(mpmath.sqrt(2), 100) == Fraction(99, 70)

    def test_third_from_digits(self) -> None:
        assert rational_reconstruct("0." + "3" * 30, 10) == Fraction(1, 3)

    def test_recovers_rendered_rationals(self) -> None:
        for value in [Fraction(-355, 113), Fraction(22, 7), Fraction(1, 997)]:
            with mpmath.workdps(40):
                rendered = mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, 30)
            assert rational_reconstruct(rendered, 1000) == value

    def test_no_convergent_within_bound(self) -> None:
        assert rational_reconstruct("0.5", 1) is None

    def test_bound_must_be_positive(self) -> None:
        with pytest.raises(ValueError):
            rational_reconstruct("0.5", 0)

    def test_exact_value_of_mpf(self) -> None:
        assert exact_value(mpmath.mpf(0.375)) == Fraction(3, 8)

    def test_exact_value_has_python_int_parts(self) -> None:
        for value in [mpmath.mpf(0.375), mpmath.mpf(-12), mpmath.mpf(2) ** -70]:
            exact = exact_value(value)
            assert type(exact.numerator) is int
            assert type(exact.denominator) is int

    def test_reconstruction_has_python_int_parts(self) -> None:
        with mpmath.workdps(50):
            value = rational_reconstruct(mpmath.sqrt(2), 100)
        assert value is not None
        assert type(value.numerator) is int
        assert type(value.denominator) is int
