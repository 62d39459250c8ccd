from fractions import Fraction
from math import comb

import pytest

from ginwb.surfaces import (
    CUBIC_SCROLL_CHI,
    PLANE_CHI,
    QUADRIC_SURFACE_CHI,
    RationalPolynomial,
    blowup6,
    blowup6_solutions,
    divisor_stats,
    format_rational_polynomial,
    h0_line_bundle_fn,
    hirzebruch,
    koszul_chi,
    liaison_bounds,
    liaison_residual_chi,
    linear_bound_in,
    normal_sheaf_bound,
    parse_class,
    parse_rational_polynomial,
    scroll_family_dims,
    serre_dual_substitution,
    solve_classes,
    surface,
    veronese_degree_possible,
)

F0, F1, F2, F3 = (hirzebruch(n) for n in range(4))


def test_pairings_and_canonical_classes():
    assert F2.dot((1, 0), (1, 0)) == -2 and F2.dot((1, 0), (0, 1)) == 1 and F2.dot((0, 1), (0, 1)) == 0
    assert F3.K.coeffs == (-2, -5)
    B = blowup6()
    assert B.K.coeffs == (-3, 1, 1, 1, 1, 1, 1)
    assert B.K.dot(B.K) == 3


def test_f1_curve():
    st = divisor_stats(F1.cls(4, 7), F1.cls(1, 2))
    assert (st.degree, st.genus) == (11, 12)


def test_f3_curve_meets_the_section_negatively():
    assert F3.cls(4, 11).dot(F3.cls(1, 0)) == -1


def test_f0_chi():
    assert divisor_stats(F0.cls(1, 2), F0.cls(1, 2)).chi == 6


def test_half_integral_genus_flagged():
    st = divisor_stats(F1.cls(1, 0) + F1.cls(0, 0), F1.cls(1, 2))
    assert st.genus_integral
    odd = divisor_stats(blowup6().cls(1, 1, 0, 0, 0, 0, 0), blowup6().cls(3, 1, 1, 1, 1, 1, 1))
    assert isinstance(odd.genus, Fraction)


def test_h0_closed_form():
    assert h0_line_bundle_fn(0, 1, 2) == 6
    assert h0_line_bundle_fn(2, 1, 3) == 6
    assert h0_line_bundle_fn(2, 2, 3) == 6
    with pytest.raises(ValueError):
        h0_line_bundle_fn(1, -1, 2)


def test_solve_classes():
    assert solve_classes(F1, F1.cls(1, 2), 11, {12}) == [(4, 7)]
    assert solve_classes(F3, F3.cls(1, 3), 11, {12}, effective=False) == [(4, 11)]
    assert solve_classes(F3, F3.cls(1, 3), 11, {12}) == []
    got = solve_classes(F0, F0.cls(1, 2), 11, {0, 1, 2})
    assert got == [(1, 9), (5, 1)]
    assert all(divisor_stats(F0.cls(a, b), F0.cls(1, 2)).genus == 0 for a, b in got)


def test_blowup_system():
    assert blowup6_solutions() == []
    # without a >= 4 the system is still empty on -1 <= b_i <= 0
    assert blowup6_solutions(drop=("res3a",)) == []
    assert blowup6_solutions(drop=("res4",)) == [(5, 0, 0, 0, 0, 0, -4)]
    assert (4, 2, 0, 0, -1, -1, -1) in blowup6_solutions(drop=("res3",), b_range=(-1, 4))


def test_normal_sheaf_bounds():
    assert normal_sheaf_bound(F1.cls(4, 7)) == (16, 17)
    assert linear_bound_in(F3, lambda a: F3.cls(a, 11)) == (20, -1)
    K = F1.K
    assert normal_sheaf_bound(K)[0] == -K.dot(K) - 2


def test_koszul():
    assert format_rational_polynomial(koszul_chi((3, 3, 3), 4)) == "27*t - 54"
    assert koszul_chi((1, 2), 4) == RationalPolynomial.of(1, 2, 1)
    assert koszul_chi((3, 3), 4) == parse_rational_polynomial("9/2t^2-9/2t+6")
    assert koszul_chi((1, 2), 4) == QUADRIC_SURFACE_CHI


def test_hypersurface_koszul_against_binomials():
    for d in range(1, 6):
        p = koszul_chi((d,), 4)
        for t in range(11):
            assert p(t) == comb(t + 4, 4) - _binom4(t - d + 4)


def _binom4(n):
    # binom(n, 4) as a polynomial in n, so negative n is allowed
    return Fraction(n * (n - 1) * (n - 2) * (n - 3), 24)


def test_residuals():
    link = koszul_chi((3, 3), 4)
    res, g = liaison_residual_chi(link, CUBIC_SCROLL_CHI)
    assert (format_rational_polynomial(res), g) == ("3*t^2 + t + 1", 3)
    res, g = liaison_residual_chi(link, QUADRIC_SURFACE_CHI)
    assert (format_rational_polynomial(res), g) == ("7/2*t^2 - 1/2*t + 2", 5)
    res, _ = liaison_residual_chi(link, PLANE_CHI)
    assert res != parse_rational_polynomial("4t^2-3t+4")


def test_serre_substitution_is_an_involution():
    p = parse_rational_polynomial("7/2t^2-1/2t+2")
    assert serre_dual_substitution(serre_dual_substitution(p)) == p


def test_liaison_bounds():
    assert liaison_bounds("333", 2, 2, 0).contact_lower_bound == 5
    assert liaison_bounds("333", 3, 2, 1).contact_lower_bound == 8
    assert liaison_bounds("333", 4, 2, 3).contact_lower_bound == 9
    for m in range(0, 5):
        assert liaison_bounds("333", m, 2).secant_cap == 48 - 3 * m
        for g in range(0, 6):
            b = liaison_bounds("44", m, g)
            assert b.linked_intersection == 46 - 2 * g
            assert b.secant_cap == 20 - 4 * m
            assert b.contact_lower_bound == 26 + 4 * m - 2 * g


def test_family_dimensions():
    dims = {k: v.total for k, v in scroll_family_dims().items()}
    assert dims["F0_projected"] == 24
    assert dims["F2_projected"] == 23
    assert dims["F2_curves_2e_3f"] == 29
    assert not veronese_degree_possible(11) and veronese_degree_possible(10)


def test_class_literals():
    C = parse_class("F1:(4,7)")
    assert str(C) == "F1:(4,7)" and C.coeffs == (4, 7)
    B = parse_class("Bl6P2:(4;0,0,-1,-1,-1,-1)")
    assert str(B) == "Bl6P2:(4;0,0,-1,-1,-1,-1)"
    with pytest.raises(ValueError):
        parse_class("F7:(1,2)")
    with pytest.raises(ValueError):
        surface("P2")


def test_polynomial_rendering_roundtrip():
    for text in ("9/2*t^2 - 9/2*t + 6", "27*t - 54", "t^2 + 2*t + 1", "-1/2*t"):
        assert format_rational_polynomial(parse_rational_polynomial(text)) == text
