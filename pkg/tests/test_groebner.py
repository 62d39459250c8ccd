import pytest

from ginwb.groebner import (
    DEFAULT_MODULUS,
    Fp,
    PolyParseError,
    PolyRing,
    TermOrder,
    format_poly,
    groebner_basis,
    is_groebner,
    is_reduced,
    leading_monomials,
    normal_form,
    parse_poly,
    s_polynomial,
)

R = PolyRing(("x", "y", "z"))


def P(text, ring=R):
    return parse_poly(text, ring)


def test_field_arithmetic():
    a, b = Fp(3), Fp(5)
    assert (a / b) * b == a
    assert a - b == Fp(DEFAULT_MODULUS - 2)
    assert b.inverse() * b == Fp(1)
    with pytest.raises(ZeroDivisionError):
        Fp(0).inverse()
    assert Fp(DEFAULT_MODULUS - 1).symmetric() == -1


def test_parse_and_format():
    f = P("x^2 - y*z + 3")
    assert format_poly(f) == "x^2 - y*z + 3"
    assert P("2xy^2") == P("2*x*y^2")
    assert P("x^{10}") == P("x^10")
    with pytest.raises(PolyParseError):
        P("x^")
    with pytest.raises(PolyParseError):
        P("w")


def test_grevlex_leading_terms():
    assert P("x*z^2 + y^3").lm == (0, 3, 0)
    assert P("x^2 + y*z + z^2").lm == (2, 0, 0)


def test_normal_form_of_generator_is_zero():
    f = P("x^2 - y*z")
    assert normal_form(f, [f]).is_zero()


def test_normal_form_is_linear():
    G = groebner_basis([P("x^2 - y*z"), P("x*y - z^2")])
    f, g = P("x^3 + y^3"), P("x*y*z - 7*y^2")
    assert normal_form(f + g, G) == normal_form(f, G) + normal_form(g, G)


def test_elimination_reproduces_substitution():
    E = PolyRing(("t", "u", "x0", "x1", "x2"), TermOrder("elim", 2), weights=(1, 1, 2, 2, 2))
    gens = [parse_poly(s, E) for s in ("x0 - t^2", "x1 - t*u", "x2 - u^2")]
    G = groebner_basis(gens)
    r = normal_form(parse_poly("x0*x2", E), G)
    assert r == normal_form(parse_poly("t^2*u^2", E), G)
    kernel = [g for g in G if g.lm[0] == 0 and g.lm[1] == 0]
    assert len(kernel) == 1 and format_poly(kernel[0]) in ("x0*x2 - x1^2", "-x1^2 + x0*x2", "x1^2 - x0*x2")


def test_single_monomial():
    assert groebner_basis([P("x*y^2")]) == [P("x*y^2")]


def test_principal_ideal_is_made_monic():
    (g,) = groebner_basis([P("3*x^2 + y*z")])
    assert g.lc == 1 and g.scale(3) == P("3*x^2 + y*z")


def test_zero_generators_dropped():
    assert groebner_basis([R.zero()]) == []
    assert groebner_basis([R.zero(), P("x")]) == [P("x")]


def test_twisted_cubic():
    G = groebner_basis([P("x^2 - y*z"), P("x*y - z^2")])
    assert is_groebner(G) and is_reduced(G)
    assert len(G) == 3
    assert leading_monomials(G) == tuple(sorted(leading_monomials(G), key=R.key))


def test_s_polynomial_cancels_leads():
    f, g = P("x^2 - y*z"), P("x*y - z^2")
    s = s_polynomial(f, g)
    assert s.is_zero() or R.key(s.lm) < R.key((2, 1, 0))


def test_unknown_order():
    with pytest.raises(ValueError):
        TermOrder("deglex")
