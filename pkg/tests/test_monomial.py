from math import comb

import pytest

from ginwb.enumeration import reference_ideals
from ginwb.monomial import (
    DimensionError,
    MonomialIdeal,
    NotBorelError,
    NotSaturatedError,
    ParseError,
    UnitIdealError,
    ZeroIdealError,
    borel_closure,
    colength,
    cone_extend,
    cone_genus,
    format_monomial,
    graded_profile,
    hilbert_function_of_section,
    is_borel_fixed,
    is_saturated,
    one_dim_degree_genus,
    parse_ideal,
    point_cohomology,
    regularity,
)
from ginwb.fixtures import AUX3_INITIAL_IDEAL
from ginwb.trees import StaircaseP3


def gens(text, n=3):
    return set(parse_ideal(text, n).gens)


def test_closure_of_a_variable_is_the_maximal_ideal():
    assert borel_closure([(0, 0, 1)], 3) == parse_ideal("x0, x1, x2")


def test_closure_of_a_square():
    assert borel_closure([(0, 2, 0)], 3) == parse_ideal("x0^2, x0*x1, x1^2")


def test_closure_prunes_to_minimal_generators():
    got = {format_monomial(m) for m in parse_ideal("Borel(x2^4, x0*x2)").gens}
    assert got == {"x0^2", "x0*x1", "x0*x2", "x1^4", "x1^3*x2", "x1^2*x2^2", "x1*x2^3", "x2^4"}


def test_empty_closure_is_zero_ideal():
    z = borel_closure([], 3)
    assert z.is_zero
    with pytest.raises(ZeroIdealError):
        colength(z)


def test_borel_fixed_checks():
    assert is_borel_fixed(parse_ideal("x0, x1, x2"))
    assert not is_borel_fixed(parse_ideal("x1^2"))
    assert not is_borel_fixed(parse_ideal(AUX3_INITIAL_IDEAL, 5))


def test_saturation():
    assert is_saturated(parse_ideal("Borel(x2^4, x1*x2^2)", 4))
    assert not is_saturated(parse_ideal("Borel(x2*x3)", 4))
    with pytest.raises(NotBorelError):
        is_saturated(parse_ideal("x1^2"))


def test_graded_profile_of_item_one():
    prof = graded_profile(parse_ideal("Borel(x2^4, x1*x2^2)"), 4)
    assert prof.standard == (1, 3, 6, 1, 0)
    assert prof.colength == 11
    for t, (a, b) in enumerate(zip(prof.inside, prof.standard)):
        assert a + b == comb(t + 2, 2)


def test_colengths():
    # described elsewhere as degree 10; the direct count is 1 + 3 + 5
    assert colength(parse_ideal("Borel(x2^3, x0^2)")) == 9
    assert colength(parse_ideal("Borel(x2^3)")) == 10
    assert colength(parse_ideal("x0, x1, x2")) == 1


def test_profile_rejects_positive_dimension():
    with pytest.raises(DimensionError):
        graded_profile(parse_ideal("x0, x1", 3), 4)


def test_regularity():
    # points in P^3: the ideals live in x0..x3
    assert regularity(parse_ideal("Borel(x2^4, x1*x2^2)", 4)) == 4
    assert regularity(parse_ideal("Borel(x2^5, x1*x2^2, x0^2)", 4)) == 5
    assert regularity(parse_ideal("x0, x1, x2", 4)) == 1
    with pytest.raises(NotSaturatedError):
        regularity(parse_ideal("Borel(x2^4, x1*x2^2)", 3))
    with pytest.raises(NotSaturatedError):
        regularity(parse_ideal("Borel(x2*x3)", 4))
    with pytest.raises(NotBorelError):
        regularity(parse_ideal("x1^2"))
    with pytest.raises(UnitIdealError):
        regularity(MonomialIdeal(3, ((0, 0, 0),)))


def test_hilbert_function_of_section():
    I = parse_ideal("Borel(x2^4, x1*x2^2)")
    assert [hilbert_function_of_section(I, 4, t) for t in range(4)] == [1, 4, 10, 11]
    item2 = parse_ideal("Borel(x2^4, x1^2*x2, x0^2)")
    assert hilbert_function_of_section(item2, 4, 3) == 12
    zero = MonomialIdeal(3, ())
    assert [hilbert_function_of_section(zero, 4, t) for t in range(6)] == [comb(t + 3, 3) for t in range(6)]


def test_point_cohomology():
    I = parse_ideal("Borel(x2^4, x1*x2^2)")
    assert point_cohomology(I, 2) == (0, 1)
    assert point_cohomology(I, 3) == (9, 0)
    assert point_cohomology(I, 12)[1] == 0


@pytest.mark.parametrize("k,ideal,_b", reference_ideals())
def test_h1_vanishes_from_regularity_minus_one(k, ideal, _b):
    r = ideal.max_degree()
    for t in range(r - 1, r + 4):
        assert point_cohomology(ideal, t)[1] == 0


def test_cone_extend():
    I = parse_ideal("Borel(x2^4, x1*x2^2)")
    cone = cone_extend(I, 2)
    assert cone.nvars == 5 and {m[:3] for m in cone.gens} == set(I.gens)
    assert all(m[3:] == (0, 0) for m in cone.gens)
    assert cone.inside_count(4) == 33
    assert cone_extend(I, 0) is I


def test_one_dim_degree_genus():
    assert one_dim_degree_genus(parse_ideal("Borel(x2^4, x1*x2^2)", 5)) == (11, 8)
    assert one_dim_degree_genus(parse_ideal("Borel(x2^4, x0*x2)", 5)) == (11, 11)
    s = StaircaseP3((5, 3, 2, 1))
    assert one_dim_degree_genus(s.ideal.extend(4)) == (11, 14)
    with pytest.raises(DimensionError):
        one_dim_degree_genus(parse_ideal("x0, x1, x2, x3", 5))


def test_cone_genus_matches_hilbert_polynomial():
    for _, I, _ in reference_ideals():
        d, g = one_dim_degree_genus(I.extend(5))
        assert (d, g) == (colength(I), cone_genus(I))


def test_literal_grammar():
    assert parse_ideal("x1*x2^2, x0^3") == MonomialIdeal(3, ((0, 1, 2), (3, 0, 0)))
    assert parse_ideal("x4").nvars == 5
    for bad in ("", "x5", "x1^", "y2", "x1**2", "Borel()"):
        with pytest.raises(ParseError):
            parse_ideal(bad)


def test_literal_roundtrip():
    I = parse_ideal("Borel(x2^5, x1*x2^3, x1^3, x0*x2)")
    assert parse_ideal(I.literal(), 3) == I
