"""Randomized properties.  Every test runs 200 examples from a fixed seed."""

import numpy as np
import pytest
from hypothesis import assume, given, seed, settings, strategies as st

from conftest import SEED
from ginwb.curves import (
    Parameterization,
    check_kernel_by_substitution,
    implicitize,
    kernel_in_degree,
)
from ginwb.fixtures import fixture_forms
from ginwb.groebner import PolyRing, groebner_basis, is_groebner, is_reduced, normal_form
from ginwb.monomial import (
    MonomialIdeal,
    borel_closure,
    colength,
    is_borel_fixed,
    monomials_of_degree,
    one_dim_degree_genus,
    point_cohomology,
)
from ginwb.trees import (
    CURVE,
    GeneratorTree,
    RewriteHistory,
    can_rewrite,
    curve_genus,
    lambda_history_to,
    rewrite_tally,
)

N = 200
MOD = 32003
RING = PolyRing(("x", "y", "z"))


@st.composite
def monomial3(draw, max_deg):
    d = draw(st.integers(1, max_deg))
    a = draw(st.integers(0, d))
    b = draw(st.integers(0, d - a))
    return (a, b, d - a - b)


@st.composite
def zero_dim_borel(draw, max_deg=5):
    """Borel-fixed ideal of finite colength in x0, x1, x2."""
    gens = draw(st.lists(monomial3(max_deg), min_size=0, max_size=4))
    top = draw(st.integers(1, max_deg))
    return borel_closure(gens + [(0, 0, top)], 3)


@seed(SEED)
@settings(max_examples=N)
@given(st.lists(monomial3(5), min_size=1, max_size=5))
def test_borel_closure_idempotent_and_minimal(gens):
    b = borel_closure(gens, 3)
    assert is_borel_fixed(b)
    assert borel_closure(b.gens, 3) == b
    assert all(b.contains(g) for g in gens)


@seed(SEED)
@settings(max_examples=N)
@given(st.lists(monomial3(4), min_size=1, max_size=4), st.lists(monomial3(4), min_size=1, max_size=3))
def test_borel_closure_monotone(a, extra):
    small, big = borel_closure(a, 3), borel_closure(a + extra, 3)
    assert all(big.contains(g) for g in small.gens)


@seed(SEED)
@settings(max_examples=N)
@given(zero_dim_borel())
def test_nonleaves_are_the_standard_monomials(ideal):
    tree = GeneratorTree(ideal)
    assert tree.nonleaf_count == colength(ideal)
    assert all(not ideal.contains(v) for v in tree.nonleaves)


@seed(SEED)
@settings(max_examples=N)
@given(zero_dim_borel())
def test_tally_matches_h1(ideal):
    hist = lambda_history_to(ideal)
    assert hist.result == ideal
    for t in range(0, 7):
        assert rewrite_tally(hist, t) == point_cohomology(ideal, t)[1]


@seed(SEED)
@settings(max_examples=N)
@given(zero_dim_borel(max_deg=4), st.data())
def test_curve_rule_drops_genus_by_one(ideal, data):
    hist = RewriteHistory(ideal, (), ideal.extend(5))
    d0, g0 = one_dim_degree_genus(hist.result)
    assert (d0, g0) == (colength(ideal), curve_genus(hist))
    for _ in range(data.draw(st.integers(1, 3))):
        cur = hist.result
        legal = [m for m in cur.gens if can_rewrite(cur, CURVE, m)]
        if not legal:
            break
        hist = hist.then(CURVE, data.draw(st.sampled_from(legal)))
        d, g = one_dim_degree_genus(hist.result)
        assert d == d0 and g == curve_genus(hist) == g0 - len(hist.events)
        assert is_borel_fixed(hist.result)


# ---------------------------------------------------------------------------


@st.composite
def quadric_systems(draw):
    mons = monomials_of_degree(3, 2)
    polys = []
    for _ in range(draw(st.integers(1, 3))):
        coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(mons), max_size=len(mons)))
        polys.append(RING.poly({m: c % MOD for m, c in zip(mons, coeffs) if c}))
    assume(any(not p.is_zero() for p in polys))
    return polys


@seed(SEED)
@settings(max_examples=N)
@given(quadric_systems(), st.randoms(use_true_random=False), st.integers(-5, 5))
def test_reduced_basis_is_unique(polys, rnd, c):
    g = groebner_basis(polys)
    assert is_groebner(g) and is_reduced(g)
    shuffled = list(polys)
    rnd.shuffle(shuffled)
    combo = shuffled[0] * RING.var(rnd.randrange(3)) + shuffled[-1].scale(c % MOD) * RING.var(0)
    assert groebner_basis(shuffled + [combo]) == g
    for p in polys:
        assert normal_form(p, g).is_zero()


@st.composite
def parameterizations(draw):
    n = draw(st.integers(3, 4))
    d = draw(st.integers(n - 1, 6))
    s = draw(st.integers(0, 2**31 - 1))
    rng = np.random.default_rng(s)
    par = Parameterization(rng.integers(0, MOD, (n, d + 1)).astype(np.int64), MOD)
    assume(par.rank == n and par.base_point_free())
    return par


@seed(SEED)
@settings(max_examples=N)
@given(parameterizations())
def test_macaulay_and_substitution(par):
    res = implicitize(par, order="elim")
    assert check_kernel_by_substitution(res, par)
    for k in range(1, 9):
        elements, _ = kernel_in_degree(par, k)
        assert len(elements) == res.initial_ideal.inside_count(k)


@pytest.mark.parametrize("name", ["aux1", "aux2", "aux3"])
def test_macaulay_on_fixtures(name):
    par = Parameterization.from_forms(fixture_forms(name))
    res = implicitize(par, order="elim")
    for k in range(1, 9):
        elements, _ = kernel_in_degree(par, k)
        assert len(elements) == res.initial_ideal.inside_count(k)
