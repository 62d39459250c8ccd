import numpy as np
from hypothesis import given, seed, settings, strategies as st

from conftest import SEED

from ginwb.kernels import nullspace_mod_p, rank_mod_p, rref_mod_p

P = 32003


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 12))
    cols = draw(st.integers(1, 12))
    rank = draw(st.integers(0, min(rows, cols)))
    seed = draw(st.integers(0, 2**31 - 1))
    rng = np.random.default_rng(seed)
    a = rng.integers(0, P, (rows, rank)) @ rng.integers(0, P, (rank, cols)) if rank else np.zeros((rows, cols))
    return np.asarray(a, dtype=np.int64) % P, rank


@seed(SEED)
@settings(max_examples=200)
@given(matrices())
def test_backends_agree(case):
    a, _ = case
    ra, pa = rref_mod_p(a, P, backend="numpy")
    rb, pb = rref_mod_p(a, P, backend="numba")
    assert np.array_equal(ra, rb) and np.array_equal(pa, pb)


@seed(SEED)
@settings(max_examples=200)
@given(matrices())
def test_rank_and_nullspace(case):
    a, r = case
    rank = rank_mod_p(a, P)
    # a product of random factors has full rank r with overwhelming probability
    assert rank <= r
    ns = nullspace_mod_p(a, P)
    assert ns.shape[0] == a.shape[1] - rank
    if ns.size:
        assert not np.any((a @ ns.T) % P)


def test_reduced_form_shape():
    a = np.array([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    red, piv = rref_mod_p(a, 7)
    assert list(piv) == [0, 1]
    assert red[0, 0] == 1 and red[0, 1] == 0 and red[1, 1] == 1


def test_empty():
    red, piv = rref_mod_p(np.zeros((0, 3), dtype=np.int64), 5)
    assert red.shape == (0, 3) and len(piv) == 0
