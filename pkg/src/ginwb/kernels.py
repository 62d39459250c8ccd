"""Dense linear algebra over Z/p: row reduction, rank and nullspace.

Two interchangeable back ends compute the same reduced row echelon form.  The
compiled one uses numba; the other is vectorised numpy.  Set GINWB_DISABLE_NUMBA=1
to force numpy, e.g. when numba is missing or for benchmarking.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba ships with the environment
    _HAVE_NUMBA = False


def numba_enabled() -> bool:
    return _HAVE_NUMBA and os.environ.get("GINWB_DISABLE_NUMBA", "") not in ("1", "true", "yes")


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def _rref_numpy(mat: np.ndarray, p: int):
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * _inv_mod(a[r, c], p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if len(hit):
            a[hit] = (a[hit] - np.outer(factors[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], np.array(pivots, dtype=np.int64)


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _powmod(a, e, p):
        result = 1
        a = a % p
        while e > 0:
            if e & 1:
                result = (result * a) % p
            a = (a * a) % p
            e >>= 1
        return result

    @numba.njit(cache=True)
    def _rref_kernel(a, p):
        rows, cols = a.shape
        piv = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    tmp = a[r, j]
                    a[r, j] = a[k, j]
                    a[k, j] = tmp
            inv = _powmod(a[r, c], p - 2, p)
            for j in range(c, cols):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(rows):
                if i != r:
                    f = a[i, c]
                    if f != 0:
                        for j in range(c, cols):
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
            piv[r] = c
            r += 1
        return r, piv


def _rref_numba(mat: np.ndarray, p: int):
    a = np.ascontiguousarray(np.array(mat, dtype=np.int64) % p)
    r, piv = _rref_kernel(a, p)
    return a[:r].copy(), piv[:r].copy()


def rref_mod_p(mat, p: int, backend: str | None = None):
    """Reduced row echelon form of mat over Z/p.  Returns (nonzero rows, pivot columns)."""
    mat = np.asarray(mat, dtype=np.int64)
    if mat.ndim != 2:
        raise ValueError("expected a matrix")
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return np.zeros((0, mat.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.int64)
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        return _rref_numba(mat, p)
    return _rref_numpy(mat, p)


def rank_mod_p(mat, p: int) -> int:
    return len(rref_mod_p(mat, p)[1])


def nullspace_mod_p(mat, p: int) -> np.ndarray:
    """Basis of {v : mat v = 0}, one row per free column, that free coordinate set to 1."""
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    red, piv = rref_mod_p(mat, p)
    pivset = set(int(c) for c in piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-red[i, f]) % p
    return basis
