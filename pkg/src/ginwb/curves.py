"""Rational curves P^1 -> P^n given by binary forms: kernels, initial ideals,
image degree and genus, syzygy degrees and splitting types.

The kernel in degree k is the nullspace of the evaluation matrix that sends a
monomial in x0..xn to its product of forms.  Ordering columns by ascending
grevlex makes the non-pivot columns exactly the grevlex leading monomials of
the kernel, and the reduced echelon form already gives the reduced basis
element for each of them.  Buchberger then certifies the result in higher
degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groebner import (
    DEFAULT_MODULUS,
    GREVLEX,
    Poly,
    PolyRing,
    TermOrder,
    groebner_basis,
    is_groebner,
)
from .kernels import nullspace_mod_p, rank_mod_p, rref_mod_p
from .monomial import MonomialIdeal, count_monomials, monomials_of_degree, one_dim_degree_genus


class ParameterizationError(ValueError):
    pass


class BasePointError(ParameterizationError):
    pass


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def target_ring(n: int, modulus: int = DEFAULT_MODULUS) -> PolyRing:
    return PolyRing(tuple(f"x{i}" for i in range(n)), GREVLEX, modulus)


@dataclass(frozen=True)
class Parameterization:
    """Binary forms of one degree d; coefficient of t^j u^(d-j) sits in column j."""

    coeffs: np.ndarray
    modulus: int = DEFAULT_MODULUS

    @classmethod
    def from_forms(cls, forms, modulus: int | None = None) -> "Parameterization":
        forms = list(forms)
        if not forms:
            raise ParameterizationError("no forms given")
        p = modulus or forms[0].ring.modulus
        degs = set()
        for f in forms:
            degs |= {sum(m) for m in f.terms}
        if len(degs) > 1:
            raise ParameterizationError("forms must be homogeneous of one common degree")
        if not degs:
            raise ParameterizationError("all forms are zero")
        d = degs.pop()
        mat = np.zeros((len(forms), d + 1), dtype=np.int64)
        for i, f in enumerate(forms):
            for (a, b), c in f.terms.items():
                mat[i, a] = c % p
        return cls(mat, p)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def count(self) -> int:
        return self.coeffs.shape[0]

    @property
    def rank(self) -> int:
        return rank_mod_p(self.coeffs, self.modulus)

    def forms(self) -> list:
        ring = PolyRing(("t", "u"), modulus=self.modulus)
        d = self.degree
        return [ring.poly({(j, d - j): int(c) for j, c in enumerate(row) if c}) for row in self.coeffs]

    def check(self) -> None:
        if self.rank < 2:
            raise ParameterizationError("forms are proportional: the map is constant")
        if not self.base_point_free():
            raise BasePointError("forms share a common factor (the map has base points)")

    def base_point_free(self) -> bool:
        """No common zero on P^1 iff the forms span every form of degree 2d-1."""
        d = self.degree
        if d == 0:
            return bool(self.coeffs.any())
        return self.multiples_rank(2 * d - 1) == 2 * d

    def multiples_rank(self, e: int) -> int:
        return rank_mod_p(multiplication_matrix(self.coeffs, e, self.modulus), self.modulus)

    def evaluation_matrix(self, k: int, monomials) -> np.ndarray:
        """Columns: coefficient vectors of the product of forms for each monomial."""
        p = self.modulus
        d = self.degree
        cache = {(0,) * self.count: np.ones(1, dtype=np.int64)}

        def value(m):
            v = cache.get(m)
            if v is None:
                j = max(i for i, e in enumerate(m) if e)
                parent = m[:j] + (m[j] - 1,) + m[j + 1:]
                v = np.convolve(value(parent), self.coeffs[j]) % p
                cache[m] = v
            return v

        mat = np.zeros((d * k + 1, len(monomials)), dtype=np.int64)
        for c, m in enumerate(monomials):
            mat[:, c] = value(m)
        return mat


def multiplication_matrix(coeffs: np.ndarray, e: int, p: int) -> np.ndarray:
    """Matrix of (h_0..h_r) -> sum h_i f_i from forms of degree e-d to degree e."""
    r, dp1 = coeffs.shape
    d = dp1 - 1
    s = e - d
    if s < 0:
        return np.zeros((e + 1, 0), dtype=np.int64)
    mat = np.zeros((e + 1, r * (s + 1)), dtype=np.int64)
    for i in range(r):
        for j in range(s + 1):
            mat[j:j + d + 1, i * (s + 1) + j] = coeffs[i]
    return mat % p


# ----------------------------------------------------------------------------
# implicitization


@dataclass
class KernelResult:
    ring: PolyRing
    basis: list
    initial_ideal: MonomialIdeal
    degree_bound: int
    kernel_dims: dict = field(default_factory=dict)
    certified: bool = False
    order: str = "grevlex"

    def generator_degrees(self) -> tuple:
        return tuple(sorted(sum(g) for g in self.initial_ideal.gens))

    def max_generator_degree(self) -> int:
        return self.initial_ideal.max_degree()


def regularity_bound(param: Parameterization) -> int:
    """d - n + 2 for a nondegenerate curve in P^n, n = rank - 1."""
    return max(param.degree - param.rank + 3, 2)


def kernel_in_degree(param: Parameterization, k: int):
    """(reduced kernel elements keyed by leading monomial, standard monomials)."""
    monos = sorted(monomials_of_degree(param.count, k), key=_grevlex_key)
    mat = param.evaluation_matrix(k, monos)
    red, piv = rref_mod_p(mat, param.modulus)
    p = param.modulus
    pivset = set(int(c) for c in piv)
    elements = {}
    for c, m in enumerate(monos):
        if c in pivset:
            continue
        terms = {m: 1}
        for i, pc in enumerate(piv):
            v = int(red[i, c])
            if v:
                terms[monos[int(pc)]] = (-v) % p
        elements[m] = terms
    standard = tuple(monos[int(c)] for c in piv)
    return elements, standard


def implicitize(forms, order: str = "grevlex", degree_bound: int | None = None,
                certify: bool = True) -> KernelResult:
    """Reduced grevlex Gröbner basis of the kernel of k[x0..xn] -> k[t,u].

    order="grevlex" uses degree-by-degree linear algebra up to the regularity
    bound and completes with Buchberger; order="elim" eliminates t,u from the
    graph ideal with a block order.
    """
    param = forms if isinstance(forms, Parameterization) else Parameterization.from_forms(forms)
    param.check()
    if order == "elim":
        return _implicitize_elim(param)
    if order != "grevlex":
        raise ValueError(f"unknown order {order!r}")
    ring = target_ring(param.count, param.modulus)
    bound = degree_bound if degree_bound is not None else regularity_bound(param)
    lead: list = []
    basis = []
    dims = {}
    for k in range(1, bound + 1):
        elements, _ = kernel_in_degree(param, k)
        dims[k] = len(elements)
        ideal_so_far = MonomialIdeal(param.count, tuple(lead)) if lead else None
        for m in sorted(elements, key=_grevlex_key):
            if ideal_so_far is not None and ideal_so_far.contains(m):
                continue
            lead.append(m)
            basis.append(Poly(ring, elements[m]))
    if certify:
        # every S-pair of degree <= bound already reduces to zero by construction
        complete = groebner_basis(basis) if not is_groebner(basis) else basis
        certified = True
    else:
        complete, certified = basis, False
    complete.sort(key=lambda q: ring.key(q.lm))
    initial = MonomialIdeal(param.count, tuple(g.lm for g in complete))
    return KernelResult(ring, complete, initial, bound, dims, certified, "grevlex")


def _implicitize_elim(param: Parameterization) -> KernelResult:
    n = param.count
    d = param.degree
    names = ("t", "u") + tuple(f"x{i}" for i in range(n))
    ring = PolyRing(names, TermOrder("elim", 2), param.modulus, (1, 1) + (d,) * n)
    gens = []
    for i, row in enumerate(param.coeffs):
        terms = {(j, d - j) + (0,) * n: (-int(c)) % param.modulus for j, c in enumerate(row) if c}
        x = [0] * n
        x[i] = 1
        terms[(0, 0) + tuple(x)] = 1
        gens.append(ring.poly(terms))
    full = groebner_basis(gens)
    target = target_ring(n, param.modulus)
    basis = [Poly(target, {m[2:]: c for m, c in g.terms.items()}) for g in full if g.lm[0] == 0 and g.lm[1] == 0]
    basis.sort(key=lambda q: target.key(q.lm))
    initial = MonomialIdeal(n, tuple(g.lm for g in basis))
    return KernelResult(target, basis, initial, regularity_bound(param), {}, True, "elim")


def check_kernel_by_substitution(result: KernelResult, forms) -> bool:
    param = forms if isinstance(forms, Parameterization) else Parameterization.from_forms(forms)
    fs = param.forms()
    return all(g.substitute(fs).is_zero() for g in result.basis)


def image_degree_genus(result: KernelResult) -> tuple:
    """(degree, arithmetic genus) of the image, read off the initial ideal."""
    ideal = result.initial_ideal
    d, g = one_dim_degree_genus(ideal)
    # confirm the Hilbert function has settled well past the window used above
    far = ideal.max_degree() + 12
    if ideal.hilbert_function(far) != d * far + 1 - g:
        raise ValueError("Hilbert function has not reached its polynomial")
    return d, g


def ideal_dimension_in_degree(basis, k: int, nvars: int, modulus: int) -> int:
    """dim of the degree-k part of the ideal generated by homogeneous basis elements."""
    monos = monomials_of_degree(nvars, k)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in basis:
        dg = g.degree()
        if dg > k:
            continue
        for s in monomials_of_degree(nvars, k - dg):
            row = np.zeros(len(monos), dtype=np.int64)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, s))]] = c
            rows.append(row)
    if not rows:
        return 0
    return rank_mod_p(np.array(rows), modulus)


# ----------------------------------------------------------------------------
# syzygies of binary forms


@dataclass(frozen=True)
class SyzygyRecord:
    form_degree: int
    count: int
    degrees: tuple

    @property
    def splitting(self) -> tuple:
        return tuple(sorted((e - self.form_degree for e in self.degrees), reverse=True))

    def betti_rows(self) -> dict:
        """Row index -> (column 0, column 1, column 2) counts."""
        rows: dict = {0: [1, 0, 0]}
        rows.setdefault(self.form_degree - 1, [0, 0, 0])[1] += self.count
        for e in self.degrees:
            rows.setdefault(e - 2, [0, 0, 0])[2] += 1
        return {k: tuple(v) for k, v in sorted(rows.items())}

    def betti_text(self) -> str:
        rows = self.betti_rows()
        total = (1, self.count, len(self.degrees))
        lines = ["total: " + " ".join(str(x) for x in total)]
        width = len(str(max(rows)))
        for r, vals in rows.items():
            cells = " ".join("." if v == 0 else str(v) for v in vals)
            lines.append(f"{r:>{width}}: {cells}")
        return "\n".join(lines)


def syzygy_dimension(param: Parameterization, e: int) -> int:
    mat = multiplication_matrix(param.coeffs, e, param.modulus)
    return mat.shape[1] - rank_mod_p(mat, param.modulus) if mat.shape[1] else 0


def syzygy_degrees(param: Parameterization) -> tuple:
    """Minimal generator degrees of the syzygy module, a free module of rank r-1.

    In degree e the count of new generators is the second difference of
    dim Syz_e, since a free generator of degree c contributes e - c + 1.
    """
    d = param.degree
    r = param.count
    out = []
    prev2 = prev1 = 0
    for e in range(d, 2 * d + 2):
        cur = syzygy_dimension(param, e)
        new = cur - 2 * prev1 + prev2
        out.extend([e] * new)
        prev2, prev1 = prev1, cur
        if len(out) >= r - 1:
            break
    return tuple(out)


def syzygy_splitting_type(forms) -> tuple:
    param = forms if isinstance(forms, Parameterization) else Parameterization.from_forms(forms)
    if param.rank < param.count:
        raise ParameterizationError("forms are linearly dependent")
    if not param.base_point_free():
        raise BasePointError("forms share a common factor (the map has base points)")
    degs = syzygy_degrees(param)
    rec = SyzygyRecord(param.degree, param.count, degs)
    if len(degs) != param.count - 1 or sum(rec.splitting) != param.degree:
        raise ArithmeticError("syzygy module is not free of the expected rank")
    return rec, rec.splitting


# ----------------------------------------------------------------------------
# linear systems from formal relations


@dataclass(frozen=True)
class ConstraintSolution:
    rank: int
    nullity: int
    representative: tuple  # flat coefficient vector a_{i,j}, index i*(d+1)+j
    form_degree: int
    count: int
    modulus: int

    def forms(self) -> list:
        ring = PolyRing(("t", "u"), modulus=self.modulus)
        d = self.form_degree
        out = []
        for i in range(self.count):
            row = self.representative[i * (d + 1):(i + 1) * (d + 1)]
            out.append(ring.poly({(j, d - j): c for j, c in enumerate(row) if c}))
        return out


def constraint_matrix(relations, d: int, count: int, modulus: int) -> np.ndarray:
    rows = []
    for rel in relations:
        if len(rel) != count:
            raise ValueError(f"relation has {len(rel)} coefficients, expected {count}")
        degs = set()
        for c in rel:
            degs |= {sum(m) for m in c.terms}
        if len(degs) > 1:
            raise ValueError("coefficient forms of a relation must share one degree")
        if not degs:
            continue
        e = degs.pop()
        block = np.zeros((d + e + 1, count * (d + 1)), dtype=np.int64)
        for i, c in enumerate(rel):
            for (a, _b), v in c.terms.items():
                for j in range(d + 1):
                    block[a + j, i * (d + 1) + j] += v
        rows.append(block % modulus)
    if not rows:
        return np.zeros((0, count * (d + 1)), dtype=np.int64)
    return np.vstack(rows)


def solve_syzygy_constraints(relations, d: int, count: int = 5,
                             modulus: int = DEFAULT_MODULUS) -> ConstraintSolution:
    """Rank and nullity of the conditions sum c_k f_k = 0 on the coefficients of f_k."""
    mat = constraint_matrix(list(relations), d, count, modulus)
    n = count * (d + 1)
    rank = rank_mod_p(mat, modulus) if mat.shape[0] else 0
    if mat.shape[0]:
        null = nullspace_mod_p(mat, modulus)
    else:
        null = np.eye(n, dtype=np.int64)
    rep = tuple(int(x) for x in null[0]) if len(null) else (0,) * n
    return ConstraintSolution(rank, n - rank, rep, d, count, modulus)


def proportional(u, v, modulus: int) -> bool:
    """u = c v for a nonzero scalar c."""
    u = np.asarray(u, dtype=np.int64) % modulus
    v = np.asarray(v, dtype=np.int64) % modulus
    if not u.any() or not v.any():
        return not u.any() and not v.any()
    k = int(np.nonzero(v)[0][0])
    if u[k] == 0:
        return False
    c = int(u[k]) * pow(int(v[k]), modulus - 2, modulus) % modulus
    return bool(np.all((v * c - u) % modulus == 0))


def forms_vector(forms, d: int, modulus: int) -> np.ndarray:
    out = np.zeros(len(forms) * (d + 1), dtype=np.int64)
    for i, f in enumerate(forms):
        for (a, _b), c in f.terms.items():
            out[i * (d + 1) + a] = c % modulus
    return out
