"""Polynomials over Z/p, monomial orders, normal forms and reduced Gröbner bases.

Polynomials are sparse dicts from exponent tuples to residues.  Everything here
is exact; the only numerical parameter is the modulus.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import cached_property

DEFAULT_MODULUS = 32003


@dataclass(frozen=True)
class Fp:
    """A residue class modulo a prime."""

    residue: int
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _other(self, o) -> int:
        if isinstance(o, Fp):
            if o.modulus != self.modulus:
                raise ValueError("moduli differ")
            return o.residue
        return int(o)

    def __add__(self, o):
        return Fp(self.residue + self._other(o), self.modulus)

    __radd__ = __add__

    def __sub__(self, o):
        return Fp(self.residue - self._other(o), self.modulus)

    def __rsub__(self, o):
        return Fp(self._other(o) - self.residue, self.modulus)

    def __mul__(self, o):
        return Fp(self.residue * self._other(o), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.residue, self.modulus)

    def inverse(self) -> "Fp":
        if self.residue == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Fp(pow(self.residue, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, o):
        return self * Fp(self._other(o), self.modulus).inverse()

    def __eq__(self, o):
        if isinstance(o, Fp):
            return self.residue == o.residue and self.modulus == o.modulus
        if isinstance(o, int):
            return (self.residue - o) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __int__(self):
        return self.residue

    def symmetric(self) -> int:
        """Representative in (-p/2, p/2]."""
        r = self.residue
        return r - self.modulus if r > self.modulus // 2 else r


# ----------------------------------------------------------------------------
# orders


@dataclass(frozen=True)
class TermOrder:
    """kind is grevlex, lex or elim.  For elim the first `block` variables are
    eliminated: compare (weighted degree, degree in block, grevlex in block,
    grevlex in the rest).  On weighted-homogeneous input that is an elimination
    order, and the surviving elements are ordered by plain grevlex."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown order {self.kind!r}")
        if self.kind == "elim" and self.block <= 0:
            raise ValueError("elimination order needs a positive block size")

    def key_function(self, weights: tuple):
        if self.kind == "lex":
            return lambda m: m
        if self.kind == "grevlex":
            return lambda m: (sum(m),) + tuple(-e for e in reversed(m))
        b = self.block
        w = weights

        def key(m):
            first = m[:b]
            rest = m[b:]
            return (
                (sum(x * y for x, y in zip(w, m)), sum(first))
                + tuple(-e for e in reversed(first))
                + (sum(rest),)
                + tuple(-e for e in reversed(rest))
            )

        return key


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


@dataclass(frozen=True)
class PolyRing:
    names: tuple
    order: TermOrder = GREVLEX
    modulus: int = DEFAULT_MODULUS
    weights: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * len(self.names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def key(self):
        return self.order.key_function(self.weights)

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.names, order, self.modulus, self.weights)

    def poly(self, terms) -> "Poly":
        p = self.modulus
        out = {}
        for m, c in dict(terms).items():
            c = int(c) % p
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: 1})

    def var(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def monomial(self, m, c: int = 1) -> "Poly":
        return self.poly({tuple(m): c})

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def wdeg(self, m) -> int:
        return sum(x * y for x, y in zip(self.weights, m))


class Poly:
    """Sparse polynomial; terms are never zero.  Treat as immutable."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self) -> int:
        return self.terms[self.lm]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: self.ring.key(mc[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.wdeg(m) for m in self.terms}
        return len(degs) <= 1

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        p = self.ring.modulus
        inv = pow(self.lc, p - 2, p)
        return Poly(self.ring, {m: c * inv % p for m, c in self.terms.items()})

    # -- arithmetic
    def __add__(self, o: "Poly") -> "Poly":
        p = self.ring.modulus
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        p = self.ring.modulus
        return Poly(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, o: "Poly") -> "Poly":
        return self + (-o)

    def scale(self, c: int) -> "Poly":
        p = self.ring.modulus
        c %= p
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def shift(self, mono) -> "Poly":
        return Poly(self.ring, {tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()})

    def __mul__(self, o) -> "Poly":
        if isinstance(o, int):
            return self.scale(o)
        p = self.ring.modulus
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o) -> bool:
        return isinstance(o, Poly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, images: list) -> "Poly":
        """Image under x_i -> images[i] (polynomials of one common ring)."""
        target = images[0].ring
        out = target.zero()
        cache: dict = {}
        for m, c in self.terms.items():
            term = target.poly({(0,) * target.nvars: c})
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            out = out + term
        return out

    def __str__(self) -> str:
        return format_poly(self)

    __repr__ = __str__


def format_poly(f: Poly, symmetric: bool = True) -> str:
    if f.is_zero():
        return "0"
    p = f.ring.modulus
    parts = []
    for m, c in f.sorted_terms():
        if symmetric and c > p // 2:
            c -= p
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(f.ring.names, m) if e
        )
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse sums of terms like `-3*t^9*u^2`, `t^{10}u` or `2 t u^3`.

    Juxtaposition multiplies and exponents may be braced.
    """
    names = sorted(ring.names, key=len, reverse=True)
    index = {n: i for i, n in enumerate(ring.names)}
    src = re.sub(r"[\s{}]", "", text)
    if not src:
        raise PolyParseError("empty polynomial")
    if src[0] not in "+-":
        src = "+" + src
    pieces = re.findall(r"([+-])([^+-]+)", src)
    if "".join(s + b for s, b in pieces) != src:
        raise PolyParseError(f"cannot parse {text!r}")
    out = ring.zero()
    for sign, body in pieces:
        coef = 1
        exps = [0] * ring.nvars
        i = 0
        while i < len(body):
            if body[i] == "*":
                i += 1
                continue
            num = re.match(r"\d+", body[i:])
            if num:
                coef *= int(num.group())
                i += num.end()
                continue
            name = next((n for n in names if body.startswith(n, i)), None)
            if name is None:
                raise PolyParseError(f"unknown symbol in {body!r}")
            i += len(name)
            e = 1
            if i < len(body) and body[i] == "^":
                ex = re.match(r"\d+", body[i + 1:])
                if not ex:
                    raise PolyParseError(f"bad exponent in {body!r}")
                e = int(ex.group())
                i += 1 + ex.end()
            exps[index[name]] += e
        out = out + ring.poly({tuple(exps): -coef if sign == "-" else coef})
    return out


# ----------------------------------------------------------------------------
# division


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _reduce_terms(terms: dict, basis: list, ring: PolyRing, full: bool = True) -> dict:
    """Reduce a term dict by basis (list of monic Polys); returns the remainder dict."""
    p = ring.modulus
    key = ring.key
    f = dict(terms)
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    lms = [(g.lm, g) for g in basis]
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for lm, g in lms:
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                for mg, cg in g.terms.items():
                    if mg == lm:
                        continue
                    mm = tuple(a + b for a, b in zip(mg, q))
                    old = f.get(mm)
                    v = ((old or 0) - c * cg) % p
                    if v:
                        if old is None:
                            heapq.heappush(heap, (_neg(key(mm)), mm))
                        f[mm] = v
                    elif old is not None:
                        del f[mm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
    return rem


def _neg(k):
    return tuple(-x for x in k)


def normal_form(f: Poly, basis, order: TermOrder | None = None) -> Poly:
    """Fully reduced remainder of f modulo basis."""
    ring = f.ring if order is None else f.ring.with_order(order)
    gs = [ring.poly(g.terms).monic() for g in basis if not g.is_zero()]
    return Poly(ring, _reduce_terms(f.terms, gs, ring))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    ring = f.ring
    lcm = _lcm(f.lm, g.lm)
    p = ring.modulus
    a = f.shift(tuple(x - y for x, y in zip(lcm, f.lm))).scale(pow(f.lc, p - 2, p))
    b = g.shift(tuple(x - y for x, y in zip(lcm, g.lm))).scale(pow(g.lc, p - 2, p))
    return a - b


# ----------------------------------------------------------------------------
# Buchberger


def _update(polys: list, active: set, pairs: dict, h: int):
    """Gebauer-Moeller update after adding polys[h]."""
    lh = polys[h].lm
    cand = {g: _lcm(lh, polys[g].lm) for g in active}
    keep = {}
    for g, l in cand.items():
        if _coprime(lh, polys[g].lm):
            keep[g] = l
            continue
        dominated = False
        for g2, l2 in cand.items():
            if g2 != g and _divides(l2, l) and (l2 != l or g2 < g):
                if _coprime(lh, polys[g2].lm) and l2 == l:
                    continue
                dominated = True
                break
        if not dominated:
            keep[g] = l
    new_pairs = {}
    for (a, b), l in pairs.items():
        if _divides(lh, l) and _lcm(polys[a].lm, lh) != l and _lcm(polys[b].lm, lh) != l:
            continue
        new_pairs[(a, b)] = l
    for g, l in keep.items():
        if not _coprime(lh, polys[g].lm):
            new_pairs[(min(g, h), max(g, h))] = l
    new_active = {g for g in active if not _divides(lh, polys[g].lm)}
    new_active.add(h)
    return new_active, new_pairs


def groebner_basis(gens, order: TermOrder | None = None, max_degree: int | None = None) -> list:
    """Reduced Gröbner basis, monic, sorted by leading monomial (ascending).

    With max_degree set, pairs whose lcm has larger (weighted) degree are
    skipped; for homogeneous input the result is a basis up to that degree.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring if order is None else gens[0].ring.with_order(order)
    polys: list = []
    active: set = set()
    pairs: dict = {}
    for g in sorted((ring.poly(g.terms).monic() for g in gens), key=lambda q: ring.key(q.lm)):
        r = Poly(ring, _reduce_terms(g.terms, [polys[i] for i in active], ring))
        if r.is_zero():
            continue
        polys.append(r.monic())
        active, pairs = _update(polys, active, pairs, len(polys) - 1)
    while pairs:
        ij = min(pairs, key=lambda k: (ring.wdeg(pairs[k]), ring.key(pairs[k]), k))
        l = pairs.pop(ij)
        if max_degree is not None and ring.wdeg(l) > max_degree:
            continue
        s = s_polynomial(polys[ij[0]], polys[ij[1]])
        r = Poly(ring, _reduce_terms(s.terms, [polys[i] for i in active], ring))
        if r.is_zero():
            continue
        polys.append(r.monic())
        active, pairs = _update(polys, active, pairs, len(polys) - 1)
    return reduce_basis([polys[i] for i in active])


def reduce_basis(basis) -> list:
    """Minimalize and interreduce a Gröbner basis; make it monic and sorted."""
    basis = [b.monic() for b in basis if not b.is_zero()]
    if not basis:
        return []
    ring = basis[0].ring
    basis.sort(key=lambda q: ring.key(q.lm))
    minimal = []
    for b in basis:
        if not any(_divides(c.lm, b.lm) for c in minimal):
            minimal = [c for c in minimal if not _divides(b.lm, c.lm)]
            minimal.append(b)
    out = []
    for i, b in enumerate(minimal):
        others = [c for j, c in enumerate(minimal) if j != i]
        tail = {m: c for m, c in b.terms.items() if m != b.lm}
        red = _reduce_terms(tail, others, ring)
        red[b.lm] = 1
        out.append(Poly(ring, red))
    out.sort(key=lambda q: ring.key(q.lm))
    return out


def is_groebner(basis, max_degree: int | None = None) -> bool:
    """Buchberger criterion: every S-pair reduces to zero."""
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return True
    ring = basis[0].ring
    monic = [b.monic() for b in basis]
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            a, b = monic[i], monic[j]
            if _coprime(a.lm, b.lm):
                continue
            if max_degree is not None and ring.wdeg(_lcm(a.lm, b.lm)) > max_degree:
                continue
            if _reduce_terms(s_polynomial(a, b).terms, monic, ring):
                return False
    return True


def is_reduced(basis) -> bool:
    for i, b in enumerate(basis):
        if b.lc != 1:
            return False
        for j, c in enumerate(basis):
            if i != j and any(_divides(c.lm, m) for m in b.terms):
                return False
    return True


def complete_basis(basis, max_degree: int | None = None) -> list:
    """Run Buchberger starting from a partial basis (S-pairs only where needed)."""
    return groebner_basis(basis, max_degree=max_degree)


def leading_monomials(basis) -> tuple:
    return tuple(b.lm for b in basis)
