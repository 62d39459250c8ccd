"""Monomials, Borel-fixed monomial ideals and their Hilbert data.

A monomial is a plain tuple of nonnegative exponents, one per variable
x0..x(n-1).  Ideals are immutable and keep a minimal, canonically sorted
generating set, so two ideals are equal exactly when their generator tuples are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from math import comb

import numpy as np

Monomial = tuple

MAX_VARS = 5
VAR_NAMES = tuple(f"x{i}" for i in range(MAX_VARS))


class IdealError(ValueError):
    """Base class for scheme-theoretic preconditions that fail."""


class ZeroIdealError(IdealError):
    pass


class UnitIdealError(IdealError):
    pass


class NotBorelError(IdealError):
    pass


class NotSaturatedError(IdealError):
    pass


class DimensionError(IdealError):
    pass


class ParseError(ValueError):
    pass


# ----------------------------------------------------------------------------
# monomial helpers


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def times_var(m: Monomial, j: int) -> Monomial:
    e = list(m)
    e[j] += 1
    return tuple(e)


def max_var(m: Monomial) -> int:
    """Index of the last variable dividing m, or -1 for the constant monomial."""
    for j in range(len(m) - 1, -1, -1):
        if m[j]:
            return j
    return -1


def pad(m: Monomial, n: int) -> Monomial:
    if len(m) > n:
        if any(m[n:]):
            raise ValueError(f"monomial {m} does not live in {n} variables")
        return tuple(m[:n])
    return tuple(m) + (0,) * (n - len(m))


def borel_moves(m: Monomial):
    """Yield every elementary Borel move of m: one factor x_j replaced by x_i, i < j."""
    n = len(m)
    for j in range(1, n):
        if m[j]:
            for i in range(j):
                e = list(m)
                e[j] -= 1
                e[i] += 1
                yield tuple(e)


def right_moves(m: Monomial):
    """Inverse moves: one factor x_i replaced by x_j, i < j."""
    n = len(m)
    for i in range(n - 1):
        if m[i]:
            for j in range(i + 1, n):
                e = list(m)
                e[i] -= 1
                e[j] += 1
                yield tuple(e)


@lru_cache(maxsize=None)
def sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


# Packed form for fast divisibility: 6 bits per variable, the top bit a guard.
_FIELD = 6
_GUARD = sum(1 << (_FIELD * i + _FIELD - 1) for i in range(MAX_VARS))


@lru_cache(maxsize=None)
def pack(m: Monomial) -> int:
    out = 0
    for i, e in enumerate(m):
        if e >= 1 << (_FIELD - 1):
            raise OverflowError("exponent too large for packed divisibility")
        out |= e << (_FIELD * i)
    return out


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    """All degree-d monomials in n variables, in canonical order."""
    if d < 0:
        return ()
    out = []
    for c in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_array(n: int, d: int) -> np.ndarray:
    arr = np.array(monomials_of_degree(n, d), dtype=np.int16)
    return arr.reshape(-1, n)


def count_monomials(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1) if d >= 0 else 0


_TOKEN = re.compile(r"^x([0-4])(?:\^(\d+))?$")


def parse_monomial(text: str, n: int = MAX_VARS) -> Monomial:
    text = text.strip()
    if text == "1":
        return (0,) * n
    e = [0] * n
    for factor in text.split("*"):
        match = _TOKEN.match(factor.strip())
        if not match:
            raise ParseError(f"bad monomial factor {factor!r} in {text!r}")
        idx = int(match.group(1))
        if idx >= n:
            raise ParseError(f"variable x{idx} outside {n} variables")
        e[idx] += int(match.group(2) or 1)
    return tuple(e)


# ----------------------------------------------------------------------------
# ideals


def minimalize(gens) -> tuple:
    """Drop generators divisible by another generator; return them sorted canonically."""
    uniq = sorted(set(gens), key=sort_key)
    kept: list = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple = field(default=())

    def __post_init__(self):
        norm = minimalize(pad(g, self.nvars) for g in self.gens)
        object.__setattr__(self, "gens", norm)

    @classmethod
    def of(cls, nvars: int, gens) -> "MonomialIdeal":
        return cls(nvars, tuple(gens))

    @classmethod
    def trusted(cls, nvars: int, gens) -> "MonomialIdeal":
        """Build from generators already known to be minimal and padded; only sorts them."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "gens", tuple(sorted(gens, key=sort_key)))
        return obj

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.nvars, self.gens))
            self.__dict__["_hash"] = h
        return h

    @cached_property
    def _packed(self) -> tuple:
        return tuple(pack(g) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        top = pack(m) | _GUARD
        for g in self._packed:
            if (top - g) & _GUARD == _GUARD:
                return True
        return False

    def contains_strictly(self, m: Monomial, skip: Monomial) -> bool:
        """Membership using every generator except skip."""
        top = pack(m) | _GUARD
        ps = pack(skip)
        for g in self._packed:
            if g != ps and (top - g) & _GUARD == _GUARD:
                return True
        return False

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def gens_in_degree(self, d: int) -> tuple:
        return tuple(g for g in self.gens if sum(g) == d)

    def extend(self, nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, self.gens)

    def uses_only(self, k: int) -> bool:
        """True when no generator involves x_k or a later variable."""
        return all(not any(g[k:]) for g in self.gens)

    def __str__(self) -> str:
        return ", ".join(format_monomial(g) for g in self.gens)

    def literal(self) -> str:
        return str(self)

    def inside_mask(self, d: int) -> np.ndarray:
        """Boolean mask over monomials_of_degree(nvars, d): True where in the ideal."""
        mons = _monomial_array(self.nvars, d)
        if not self.gens or len(mons) == 0:
            return np.zeros(len(mons), dtype=bool)
        gens = np.array(self.gens, dtype=np.int16)
        gens = gens[gens.sum(axis=1) <= d]
        if len(gens) == 0:
            return np.zeros(len(mons), dtype=bool)
        return (mons[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)

    def inside_count(self, d: int) -> int:
        return int(self.inside_mask(d).sum())

    def standard_count(self, d: int) -> int:
        return count_monomials(self.nvars, d) - self.inside_count(d)

    def standard_monomials(self, d: int) -> tuple:
        mask = self.inside_mask(d)
        mons = monomials_of_degree(self.nvars, d)
        return tuple(m for m, inside in zip(mons, mask) if not inside)

    def hilbert_function(self, d: int) -> int:
        """Dimension of the degree-d part of the quotient ring."""
        return self.standard_count(d)


def parse_ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    """Parse `x0^2, x1*x2` or `Borel(x2^4, x1*x2^2)`.

    Without an explicit nvars, the ambient ring is the smallest that contains
    every variable mentioned, but never fewer than three variables.
    """
    text = text.strip()
    borel = False
    match = re.match(r"^Borel\s*\((.*)\)$", text, re.S)
    if match:
        borel = True
        text = match.group(1)
    pieces = [p for p in (s.strip() for s in text.split(",")) if p]
    if not pieces:
        raise ParseError("empty ideal literal")
    mons = [parse_monomial(p, MAX_VARS) for p in pieces]
    if nvars is None:
        used = max((max_var(m) for m in mons), default=-1)
        nvars = max(3, used + 1)
    mons = [pad(m, nvars) for m in mons]
    if borel:
        return borel_closure(mons, nvars)
    return MonomialIdeal(nvars, tuple(mons))


def borel_closure(gens, n: int) -> MonomialIdeal:
    """Smallest Borel-fixed ideal containing gens.  Empty input gives the zero ideal."""
    seen = set()
    stack = [pad(g, n) for g in gens]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        stack.extend(x for x in borel_moves(m) if x not in seen)
    return MonomialIdeal(n, tuple(seen))


def is_borel_fixed(ideal: MonomialIdeal) -> bool:
    return all(ideal.contains(m) for g in ideal.gens for m in borel_moves(g))


def _require_scheme(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ZeroIdealError("zero ideal defines the whole space")
    if ideal.is_unit:
        raise UnitIdealError("unit ideal defines the empty scheme")


def is_saturated(ideal: MonomialIdeal) -> bool:
    """Saturation test for Borel-fixed ideals: no generator uses the last variable."""
    if not is_borel_fixed(ideal):
        raise NotBorelError("saturation criterion needs a Borel-fixed ideal")
    last = ideal.nvars - 1
    return all(g[last] == 0 for g in ideal.gens)


def regularity(ideal: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of a saturated Borel-fixed ideal."""
    _require_scheme(ideal)
    if not is_borel_fixed(ideal):
        raise NotBorelError("regularity is read off generators only for Borel-fixed ideals")
    if not is_saturated(ideal):
        raise NotSaturatedError("ideal is not saturated")
    return ideal.max_degree()


@dataclass(frozen=True)
class GradedProfile:
    nvars: int
    inside: tuple
    standard: tuple
    colength: int | None

    @property
    def horizon(self) -> int:
        return len(self.inside) - 1


def graded_profile(ideal: MonomialIdeal, horizon: int | None = None) -> GradedProfile:
    if horizon is None:
        horizon = ideal.max_degree()
    if horizon < ideal.max_degree():
        raise ValueError("horizon below the top generator degree")
    inside = tuple(ideal.inside_count(t) for t in range(horizon + 1))
    standard = tuple(count_monomials(ideal.nvars, t) - c for t, c in enumerate(inside))
    colength = None
    if standard[-1] == 0:
        colength = sum(standard)
    elif len(standard) >= 2 and standard[-1] >= standard[-2]:
        raise DimensionError("standard counts do not decay: ideal is not zero-dimensional")
    return GradedProfile(ideal.nvars, inside, standard, colength)


def colength(ideal: MonomialIdeal) -> int:
    _require_scheme(ideal)
    prof = graded_profile(ideal, ideal.max_degree())
    if prof.colength is None:
        raise DimensionError("ideal is not zero-dimensional")
    return prof.colength


def hilbert_function_of_section(ideal: MonomialIdeal, n: int, t: int) -> int:
    """Quotient dimension in degree t after extending ideal to n variables."""
    k = ideal.nvars
    if n <= k:
        raise ValueError("ambient must have more variables than the ideal")
    if ideal.is_zero:
        return count_monomials(n, t)
    return sum(ideal.standard_count(j) * comb(t - j + n - k - 1, n - k - 1) for j in range(t + 1))


def point_cohomology(ideal: MonomialIdeal, t: int) -> tuple:
    """(h0, h1) of the twisted ideal sheaf of the points in P^3 cut out by ideal."""
    _require_scheme(ideal)
    base = MonomialIdeal(3, ideal.gens) if ideal.uses_only(3) else ideal
    d = colength(base)
    ext = base.extend(4)
    h0 = ext.inside_count(t)
    h1 = h0 - (comb(t + 3, 3) - d)
    return h0, h1


def cone_extend(ideal: MonomialIdeal, extra: int) -> MonomialIdeal:
    return ideal.extend(ideal.nvars + extra) if extra else ideal


def one_dim_degree_genus(ideal: MonomialIdeal) -> tuple:
    """(degree, arithmetic genus) read from the stable Hilbert polynomial d*t + 1 - g."""
    _require_scheme(ideal)
    start = max(ideal.max_degree(), 1)
    window = [ideal.hilbert_function(t) for t in range(start, start + 4)]
    diffs = [b - a for a, b in zip(window, window[1:])]
    if len(set(diffs)) != 1:
        raise DimensionError("Hilbert function is not linear near the regularity: dimension is not 1")
    d = diffs[0]
    if d <= 0:
        raise DimensionError("Hilbert function is constant: scheme is zero-dimensional")
    g = 1 - (window[0] - d * start)
    return d, g


def cone_genus(ideal: MonomialIdeal, ambient: int = 5) -> int:
    """Arithmetic genus of the cone over a zero-dimensional scheme, via the twist-m formula."""
    d = colength(ideal)
    m = ideal.max_degree()
    cone = ideal.extend(ambient)
    return d * m + 1 - comb(m + ambient - 1, ambient - 1) + cone.inside_count(m)
