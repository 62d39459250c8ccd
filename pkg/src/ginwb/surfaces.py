"""Integer intersection theory on Hirzebruch surfaces and on the plane blown up
in six points, Hilbert polynomials of complete intersections, and the linkage
arithmetic built on them.  All arithmetic is exact (ints and Fractions).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

# ----------------------------------------------------------------------------
# one-variable polynomials with rational coefficients


@dataclass(frozen=True)
class RationalPolynomial:
    """coeffs[k] is the coefficient of t^k; trailing zeros are stripped."""

    coeffs: tuple

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs) -> "RationalPolynomial":
        """Coefficients from the constant term up."""
        return cls(tuple(coeffs))

    @classmethod
    def binomial(cls, shift: int, n: int) -> "RationalPolynomial":
        """binom(t + shift, n) as a polynomial in t."""
        out = cls((1,))
        for k in range(n):
            out = out * cls((shift - k, 1))
        return out.scale(Fraction(1, math.factorial(n)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, o: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, o):
        return self + (-o)

    def scale(self, c) -> "RationalPolynomial":
        return RationalPolynomial(tuple(c * x for x in self.coeffs))

    def __mul__(self, o: "RationalPolynomial") -> "RationalPolynomial":
        if not self.coeffs or not o.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    def compose_linear(self, a, b) -> "RationalPolynomial":
        """p(a + b*s) as a polynomial in s."""
        lin = RationalPolynomial((a, b))
        out = RationalPolynomial(())
        power = RationalPolynomial((1,))
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * lin
        return out

    def __str__(self) -> str:
        return format_rational_polynomial(self)


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_rational_polynomial(p: RationalPolynomial, var: str = "t") -> str:
    """`a2*t^2 + a1*t + a0`, dropping zero terms and unit coefficients."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _frac(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_frac(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_rational_polynomial(text: str, var: str = "t") -> RationalPolynomial:
    """Inverse of the renderer; also accepts `9/2t^2` and bare juxtaposition."""
    src = text.replace(" ", "")
    if src[0] not in "+-":
        src = "+" + src
    coeffs: dict = {}
    for sign, coef, has_var, exp in re.findall(
        rf"([+-])(\d+(?:/\d+)?)?\*?({re.escape(var)})?(?:\^(\d+))?", src
    ):
        if not coef and not has_var:
            continue
        c = Fraction(coef) if coef else Fraction(1)
        k = (int(exp) if exp else 1) if has_var else 0
        coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
    n = max(coeffs) + 1 if coeffs else 0
    return RationalPolynomial(tuple(coeffs.get(k, 0) for k in range(n)))


# ----------------------------------------------------------------------------
# surfaces and divisor classes


@dataclass(frozen=True)
class SurfaceModel:
    kind: str
    basis: tuple
    pairing: tuple  # symmetric integer matrix
    canonical: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def dot(self, a, b) -> int:
        return sum(a[i] * self.pairing[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def cls(self, *coeffs) -> "DivisorClass":
        if len(coeffs) == 1 and isinstance(coeffs[0], (tuple, list)):
            coeffs = tuple(coeffs[0])
        if len(coeffs) != self.rank:
            raise ValueError(f"{self.kind} classes have {self.rank} coefficients")
        return DivisorClass(self, tuple(int(c) for c in coeffs))

    @property
    def K(self) -> "DivisorClass":
        return DivisorClass(self, self.canonical)


def hirzebruch(n: int) -> SurfaceModel:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SurfaceModel(f"F{n}", ("e", "f"), ((-n, 1), (1, 0)), (-2, -(n + 2)))


def blowup6() -> SurfaceModel:
    pairing = tuple(tuple((1 if i == j == 0 else -1 if i == j else 0) for j in range(7)) for i in range(7))
    return SurfaceModel("Bl6P2", ("l",) + tuple(f"E{i}" for i in range(1, 7)), pairing, (-3,) + (1,) * 6)


def surface(name: str) -> SurfaceModel:
    if name == "Bl6P2":
        return blowup6()
    m = re.fullmatch(r"F([0-3])", name)
    if not m:
        raise ValueError(f"unknown surface {name!r}; use F0..F3 or Bl6P2")
    return hirzebruch(int(m.group(1)))


@dataclass(frozen=True)
class DivisorClass:
    model: SurfaceModel
    coeffs: tuple

    def __add__(self, o):
        return DivisorClass(self.model, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o):
        return DivisorClass(self.model, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rmul__(self, k: int):
        return DivisorClass(self.model, tuple(k * a for a in self.coeffs))

    def dot(self, o) -> int:
        if o.model != self.model:
            raise ValueError("classes live on different surfaces")
        return self.model.dot(self.coeffs, o.coeffs)

    def __str__(self):
        if self.model.kind == "Bl6P2":
            return f"Bl6P2:({self.coeffs[0]};{','.join(str(b) for b in self.coeffs[1:])})"
        return f"{self.model.kind}:({self.coeffs[0]},{self.coeffs[1]})"


def parse_class(text: str) -> DivisorClass:
    """`F1:(4,7)` or `Bl6P2:(a;b1,...,b6)`."""
    m = re.fullmatch(r"\s*(F[0-3]|Bl6P2)\s*:\s*\(([^)]*)\)\s*", text)
    if not m:
        raise ValueError(f"cannot parse class {text!r}")
    model = surface(m.group(1))
    nums = [int(x) for x in re.split(r"[;,]", m.group(2)) if x.strip()]
    return model.cls(*nums)


@dataclass(frozen=True)
class DivisorStats:
    degree: int
    self_intersection: int
    canonical_degree: int
    genus: Fraction
    chi: Fraction

    @property
    def genus_integral(self) -> bool:
        return self.genus.denominator == 1


def divisor_stats(C: DivisorClass, H: DivisorClass) -> DivisorStats:
    """Degree C.H, C^2, adjunction genus from (K+C).C = 2g-2, and Riemann-Roch chi
    (rational surfaces, chi(O) = 1)."""
    K = C.model.K
    c2 = C.dot(C)
    kc = K.dot(C)
    genus = Fraction(kc + c2, 2) + 1
    chi = 1 + Fraction(c2 - kc, 2)
    return DivisorStats(C.dot(H), c2, kc, genus, chi)


def h0_line_bundle_fn(n: int, a: int, b: int) -> int:
    """sum_{j=0}^a max(0, b - j n + 1): sections of O(ae+bf) on F_n for a >= 0."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    return sum(max(0, b - j * n + 1) for j in range(a + 1))


def solve_classes(model: SurfaceModel, H: DivisorClass, degree: int, genera,
                  effective: bool = True, box: int | None = None) -> list:
    """All (a, b) in [0, box]^2 on F_n with C.H = degree and genus in `genera`.

    With `effective`, also C.e >= 0 and C.f >= 0.
    """
    if model.rank != 2:
        raise ValueError("solve_classes works on Hirzebruch surfaces")
    box = degree if box is None else box
    genera = set(genera)
    e, f = model.cls(1, 0), model.cls(0, 1)
    out = []
    for a in range(box + 1):
        for b in range(box + 1):
            C = model.cls(a, b)
            st = divisor_stats(C, H)
            if st.degree != degree or not st.genus_integral or int(st.genus) not in genera:
                continue
            if effective and (C.dot(e) < 0 or C.dot(f) < 0):
                continue
            out.append((a, b))
    return out


def blowup6_solutions(drop=(), b_range=(-4, 4)) -> list:
    """Classes al + sum b_i E_i solving the smooth-rational-curve system.

    Constraints by name: res1 (adjunction -2), res2 (degree 11 against
    3l - sum E_i), res3a (a >= 4), res3b (b_i <= 0), res4 (b_i >= -1).  Drop
    `res3` to drop both halves.  Solutions are reported with b sorted
    descending; the b_i range over b_range unless a kept constraint is tighter.
    """
    drop = set(drop)
    if "res3" in drop:
        drop |= {"res3a", "res3b"}
    lo, hi = b_range
    if "res3b" not in drop:
        hi = min(hi, 0)
    if "res4" not in drop:
        lo = max(lo, -1)
    out = []
    for bs in itertools.combinations_with_replacement(range(hi, lo - 1, -1), 6):
        sb = sum(bs)
        if "res2" in drop:
            a_values = range(-12, 13)
        else:
            if (11 - sb) % 3:
                continue
            a_values = [(11 - sb) // 3]
        for a in a_values:
            if "res3a" not in drop and a < 4:
                continue
            if "res1" not in drop and a * (a - 3) - sum((b + 1) * b for b in bs) != -2:
                continue
            out.append((a,) + tuple(bs))
    return sorted(out)


def normal_sheaf_bound(C: DivisorClass) -> tuple:
    """(degree bound -K.C - 2, section bound = degree bound + 1)."""
    d = -C.model.K.dot(C) - 2
    return d, d + 1


def linear_bound_in(model: SurfaceModel, build) -> tuple:
    """(constant, slope) of a -> normal-sheaf degree bound for classes build(a)."""
    b0 = normal_sheaf_bound(build(0))[0]
    b1 = normal_sheaf_bound(build(1))[0]
    return b0, b1 - b0


# ----------------------------------------------------------------------------
# Hilbert polynomials and linkage


def koszul_chi(degrees, ambient: int) -> RationalPolynomial:
    """Hilbert polynomial of a complete intersection of the given degrees in P^N."""
    degrees = tuple(degrees)
    if not 1 <= len(degrees) <= ambient:
        raise ValueError("need between 1 and N hypersurfaces")
    out = RationalPolynomial(())
    for k in range(len(degrees) + 1):
        for sub in itertools.combinations(degrees, k):
            term = RationalPolynomial.binomial(ambient - sum(sub), ambient)
            out = out + (term if k % 2 == 0 else -term)
    return out


def serre_dual_substitution(p: RationalPolynomial) -> RationalPolynomial:
    return p.compose_linear(1, -1)


def sectional_genus(chi_surface: RationalPolynomial) -> Fraction:
    return 1 - (chi_surface(0) - chi_surface(-1))


def liaison_residual_chi(chi_x: RationalPolynomial, chi_link: RationalPolynomial) -> tuple:
    """chi_S(s) = (chi_X - chi_link)(1 - s) and the sectional genus of S."""
    res = serre_dual_substitution(chi_x - chi_link)
    return res, sectional_genus(res)


PLANE_CHI = RationalPolynomial.binomial(2, 2)
QUADRIC_SURFACE_CHI = koszul_chi((1, 2), 4)
CUBIC_SCROLL_CHI = RationalPolynomial.of(1, Fraction(5, 2), Fraction(3, 2))
CUBIC_CUBIC_CHI = koszul_chi((3, 3), 4)


@dataclass(frozen=True)
class LiaisonBounds:
    ci_type: tuple
    m: int
    g: int
    gY: int
    residual_degree: int
    secant_cap: int
    genus_lower_bound: int | None
    contact_lower_bound: int
    linked_intersection: int | None = None

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def liaison_bounds(ci_type: str, m: int, g: int, gY: int = 0) -> LiaisonBounds:
    """Bounds for a degree-11 curve C with a nonreduced piece Y of degree m.

    "333": C u Y inside a (3,3,3) complete intersection in P^4 (degree 27).
    "44":  C inside a (4,4) complete intersection in P^3 (degree 16).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if ci_type in ("333", "3,3,3", (3, 3, 3)):
        degs, ambient = (3, 3, 3), 4
        total = 27
        residual = total - 11 - m  # Y'
        twist = sum(degs) - ambient - 1
        cap = 3 * residual
        # 2 g(C~) - 2 = twist * deg(C~) - deg(C~ n Y')  with deg(C~ n Y') <= cap
        g_tilde_num = twist * (11 + m) - cap + 2
        g_tilde = -((-g_tilde_num) // 2)
        contact = g_tilde - g - gY + 1
        return LiaisonBounds((3, 3, 3), m, g, gY, residual, cap, g_tilde, contact)
    if ci_type in ("44", "4,4", (4, 4)):
        degs, ambient = (4, 4), 3
        total = 16
        residual_c = total - 11
        twist = sum(degs) - ambient - 1
        linked = twist * 11 - (2 * g - 2)
        cap = 4 * (residual_c - m)
        return LiaisonBounds((4, 4), m, g, gY, residual_c - m, cap, None, linked - cap, linked)
    raise ValueError(f"unknown complete-intersection type {ci_type!r}")


# ----------------------------------------------------------------------------
# family dimensions


@dataclass(frozen=True)
class FamilyCount:
    label: str
    terms: tuple  # (description, value)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.terms)


def scroll_family_dims() -> dict:
    f0 = hirzebruch(0)
    h0_f0 = h0_line_bundle_fn(0, 1, 2)
    h0_f2 = h0_line_bundle_fn(2, 1, 3)
    curve_f2 = h0_line_bundle_fn(2, 2, 3)
    f0_types = solve_classes(f0, f0.cls(1, 2), 11, {0, 1, 2})
    out = {
        "F0_maps_to_P5": FamilyCount("maps F0 -> P5", (("6 sections x 6", 6 * h0_f0),)),
        "F0_maps_to_P4": FamilyCount("projections F0 -> P4", (("5 sections x 6", 5 * h0_f0),)),
        "F0_projected": FamilyCount(
            "projected S(2,2) scrolls",
            (("5 sections x 6", 5 * h0_f0), ("automorphisms of F0", -6)),
        ),
        "F2_maps_to_P4": FamilyCount("projections F2 -> P4", (("5 sections x 6", 5 * h0_f2),)),
        "F2_projected": FamilyCount(
            "projected S(1,3) scrolls",
            (("5 sections x 6", 5 * h0_f2), ("automorphisms of F2", -7)),
        ),
        "F2_curves_2e_3f": FamilyCount(
            "curves of class 2e+3f on projected S(1,3)",
            (("projected scrolls", 5 * h0_f2 - 7), ("h0(2e+3f)", curve_f2)),
        ),
    }
    for a, b in f0_types:
        out[f"F0_curves_{a}e_{b}f"] = FamilyCount(f"curves of type ({a},{b}) on F0", (("a+b+2", a + b + 2),))
    worst = max(a + b + 2 for a, b in f0_types) if f0_types else 0
    out["F0_curves_total"] = FamilyCount(
        "rational curves on projected S(2,2)", (("projected scrolls", 5 * h0_f0 - 6), ("largest curve family", worst))
    )
    return out


def veronese_degree_possible(degree: int) -> bool:
    """Curves on a Veronese surface have degree 2 * (plane degree)."""
    return degree % 2 == 0
