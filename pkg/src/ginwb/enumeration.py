"""Exhaustive searches over hyperplane gins, curve gins and splitting strata."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations_with_replacement
from math import comb

from .monomial import (
    MonomialIdeal,
    colength,
    cone_genus,
    parse_ideal,
    sort_key,
    times_var,
)
from .trees import (
    CURVE,
    LAMBDA,
    GeneratorTree,
    StaircaseP3,
    borel_generators,
    can_rewrite,
    children_of,
    curve_history_between,
)

# Reference classification of degree-11 hyperplane gins, with reference bounds on g+i.
REFERENCE_P4_GINS = (
    (1, "Borel(x2^4, x1*x2^2)", 8),
    (2, "Borel(x2^4, x1^2*x2, x0^2)", 9),
    (3, "Borel(x2^5, x1*x2^2, x0^2)", 10),
    (4, "Borel(x2^4, x1^3, x0*x2^2, x0*x1)", 10),
    (5, "Borel(x2^4, x1^2*x2, x0*x2^3, x0*x1)", 10),
    (6, "Borel(x2^5, x1*x2^3, x1^2*x2, x0*x2^2, x0*x1)", 11),
    (7, "Borel(x2^5, x1*x2^2, x0*x2^3, x0*x1)", 11),
    (8, "Borel(x2^4, x0*x2)", 11),
    (9, "Borel(x2^5, x1*x2^3, x1^3, x0*x2)", 13),
    (10, "Borel(x2^5, x1^2*x2, x0*x2)", 12),
)
REFERENCE_BOUND_MULTISET = (8, 9, 10, 10, 10, 11, 11, 11, 12, 13)
REFERENCE_P3_STAIRCASES = ((5, 3, 2, 1, 0), (5, 4, 2, 0))


def reference_ideals() -> list:
    return [(k, parse_ideal(lit, 3), b) for k, lit, b in REFERENCE_P4_GINS]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("GINWB_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ConstraintSet:
    ambient: str = "p4"
    colength: int = 11
    max_regularity: int | None = 5
    uniform_position: bool = True
    max_quadrics: int | None = 3
    forbid_linear: bool = True
    key_inference: bool = False
    max_high_rewrites: int | None = None
    h0_cubics: tuple | None = None
    forbid_quadrics: bool = False

    def section_hilbert_ok(self, standard) -> bool:
        """Uniform-position bound h(t) >= min(d, 3t+1) on the points' Hilbert function."""
        total = 0
        for t, s in enumerate(standard):
            total += s
            if total < min(self.colength, 3 * t + 1):
                return False
        return True


P4_DEFAULT = ConstraintSet()


@dataclass(frozen=True)
class EnumerationRecord:
    ideal: MonomialIdeal
    colength: int
    regularity: int
    cone_genus: int
    bound: int
    standard: tuple
    matches_reference: int | None = None
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "ideal": f"Borel({borel_generators(self.ideal)})",
            "generators": str(self.ideal),
            "colength": self.colength,
            "regularity": self.regularity,
            "cone_genus": self.cone_genus,
            "bound": self.bound,
            "matches_reference": self.matches_reference,
            "notes": list(self.notes),
        }


def gplusi_bound(ideal: MonomialIdeal, m: int | None = None) -> int:
    """d*m + 1 - binom(m+4, 4) + h0 of the cone ideal at twist m, m = regularity by default."""
    d = colength(ideal)
    m = ideal.max_degree() if m is None else m
    cone = ideal.extend(5)
    return d * m + 1 - comb(m + 4, 4) + cone.inside_count(m)


def make_record(ideal: MonomialIdeal) -> EnumerationRecord:
    ideal = MonomialIdeal(3, ideal.gens)
    std = tuple(ideal.standard_count(t) for t in range(ideal.max_degree() + 1))
    return EnumerationRecord(
        ideal=ideal,
        colength=sum(std),
        regularity=ideal.max_degree(),
        cone_genus=cone_genus(ideal),
        bound=gplusi_bound(ideal),
        standard=std,
    )


def _expand(ideals, max_reg):
    out = set()
    for ideal in ideals:
        for leaf in ideal.gens:
            if max_reg is not None and sum(leaf) >= max_reg:
                continue
            if can_rewrite(ideal, LAMBDA, leaf):
                out.add(_rewritten(ideal, LAMBDA, leaf))
    return out


def _rewritten(ideal: MonomialIdeal, family: str, leaf) -> MonomialIdeal:
    # no old generator is divisible by a child, since the leaf was minimal
    rest = [g for g in ideal.gens if g != leaf]
    kids = [c for c in children_of(family, leaf) if not ideal.contains_strictly(c, leaf)]
    return MonomialIdeal.trusted(ideal.nvars, rest + kids)


def _parallel_expand(frontier, expand, threads):
    frontier = sorted(frontier, key=lambda I: I.gens)
    if threads <= 1 or len(frontier) < 64:
        return expand(frontier)
    chunks = [frontier[k::threads] for k in range(threads)]
    out = set()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(expand, chunks):
            out |= part
    return out


def borel_zero_dim_ideals(length: int, max_reg: int | None = None, threads: int = 1) -> list:
    """All Borel-fixed zero-dimensional ideals of k[x0,x1,x2] with the given colength."""
    level = {MonomialIdeal(3, ((0, 0, 0),))}
    for _ in range(length):
        level = _parallel_expand(level, lambda part: _expand(part, max_reg), threads)
    return sorted(level, key=lambda I: I.gens)


def _reference_match(ideal: MonomialIdeal):
    for k, ref, _ in reference_ideals():
        if ref == ideal:
            return k
    return None


def enumerate_hyperplane_gins_p4(
    degree: int = 11, constraints: ConstraintSet = P4_DEFAULT, threads: int | None = None
) -> list:
    threads = default_threads() if threads is None else threads
    c = replace(constraints, colength=degree)
    out = []
    for ideal in borel_zero_dim_ideals(degree, c.max_regularity, threads):
        std = tuple(ideal.standard_count(t) for t in range(ideal.max_degree() + 1))
        if c.forbid_linear and ideal.gens_in_degree(1):
            continue
        if c.max_quadrics is not None and len(ideal.gens_in_degree(2)) > c.max_quadrics:
            continue
        if c.uniform_position and not c.section_hilbert_ok(std):
            continue
        rec = make_record(ideal)
        rec = replace(rec, matches_reference=_reference_match(ideal))
        out.append(rec)
    out.sort(key=lambda r: (r.bound, r.regularity, [sort_key(g) for g in r.ideal.gens]))
    return out


@dataclass(frozen=True)
class ReferenceDiff:
    matched: tuple
    missing: tuple
    extra: tuple
    bound_multiset: tuple
    reference_multiset: tuple
    notes: tuple


def diff_against_reference(records) -> ReferenceDiff:
    """Compare enumerated records against the reference classification and its bounds."""
    notes = []
    matched = tuple(sorted(r.matches_reference for r in records if r.matches_reference))
    found = {r.ideal for r in records}
    missing = []
    for k, ideal, ref_bound in reference_ideals():
        if ideal in found:
            rec = next(r for r in records if r.ideal == ideal)
            if rec.bound != ref_bound:
                notes.append(
                    f"item {k}: computed bound {rec.bound}, reference bound {ref_bound}"
                )
            continue
        missing.append(k)
        std = tuple(ideal.standard_count(t) for t in range(ideal.max_degree() + 1))
        length = sum(std)
        reasons = []
        if length != 11:
            reasons.append(f"colength {length}, not 11")
        if not P4_DEFAULT.section_hilbert_ok(std):
            hilb = [sum(std[: t + 1]) for t in range(len(std))]
            reasons.append(f"section Hilbert function {hilb} violates h(t) >= min(11, 3t+1)")
        if len(ideal.gens_in_degree(2)) > 3:
            reasons.append("more than three quadratic generators")
        if not reasons:
            reasons.append("excluded by the active constraints")
        notes.append(f"item {k} ({borel_generators(ideal)}) not recovered: " + "; ".join(reasons))
    extra = tuple(r for r in records if not r.matches_reference)
    for r in extra:
        notes.append(
            f"unlisted ideal Borel({borel_generators(r.ideal)}), standard counts {list(r.standard)},"
            f" bound {r.bound}"
        )
    return ReferenceDiff(
        matched=matched,
        missing=tuple(missing),
        extra=extra,
        bound_multiset=tuple(sorted(r.bound for r in records)),
        reference_multiset=REFERENCE_BOUND_MULTISET,
        notes=tuple(notes),
    )


# ----------------------------------------------------------------------------
# P^3


def strict_partitions(total: int, largest: int | None = None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in strict_partitions(total - first, first - 1):
            yield (first,) + rest


def enumerate_hyperplane_gins_p3(degree: int = 11, max_regularity: int = 6, gp: bool = True) -> list:
    """Borel-fixed colength-d ideals of k[x0,x1] as strictly decreasing staircases."""
    out = []
    for parts in strict_partitions(degree):
        s = StaircaseP3(parts)
        if s.regularity > max_regularity:
            continue
        if gp and not s.gp_admissible:
            continue
        out.append(s)
    out.sort(key=lambda s: s.parts, reverse=True)
    return out


# ----------------------------------------------------------------------------
# curve gins


@dataclass(frozen=True)
class CurveGinRecord:
    ideal: MonomialIdeal
    g: int
    i: int
    rewritten: frozenset
    flags: tuple = ()

    def history(self, start: MonomialIdeal):
        return curve_history_between(start, self.ideal)

    def to_json(self) -> dict:
        return {
            "ideal": f"Borel({borel_generators(self.ideal)})",
            "generators": str(self.ideal),
            "g": self.g,
            "i": self.i,
            "regularity": self.ideal.max_degree(),
            "flags": list(self.flags),
        }


def rewritten_set(start: MonomialIdeal, ideal: MonomialIdeal) -> frozenset:
    return GeneratorTree(ideal).nonleaves - GeneratorTree(start.extend(ideal.nvars)).nonleaves


def key_inference_violations(rewritten) -> tuple:
    """(count of degree-6 rewrites of pure x0,x1,x2 leaves, count of the 5-then-6 pattern)."""
    pure6 = sum(1 for m in rewritten if sum(m) == 6 and m[3] == 0)
    pattern = sum(
        1 for m in rewritten if sum(m) == 5 and m[3] == 0 and times_var(m, 3) in rewritten
    )
    return pure6, pattern


def key_inference_ok(rewritten) -> bool:
    pure6, pattern = key_inference_violations(rewritten)
    return pure6 == 0 and pattern <= 1


def key_inference_admissible(history) -> bool:
    done = frozenset(e.target for e in history.events if e.family == CURVE)
    return key_inference_ok(done)


def _h0(ideal: MonomialIdeal, d: int) -> int:
    return ideal.inside_count(d)


def enumerate_curve_gins(
    hyp: MonomialIdeal,
    budget,
    constraints: ConstraintSet = ConstraintSet(max_regularity=None, uniform_position=False),
    threads: int | None = None,
) -> list:
    """All ideals reached from the cone over hyp by the given number(s) of curve rewrites."""
    threads = default_threads() if threads is None else threads
    base = MonomialIdeal(3, hyp.gens)
    gamma = cone_genus(base)
    steps = sorted({budget} if isinstance(budget, int) else set(budget))
    if steps and steps[-1] > gamma:
        raise ValueError(f"budget {steps[-1]} exceeds the cone genus {gamma}")
    start = base.extend(5)
    max_reg = constraints.max_regularity
    lo_cubics = constraints.h0_cubics[0] if constraints.h0_cubics else None

    def viable(rewritten, cubics):
        if constraints.key_inference and not key_inference_ok(rewritten):
            return False
        if lo_cubics is not None and cubics < lo_cubics:
            return False
        return True

    def expand(part):
        out = {}
        for ideal, (rewritten, cubics) in part:
            for leaf in ideal.gens:
                if max_reg is not None and sum(leaf) >= max_reg:
                    continue
                if not can_rewrite(ideal, CURVE, leaf):
                    continue
                new = _rewritten(ideal, CURVE, leaf)
                if new in out:
                    continue
                rw = rewritten | {leaf}
                # the rewrite drops leaf * x4^k from the ideal, one cubic when deg(leaf) <= 3
                c3 = cubics - (1 if sum(leaf) <= 3 else 0)
                if viable(rw, c3):
                    out[new] = (rw, c3)
        return out

    level = {start: (frozenset(), _h0(start, 3))}
    results = []
    last = steps[-1] if steps else -1
    for step in range(last + 1):
        if step in steps:
            results.extend(_finish(level, gamma - step, constraints))
        if step == last:
            break
        items = sorted(level.items(), key=lambda kv: kv[0].gens)
        if threads <= 1 or len(items) < 64:
            level = expand(items)
        else:
            chunks = [items[k::threads] for k in range(threads)]
            merged = {}
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for part in pool.map(expand, chunks):
                    for k, v in part.items():
                        merged.setdefault(k, v)
            level = merged
    results.sort(key=lambda r: (r.g, -r.i, r.ideal.gens))
    return results


def _finish(level, g, constraints):
    out = []
    for ideal, (rewritten, _) in level.items():
        flags = []
        if constraints.forbid_quadrics and ideal.gens_in_degree(2):
            continue
        if constraints.h0_cubics is not None:
            lo, hi = constraints.h0_cubics
            if not lo <= _h0(ideal, 3) <= hi:
                continue
        if constraints.key_inference and not key_inference_ok(rewritten):
            continue
        if not key_inference_ok(rewritten):
            flags.append("key-inference-violation")
        i = sum(1 for m in rewritten if sum(m) > 5)
        out.append(CurveGinRecord(ideal, g, i, rewritten, tuple(flags)))
    return out


def max_i_given(
    hyp: MonomialIdeal,
    reg: int = 7,
    h0_cubics: tuple | None = (5, 7),
    genera=(0, 1, 2),
    key_inference: bool = True,
    forbid_quadrics: bool = True,
    threads: int | None = None,
) -> int | None:
    """Largest i among admissible curve gins over hyp with the stated side conditions."""
    base = MonomialIdeal(3, hyp.gens)
    gamma = cone_genus(base)
    budgets = sorted({gamma - g for g in genera if 0 <= gamma - g})
    cons = ConstraintSet(
        max_regularity=reg,
        uniform_position=False,
        key_inference=key_inference,
        h0_cubics=h0_cubics,
        forbid_quadrics=forbid_quadrics,
    )
    recs = enumerate_curve_gins(base, budgets, cons, threads)
    return max((r.i for r in recs), default=None)


# ----------------------------------------------------------------------------
# splitting strata and the nonproblematic test


def splitting_types(degree: int = 11, rank: int = 4, min_entry: int = 0) -> list:
    out = []
    for combo in combinations_with_replacement(range(degree, min_entry - 1, -1), rank):
        if sum(combo) == degree:
            out.append(tuple(combo))
    return sorted(set(out), reverse=True)


def rtb_codimension(a) -> int:
    return sum(max(0, x - y - 1) for i, x in enumerate(a) for j, y in enumerate(a) if i != j)


def rtb_strata(degree: int = 11, rank: int = 4, min_entry: int = 0) -> list:
    strata = [(a, rtb_codimension(a)) for a in splitting_types(degree, rank, min_entry)]
    strata.sort(key=lambda s: (s[1], [-x for x in s[0]]))
    return strata


def nonproblematic(g: int, i: int, codim: int) -> bool:
    return codim > g + i or g + i < min(2 * g, 12)


__all__ = [
    "ConstraintSet",
    "CurveGinRecord",
    "EnumerationRecord",
    "REFERENCE_BOUND_MULTISET",
    "REFERENCE_P3_STAIRCASES",
    "REFERENCE_P4_GINS",
    "borel_zero_dim_ideals",
    "diff_against_reference",
    "enumerate_curve_gins",
    "enumerate_hyperplane_gins_p3",
    "enumerate_hyperplane_gins_p4",
    "gplusi_bound",
    "key_inference_admissible",
    "key_inference_ok",
    "make_record",
    "max_i_given",
    "nonproblematic",
    "rtb_codimension",
    "rtb_strata",
    "splitting_types",
]
