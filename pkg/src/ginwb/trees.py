"""Generator trees of Borel-fixed ideals and the two rewriting systems on them.

A vertex is a monomial whose root path lists its variables in nondecreasing
index order; the parent of w is w / x_max(w).  Leaves are the minimal
generators, every other vertex is a standard monomial.

Rewriting a leaf m replaces it by the children m*x_j, max(m) <= j <= last,
where last is x2 for the hyperplane-section rules and x3 for the curve rules.
In ideal terms the rewritten ideal is I minus {m * x_last+1^k}, so the rule is
only legal when the result stays Borel-fixed.

The degree of a rewrite is the degree of the leaf being rewritten.  With that
convention the number of rewrites in degree > t equals h^1 of the twisted ideal
sheaf at t, for both rule systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .monomial import (
    MonomialIdeal,
    NotBorelError,
    borel_closure,
    cone_genus,
    degree,
    format_monomial,
    is_borel_fixed,
    max_var,
    pad,
    parse_monomial,
    sort_key,
    times_var,
)

LAMBDA = "L"
CURVE = "C"

# last variable a rule may glue, per family
_LAST = {LAMBDA: 2, CURVE: 3}


class RuleError(ValueError):
    pass


def rule_index(family: str, leaf) -> int:
    """Rule number whose pattern matches the leaf (the initial rule for the root)."""
    k = max_var(leaf)
    if k < 0:
        if family != LAMBDA:
            raise RuleError("the initial rule exists only for hyperplane-section trees")
        return 4
    if k > _LAST[family]:
        raise RuleError(f"leaf {format_monomial(leaf)} uses a variable the rules never glue")
    return k + 1


def children_of(family: str, leaf) -> tuple:
    start = max(max_var(leaf), 0)
    return tuple(times_var(leaf, j) for j in range(start, _LAST[family] + 1))


@dataclass(frozen=True)
class GeneratorTree:
    ideal: MonomialIdeal

    @cached_property
    def leaves(self) -> tuple:
        return self.ideal.gens

    @cached_property
    def nonleaves(self) -> frozenset:
        out = set()
        for g in self.leaves:
            w = g
            while sum(w):
                j = max_var(w)
                e = list(w)
                e[j] -= 1
                w = tuple(e)
                out.add(w)
        return frozenset(out)

    @property
    def nonleaf_count(self) -> int:
        return len(self.nonleaves)

    def children(self, v) -> tuple:
        start = max(max_var(v), 0)
        kids = []
        for j in range(start, self.ideal.nvars):
            c = times_var(v, j)
            if c in self.nonleaves or c in self.leaves:
                kids.append(c)
        return tuple(kids)

    def dump(self) -> str:
        """Indented text dump, one vertex per line: `label@degree [leaf]`."""
        leaves = set(self.leaves)
        lines = []

        def walk(v, depth):
            label = "root" if not sum(v) else f"x{max_var(v)}"
            tag = " [leaf]" if v in leaves else ""
            lines.append(f"{'  ' * depth}{label}@{degree(v)}{tag}")
            for c in self.children(v):
                walk(c, depth + 1)

        walk((0,) * self.ideal.nvars, 0)
        return "\n".join(lines)


def tree_of(ideal: MonomialIdeal) -> GeneratorTree:
    if not is_borel_fixed(ideal):
        raise NotBorelError("trees exist only for Borel-fixed ideals")
    if ideal.is_zero:
        raise RuleError("the zero ideal has no generator tree")
    return GeneratorTree(ideal)


def ideal_of(tree: GeneratorTree) -> MonomialIdeal:
    return MonomialIdeal(tree.ideal.nvars, tuple(tree.leaves))


def empty_tree(nvars: int = 3) -> GeneratorTree:
    """The tree whose root is its only leaf, i.e. the unit ideal."""
    return GeneratorTree(MonomialIdeal(nvars, ((0,) * nvars,)))


def rewrite(ideal: MonomialIdeal, family: str, leaf, check_borel: bool = True) -> MonomialIdeal:
    leaf = tuple(leaf)
    if leaf not in ideal.gens:
        raise RuleError(f"{format_monomial(leaf)} is not a leaf")
    rule_index(family, leaf)
    kids = children_of(family, leaf)
    gens = [g for g in ideal.gens if g != leaf] + list(kids)
    out = MonomialIdeal(ideal.nvars, tuple(gens))
    if check_borel and not is_borel_fixed(out):
        raise RuleError(f"rewriting {format_monomial(leaf)} breaks Borel-fixedness")
    return out


def can_rewrite(ideal: MonomialIdeal, family: str, leaf) -> bool:
    """Borel test for a rewrite without building the new ideal.

    The rewrite removes exactly the leaf from the degree-deg(leaf) part, so it is
    legal iff no other monomial of the ideal moves onto the leaf.  That only
    needs the right moves of the leaf that stay inside the glued variables.
    """
    last = _LAST[family]
    if max_var(leaf) > last:
        return False
    n = ideal.nvars
    for i in range(n):
        if leaf[i]:
            for j in range(i + 1, last + 1):
                e = list(leaf)
                e[i] -= 1
                e[j] += 1
                if ideal.contains(tuple(e)):
                    return False
    return True


def apply_lambda(tree: GeneratorTree, leaf, rule: int) -> GeneratorTree:
    leaf = tuple(leaf)
    if rule != rule_index(LAMBDA, leaf):
        raise RuleError(f"rule {rule} does not match leaf {format_monomial(leaf)}")
    return GeneratorTree(rewrite(tree.ideal, LAMBDA, leaf))


def apply_c(tree: GeneratorTree, leaf, rule: int) -> GeneratorTree:
    leaf = tuple(leaf)
    if sum(leaf) == 0:
        raise RuleError("curve rules never apply at the root")
    if rule != rule_index(CURVE, leaf):
        raise RuleError(f"rule {rule} does not match leaf {format_monomial(leaf)}")
    ideal = tree.ideal if tree.ideal.nvars >= 5 else tree.ideal.extend(5)
    return GeneratorTree(rewrite(ideal, CURVE, pad(leaf, ideal.nvars)))


@dataclass(frozen=True)
class RewriteEvent:
    family: str
    rule: int
    target: tuple
    degree: int

    def as_triple(self) -> tuple:
        return (self.family, self.rule, format_monomial(self.target))


@dataclass(frozen=True)
class RewriteHistory:
    initial: MonomialIdeal
    events: tuple = field(default=())
    result: MonomialIdeal | None = None

    def __post_init__(self):
        if self.result is None:
            object.__setattr__(self, "result", replay(self.initial, self.events))

    def then(self, family: str, leaf) -> "RewriteHistory":
        leaf = tuple(leaf)
        cur = self.result
        if family == CURVE and cur.nvars < 5:
            cur = cur.extend(5)
        leaf = pad(leaf, cur.nvars)
        new = rewrite(cur, family, leaf)
        ev = RewriteEvent(family, rule_index(family, leaf), leaf, degree(leaf))
        return RewriteHistory(self.initial, self.events + (ev,), new)

    def serialize(self) -> list:
        return [list(e.as_triple()) for e in self.events]

    @classmethod
    def deserialize(cls, initial: MonomialIdeal, triples) -> "RewriteHistory":
        hist = cls(initial)
        for family, rule, target in triples:
            n = hist.result.nvars if family == LAMBDA else max(hist.result.nvars, 5)
            leaf = parse_monomial(target, n)
            if rule_index(family, leaf) != int(rule):
                raise RuleError(f"rule {rule} does not match {target}")
            hist = hist.then(family, leaf)
        return hist


def replay(initial: MonomialIdeal, events) -> MonomialIdeal:
    cur = initial
    for ev in events:
        if ev.family == CURVE and cur.nvars < 5:
            cur = cur.extend(5)
        cur = rewrite(cur, ev.family, ev.target)
    return cur


def rewrite_tally(history: RewriteHistory, threshold: int) -> int:
    """Number of rewrites in degree greater than threshold."""
    return sum(1 for e in history.events if e.degree > threshold)


def curve_genus(history: RewriteHistory) -> int:
    start = history.initial
    base = MonomialIdeal(3, start.gens) if start.uses_only(3) else start
    n_curve = sum(1 for e in history.events if e.family == CURVE)
    return cone_genus(base) - n_curve


def _build_key(m):
    return (sum(m), m)


def lambda_history_to(target: MonomialIdeal) -> RewriteHistory:
    """A canonical hyperplane-section history that builds target from the empty tree.

    Standard monomials are made nonleaves by degree, then ascending exponent
    tuple.  Right moves are lex-smaller, so every prefix of that order is a
    Borel-fixed order ideal and each step is legal.
    """
    base = MonomialIdeal(3, target.gens)
    tree = GeneratorTree(base)
    order = sorted(tree.nonleaves, key=_build_key)
    hist = RewriteHistory(MonomialIdeal(3, ((0, 0, 0),)))
    for v in order:
        hist = hist.then(LAMBDA, v)
    if hist.result != base:
        raise RuleError("target is not reachable by hyperplane-section rules")
    return hist


def curve_history_between(start: MonomialIdeal, target: MonomialIdeal) -> RewriteHistory:
    """A curve-rule history from a hyperplane gin (as a cone) to a curve gin."""
    s = start.extend(5)
    t = target.extend(5) if target.nvars < 5 else target
    rewritten = GeneratorTree(t).nonleaves - GeneratorTree(s).nonleaves
    base = MonomialIdeal(3, start.gens) if start.uses_only(3) else start
    hist = RewriteHistory(base, (), s)
    for v in sorted(rewritten, key=_build_key):
        hist = hist.then(CURVE, v)
    if hist.result != t:
        raise RuleError("target is not reachable from start by curve rules")
    return hist


# ----------------------------------------------------------------------------
# staircases in two variables (curves in P^3)


@dataclass(frozen=True)
class StaircaseP3:
    """lam[a] = number of standard monomials x0^a * x1^b; strictly decreasing for Borel ideals."""

    lam: tuple

    @property
    def parts(self) -> tuple:
        return tuple(x for x in self.lam if x > 0)

    @property
    def degree(self) -> int:
        return sum(self.lam)

    @property
    def gp_admissible(self) -> bool:
        seq = self.parts + (0,)
        return all(a - 1 >= b >= a - 2 for a, b in zip(seq, seq[1:]))

    @property
    def ideal(self) -> MonomialIdeal:
        parts = self.parts
        gens = [(a, lam) for a, lam in enumerate(parts)] + [(len(parts), 0)]
        return MonomialIdeal(2, tuple(gens))

    @property
    def regularity(self) -> int:
        return self.ideal.max_degree()

    @property
    def cone_genus(self) -> int:
        return cone_genus(self.ideal, ambient=4)

    def label(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts + (0,)) + ")"


def staircase_ops(lam) -> dict:
    s = StaircaseP3(tuple(lam))
    ideal = s.ideal
    return {
        "degree": s.degree,
        "gp_admissible": s.gp_admissible,
        "ideal": ideal,
        "borel": str(borel_generators(ideal)),
        "cone_genus": s.cone_genus,
    }


def borel_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    """A small generating set whose Borel closure is the ideal."""
    keep = list(ideal.gens)
    for g in sorted(ideal.gens, key=sort_key):
        rest = [h for h in keep if h != g]
        if rest and borel_closure(rest, ideal.nvars).contains(g):
            keep = rest
    return MonomialIdeal(ideal.nvars, tuple(keep))
