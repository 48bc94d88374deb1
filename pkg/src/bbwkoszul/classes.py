"""Formal direct sums of irreducible homogeneous bundles and their calculus.

Tensor products run Littlewood-Richardson on the quotient side (negative
entries handled by a uniform determinant pre-shift, products truncated to
the quotient rank) and Clebsch-Gordan on the rank-2 subbundle side (plain
addition when the subbundle is a line). Cohomology of a class is the
multiplicity-weighted union over its summands.

Displayed decompositions in the source material trivialize det V; the
engine never does. ``det_shift`` / ``equal_mod_det`` is the single point
where classes are compared up to a uniform determinant twist.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from .bbw import (
    Bundle,
    CohomologyProfile,
    Grassmannian,
    bbw_cohomology,
    bundle_rank,
    canonical_bundle,
    validate_bundle,
)
from .gl2 import gl2_tensor, wedge_power_gl2
from .weights import Weight, littlewood_richardson


class EquivariantClass:
    """Non-negative integer combination of irreducible homogeneous bundles."""

    __slots__ = ("ctx", "_summands")

    def __init__(self, ctx: Grassmannian, summands: Mapping[Bundle, int] | None = None):
        self.ctx = ctx
        store: dict[Bundle, int] = {}
        for b, m in (summands or {}).items():
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                bundle = Bundle(tuple(b.lam_q), tuple(b.mu_s))
                validate_bundle(ctx, bundle)
                store[bundle] = store.get(bundle, 0) + m
        self._summands = store

    @classmethod
    def irreducible(cls, ctx: Grassmannian, lam_q, mu_s) -> "EquivariantClass":
        return cls(ctx, {Bundle(tuple(lam_q), tuple(mu_s)): 1})

    @classmethod
    def trivial(cls, ctx: Grassmannian) -> "EquivariantClass":
        return cls.irreducible(ctx, (0,) * ctx.quotient_rank, (0,) * ctx.k)

    @classmethod
    def empty(cls, ctx: Grassmannian) -> "EquivariantClass":
        return cls(ctx)

    def summands(self) -> dict[Bundle, int]:
        return dict(self._summands)

    @property
    def is_empty(self) -> bool:
        return not self._summands

    def rank(self) -> int:
        return sum(m * bundle_rank(self.ctx, b) for b, m in self._summands.items())

    def scaled(self, mult: int) -> "EquivariantClass":
        if mult < 0:
            raise ValueError("negative multiplicity")
        return EquivariantClass(
            self.ctx, {b: m * mult for b, m in self._summands.items()}
        )

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        self._check_ctx(other)
        total = Counter(self._summands)
        total.update(other._summands)
        return EquivariantClass(self.ctx, total)

    def dual(self) -> "EquivariantClass":
        return EquivariantClass(
            self.ctx, {b.dual(): m for b, m in self._summands.items()}
        )

    def shifted(self, t: int) -> "EquivariantClass":
        return EquivariantClass(
            self.ctx, {b.shifted(t): m for b, m in self._summands.items()}
        )

    def tensor(self, other: "EquivariantClass") -> "EquivariantClass":
        self._check_ctx(other)
        total: Counter[Bundle] = Counter()
        for b1, m1 in self._summands.items():
            for b2, m2 in other._summands.items():
                for b, m in _tensor_bundles(self.ctx, b1, b2).items():
                    total[b] += m1 * m2 * m
        return EquivariantClass(self.ctx, total)

    __mul__ = tensor

    def cohomology(self) -> CohomologyProfile:
        profile = CohomologyProfile(self.ctx.n)
        for b, m in self._summands.items():
            profile = profile.merged(bbw_cohomology(self.ctx, b), m)
        return profile

    def euler_characteristic(self) -> int:
        return self.cohomology().euler_characteristic()

    def _check_ctx(self, other: "EquivariantClass") -> None:
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EquivariantClass)
            and self.ctx == other.ctx
            and self._summands == other._summands
        )

    def __repr__(self) -> str:
        if self.is_empty:
            return f"EquivariantClass({self.ctx}, 0)"
        body = " + ".join(
            (f"{m}*" if m > 1 else "") + f"Q{b.lam_q}·S{b.mu_s}"
            for b, m in sorted(self._summands.items())
        )
        return f"EquivariantClass({self.ctx}, {body})"


def _q_tensor(ctx: Grassmannian, la: Weight, lb: Weight) -> Counter[Weight]:
    """Quotient-side product: shift to partitions, LR, truncate, unshift."""
    r = ctx.quotient_rank
    ta = max(0, -la[-1])
    tb = max(0, -lb[-1])
    pa = tuple(x + ta for x in la)
    pb = tuple(x + tb for x in lb)
    out: Counter[Weight] = Counter()
    for nu, c in littlewood_richardson(pa, pb).items():
        if len(nu) > r:
            continue  # rank-zero Schur functor of Q
        padded = nu + (0,) * (r - len(nu))
        out[tuple(x - ta - tb for x in padded)] += c
    return out


def _tensor_bundles(ctx: Grassmannian, b1: Bundle, b2: Bundle) -> Counter[Bundle]:
    q_part = _q_tensor(ctx, b1.lam_q, b2.lam_q)
    if ctx.k == 1:
        s_part: Counter[Weight] = Counter({(b1.mu_s[0] + b2.mu_s[0],): 1})
    elif ctx.k == 2:
        s_part = gl2_tensor(b1.mu_s, b2.mu_s)
    else:
        raise NotImplementedError("subbundle rank above 2 is out of scope")
    out: Counter[Bundle] = Counter()
    for lam, cq in q_part.items():
        for mu, cs in s_part.items():
            out[Bundle(lam, mu)] += cq * cs
    return out


_TWIST_RE = re.compile(r"O\((-?\d+)\)")

_NAMED = {
    "S": "tautological subbundle",
    "Q": "quotient bundle",
    "tangent": "tangent bundle Hom(S, Q)",
    "sym_cube": "third symmetric power of S",
    "sym_cube_dual": "third symmetric power of the dual of S",
    "trivial": "structure sheaf",
}


def named_class(ctx: Grassmannian, name: str) -> EquivariantClass:
    """Constructors for the standard bundles, by name.

    Accepted names: "S", "Q", "tangent", "sym_cube", "sym_cube_dual",
    "trivial", and "O(m)" on a projective-space context (k = 1).
    """
    qr = ctx.quotient_rank
    zero_q = (0,) * qr
    zero_s = (0,) * ctx.k
    if name == "S":
        return EquivariantClass.irreducible(ctx, zero_q, (1,) + (0,) * (ctx.k - 1))
    if name == "Q":
        return EquivariantClass.irreducible(ctx, (1,) + (0,) * (qr - 1), zero_s)
    if name == "tangent":
        # Q tensor dual of S
        mu = (-1,) if ctx.k == 1 else (0, -1)
        return EquivariantClass.irreducible(ctx, (1,) + (0,) * (qr - 1), mu)
    if name == "sym_cube":
        mu = (3,) if ctx.k == 1 else (3, 0)
        return EquivariantClass.irreducible(ctx, zero_q, mu)
    if name == "sym_cube_dual":
        mu = (-3,) if ctx.k == 1 else (0, -3)
        return EquivariantClass.irreducible(ctx, zero_q, mu)
    if name == "trivial":
        return EquivariantClass.trivial(ctx)
    m = _TWIST_RE.fullmatch(name)
    if m:
        if ctx.k != 1:
            raise ValueError("twists O(m) only live on projective-space contexts")
        return EquivariantClass.irreducible(ctx, zero_q, (-int(m.group(1)),))
    raise ValueError(f"unknown class name {name!r}; known: {sorted(_NAMED)} or O(m)")


def wedge_class(cls_: EquivariantClass, j: int) -> EquivariantClass:
    """Exterior power of a single S-only irreducible summand.

    Supports subbundle rank 1 and 2 (closed-form characters); powers above
    the rank of the summand come out empty.
    """
    if j < 0:
        raise ValueError("negative exterior power")
    ctx = cls_.ctx
    if j == 0:
        return EquivariantClass.trivial(ctx)
    items = list(cls_._summands.items())
    if len(items) != 1 or items[0][1] != 1:
        raise ValueError("exterior powers only for a single irreducible summand")
    bundle = items[0][0]
    if any(bundle.lam_q):
        raise ValueError("exterior powers only for S-only classes")
    if ctx.k == 1:
        if j == 1:
            return cls_
        return EquivariantClass.empty(ctx)
    if ctx.k == 2:
        parts = wedge_power_gl2(bundle.mu_s, j)
        return EquivariantClass(
            ctx, {Bundle(bundle.lam_q, mu): m for mu, m in parts.items()}
        )
    raise NotImplementedError("subbundle rank above 2 is out of scope")


def det_shift(a: EquivariantClass, b: EquivariantClass) -> int | None:
    """The uniform determinant twist taking one class onto the other, if any.

    Returns the integer t with a.shifted(t) == b, or None when no such
    twist exists.
    """
    a._check_ctx(b)
    if a.is_empty and b.is_empty:
        return 0
    if a.is_empty or b.is_empty:
        return None
    base = min(a._summands)
    for cand in sorted({x.lam_q[0] - base.lam_q[0] for x in b._summands}):
        if a.shifted(cand) == b:
            return cand
    return None


def equal_mod_det(a: EquivariantClass, b: EquivariantClass) -> bool:
    return det_shift(a, b) is not None


def serre_check(ctx: Grassmannian, bundle: Bundle) -> bool:
    """Serre-duality dimension symmetry for one irreducible bundle.

    Checks that H^q of the bundle and H^(dim - q) of (dual tensor
    canonical) have equal total dimensions in every degree.
    """
    direct = bbw_cohomology(ctx, bundle)
    partner = EquivariantClass.irreducible(ctx, *bundle.dual()).tensor(
        EquivariantClass.irreducible(ctx, *canonical_bundle(ctx))
    )
    mirrored = partner.cohomology()
    top = ctx.dimension
    return all(
        direct.dimension(q) == mirrored.dimension(top - q) for q in range(top + 1)
    )


@dataclass(frozen=True)
class DecompositionComparison:
    """Outcome of re-deriving one displayed tensor decomposition."""

    line_id: str
    computed: EquivariantClass
    claimed: EquivariantClass
    shift: int | None

    @property
    def matches(self) -> bool:
        return self.shift is not None


def _claimed_lines(d: int) -> list[tuple[str, Weight, list[Weight]]]:
    # (line id, quotient weight, subbundle weights with multiplicity)
    hook = (2,) + (1,) * (d - 1)
    one = (1,) + (0,) * (d - 1)
    threes = (3,) * d
    zeros = (0,) * d
    return [
        ("wedge1_tangent", hook, [(4, 0), (3, 1)]),
        ("wedge2_tangent", one, [(5, 0), (4, 1), (3, 2)]),
        ("wedge3_tangent", one, [(6, 2), (5, 3)]),
        ("wedge4_tangent", one, [(6, 5)]),
        ("wedge1_sym3dual", threes, [(6, 0), (5, 1), (4, 2), (3, 3)]),
        ("wedge2_sym3dual", threes, [(8, 1), (7, 2), (6, 3), (6, 3), (5, 4)]),
        ("wedge3_sym3dual", zeros, [(6, 0), (5, 1), (4, 2), (3, 3)]),
        ("wedge4_sym3dual", zeros, [(6, 3)]),
    ]


def verify_claimed_decompositions(d: int) -> list[DecompositionComparison]:
    """Recompute the eight displayed tensor decompositions and compare mod det.

    Each left-hand side (an exterior power of the cubic symmetric power of
    S, tensored with the tangent bundle or with the dual cubic power) is
    rebuilt from scratch; the right-hand side is the hard-coded displayed
    class. Comparison allows one uniform determinant twist per line.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    ctx = Grassmannian(2, d + 2)
    sym3 = named_class(ctx, "sym_cube")
    factors = {
        "tangent": named_class(ctx, "tangent"),
        "sym3dual": named_class(ctx, "sym_cube_dual"),
    }
    out = []
    for line_id, q_weight, s_weights in _claimed_lines(d):
        level = int(line_id[5])
        factor = factors[line_id.split("_", 1)[1]]
        computed = wedge_class(sym3, level).tensor(factor)
        claimed_counter: Counter[Bundle] = Counter(
            Bundle(q_weight, mu) for mu in s_weights
        )
        claimed = EquivariantClass(ctx, claimed_counter)
        out.append(
            DecompositionComparison(
                line_id, computed, claimed, det_shift(computed, claimed)
            )
        )
    return out
