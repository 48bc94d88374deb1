"""Koszul hypercohomology pages and exact-sequence bookkeeping.

The cubic symmetric power of the dual subbundle has a distinguished
section whose zero locus Z (the lines on a cubic hypersurface) is cut out
regularly; the exterior powers of the dual of that bundle resolve the
ideal sheaf of Z and, one step longer, its structure sheaf. Tensoring the
resolution with a coefficient class F and taking cohomology gives a first
page E1 whose columns this module computes exactly.

Degeneration is never assumed. An entry survives to the abutment when it
is differential-isolated: every slot a differential could connect it to,
on any later page, is either empty or shares no GL(V)-irreducible
constituent with it (differentials are equivariant, so their rank between
disjoint isotypic supports is zero). A total degree whose entries are all
isolated gets an exact dimension; anything else is reported as a range,
never guessed.

Two facts consumed from outside (vanishing of global tangent fields of
the zero locus, and of a smooth cubic) are data in an axiom registry, and
every number assembled with their help names them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bbw import CohomologyProfile, Grassmannian
from .classes import EquivariantClass, named_class, wedge_class
from .weights import Weight

IDEAL_SHEAF = "ideal-sheaf"
RESTRICTION = "restriction"


class UnderdeterminedError(RuntimeError):
    """A requested number depends on a spectral-sequence verdict that is only a range."""


@dataclass(frozen=True)
class KoszulPage:
    """First page of one Koszul hypercohomology spectral sequence.

    ``columns[p]`` is the full cohomology profile of the p-th resolution
    term tensored with the coefficient class; the (p, q) entry is its
    degree-q slice. Ideal-sheaf pages use exterior powers 1..r of the
    cubic symmetric power of S (p = 1-level), restriction pages 0..r
    (p = -level).
    """

    ctx: Grassmannian
    variant: str
    coefficient: EquivariantClass
    columns: dict[int, CohomologyProfile] = field(compare=False)

    @property
    def p_min(self) -> int:
        return min(self.columns)

    @property
    def p_max(self) -> int:
        return 0

    @property
    def q_max(self) -> int:
        return self.ctx.dimension

    def wedge_level(self, p: int) -> int:
        return 1 - p if self.variant == IDEAL_SHEAF else -p

    def entry_dimension(self, p: int, q: int) -> int:
        col = self.columns.get(p)
        return col.dimension(q) if col is not None else 0

    def entry_constituents(self, p: int, q: int) -> frozenset[Weight]:
        col = self.columns.get(p)
        return col.constituents(q) if col is not None else frozenset()

    def nonzero_entries(self) -> list[tuple[int, int, int]]:
        """All (p, q, dimension) with a nonzero entry, sorted."""
        out = []
        for p in sorted(self.columns):
            for q in self.columns[p].degrees():
                out.append((p, q, self.columns[p].dimension(q)))
        return out

    def total_degree_dimension(self, m: int) -> int:
        return sum(
            self.columns[p].dimension(m - p)
            for p in self.columns
            if 0 <= m - p <= self.q_max
        )

    def total_degree_constituents(self, m: int) -> frozenset[Weight]:
        out: frozenset[Weight] = frozenset()
        for p in self.columns:
            out |= self.entry_constituents(p, m - p)
        return out

    def euler_characteristic(self) -> int:
        return sum(
            (-1) ** p * col.euler_characteristic() for p, col in self.columns.items()
        )


def build_page(
    ctx: Grassmannian, variant: str, coefficient: EquivariantClass
) -> KoszulPage:
    """Compute every entry of the first page for the given coefficient class."""
    if variant not in (IDEAL_SHEAF, RESTRICTION):
        raise ValueError(f"unknown page variant {variant!r}")
    if coefficient.ctx != ctx:
        raise ValueError("coefficient class lives on a different context")
    sym3 = named_class(ctx, "sym_cube")
    resolution_rank = named_class(ctx, "sym_cube_dual").rank()
    if variant == IDEAL_SHEAF:
        ps = range(-resolution_rank + 1, 1)
    else:
        ps = range(-resolution_rank, 1)
    columns = {}
    for p in ps:
        level = 1 - p if variant == IDEAL_SHEAF else -p
        columns[p] = wedge_class(sym3, level).tensor(coefficient).cohomology()
    return KoszulPage(ctx=ctx, variant=variant, coefficient=coefficient, columns=columns)


BlockingPair = tuple[tuple[int, int], tuple[int, int], int]


@dataclass(frozen=True)
class DegreeVerdict:
    """What the page pins down about the abutment in one total degree."""

    total_degree: int
    determined: bool
    dimension: int | None
    profile: tuple[tuple[Weight, int], ...] | None
    upper_bound: int
    blocking: tuple[BlockingPair, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {
            "total_degree": self.total_degree,
            "determined": self.determined,
            "upper_bound": self.upper_bound,
        }
        if self.determined:
            out["dimension"] = self.dimension
        else:
            out["blocking"] = [list(map(list, pair[:2])) + [pair[2]] for pair in self.blocking]
        return out


def _entry_blocking(page: KoszulPage, p: int, q: int) -> tuple[BlockingPair, ...]:
    mine = page.entry_constituents(p, q)
    if not mine:
        return ()
    found = []
    width = page.p_max - page.p_min
    for r in range(1, width + 1):
        for pp, qq in ((p - r, q + r - 1), (p + r, q - r + 1)):
            other = page.entry_constituents(pp, qq)
            if other and (mine & other):
                found.append(((p, q), (pp, qq), r))
    return tuple(found)


def analyze(page: KoszulPage) -> dict[int, DegreeVerdict]:
    """Per-total-degree verdicts about the abutment of the page.

    A degree is determined exactly when every contributing entry is
    differential-isolated; its dimension is then the plain sum of the
    entry dimensions, and its profile the union of their constituents.
    """
    verdicts: dict[int, DegreeVerdict] = {}
    for m in range(page.p_min, page.q_max + 1):
        contributing = [
            (p, m - p)
            for p in sorted(page.columns)
            if 0 <= m - p <= page.q_max and page.entry_dimension(p, m - p)
        ]
        upper = sum(page.entry_dimension(p, q) for p, q in contributing)
        blocking: list[BlockingPair] = []
        for p, q in contributing:
            blocking.extend(_entry_blocking(page, p, q))
        if blocking:
            verdicts[m] = DegreeVerdict(m, False, None, None, upper, tuple(blocking))
        else:
            merged = CohomologyProfile(page.ctx.n)
            for p, q in contributing:
                weights = page.columns[p].weights(q)
                merged = merged.merged(
                    CohomologyProfile(page.ctx.n, {0: dict(weights)})
                )
            profile = tuple(sorted(merged.weights(0).items()))
            verdicts[m] = DegreeVerdict(m, True, upper, profile, upper)
    return verdicts


@dataclass(frozen=True)
class DimValue:
    """An exactly known or merely bracketed non-negative dimension."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"bad bounds [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    @classmethod
    def of(cls, value: int) -> "DimValue":
        return cls(value, value)

    def to_dict(self) -> dict:
        if self.exact is not None:
            return {"exact": self.exact}
        return {"lower": self.lower, "upper": self.upper}


def ideal_sheaf_cohomology(
    ctx: Grassmannian, coefficient: EquivariantClass
) -> dict[int, DimValue]:
    """Cohomology of (ideal sheaf of Z) tensor F, per degree, from the page verdicts."""
    page = build_page(ctx, IDEAL_SHEAF, coefficient)
    verdicts = analyze(page)
    out = {}
    for m in range(ctx.dimension + 1):
        v = verdicts.get(m)
        if v is None:
            out[m] = DimValue.of(0)
        elif v.determined:
            out[m] = DimValue.of(v.dimension)
        else:
            out[m] = DimValue(0, v.upper_bound)
    return out


def restricted_cohomology(
    ctx: Grassmannian, coefficient: EquivariantClass
) -> dict[int, DimValue]:
    """Cohomology of F restricted to the zero locus Z, assembled degree by degree.

    Uses the three-term exactness of 0 -> I(x)F -> F -> F|Z -> 0:

        h^m(F|Z) = (h^m(F) - rank a_m) + (h^(m+1)(I(x)F) - rank a_(m+1)),

    where a_m is the comparison map H^m(I(x)F) -> H^m(F). The rank is
    pinned when it is forced: a_0 is injective, a zero side forces rank 0,
    and disjoint GL(V)-isotypic supports force rank 0. Anything else keeps
    the value a range.
    """
    page = build_page(ctx, IDEAL_SHEAF, coefficient)
    verdicts = analyze(page)
    ambient = coefficient.cohomology()
    top = ctx.dimension

    def ideal_dim(m: int) -> DimValue:
        v = verdicts.get(m)
        if v is None:
            return DimValue.of(0)
        if v.determined:
            return DimValue.of(v.dimension)
        return DimValue(0, v.upper_bound)

    def rank_bounds(a: DimValue, degree: int) -> DimValue:
        b_dim = ambient.dimension(degree)
        if a.upper == 0 or b_dim == 0:
            return DimValue.of(0)
        if degree == 0:
            return a  # global sections of a subsheaf inject
        if not (page.total_degree_constituents(degree) & ambient.constituents(degree)):
            return DimValue.of(0)
        return DimValue(0, min(a.upper, b_dim))

    out = {}
    for m in range(top + 1):
        a_here, a_next = ideal_dim(m), ideal_dim(m + 1)
        r_here, r_next = rank_bounds(a_here, m), rank_bounds(a_next, m + 1)
        b_here = ambient.dimension(m)
        lower = (b_here - r_here.upper) + max(0, a_next.lower - r_next.upper)
        upper = (b_here - r_here.lower) + (a_next.upper - r_next.lower)
        out[m] = DimValue(max(0, lower), max(0, upper))
    return out


@dataclass(frozen=True)
class Axiom:
    """An externally established vanishing consumed by the bookkeeping."""

    name: str
    statement: str
    source: str

    def to_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement, "source": self.source}


AXIOMS: dict[str, Axiom] = {
    a.name: a
    for a in (
        Axiom(
            "H0_tangent_fano_zero",
            "H^0 of the tangent sheaf of the line scheme of a smooth cubic vanishes (d >= 5)",
            "external input, assumed: Huybrechts, The Geometry of Cubic Hypersurfaces, Cor. 3.3.13",
        ),
        Axiom(
            "KAN_vanishing",
            "H^q of the tangent sheaf of the line scheme vanishes for q >= 2 (d >= 5)",
            "external input, assumed: Kodaira-Akizuki-Nakano vanishing, anti-ample canonical sheaf",
        ),
        Axiom(
            "H0_tangent_cubic_zero",
            "H^0 of the tangent sheaf of a smooth cubic hypersurface of dimension >= 3 vanishes",
            "external input, assumed: classical hypersurface deformation theory (Kodaira-Spencer)",
        ),
        Axiom(
            "Hq_tangent_cubic_zero",
            "H^q of the tangent sheaf of a smooth cubic hypersurface vanishes for q != 1",
            "external input, assumed: classical hypersurface deformation theory (Kodaira-Spencer)",
        ),
    )
}


@dataclass(frozen=True)
class DeformationNumbers:
    """First-order deformation bookkeeping for one side of the correspondence.

    ``h1_tangent`` is assembled as h0_normal minus h0 of the restricted
    ambient tangent sheaf; the assembly is valid because the consumed
    axiom kills global tangent fields of Z and the computed H^1 of the
    restricted ambient tangent sheaf is zero.
    """

    d: int
    side: str
    h0_normal: int
    h0_ambient_tangent_restricted: int
    h1_tangent: int
    axioms_used: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "side": self.side,
            "h0_normal": self.h0_normal,
            "h0_ambient_tangent_restricted": self.h0_ambient_tangent_restricted,
            "h1_tangent": self.h1_tangent,
            "axioms_used": list(self.axioms_used),
        }


def deformation_numbers(d: int, side: str) -> DeformationNumbers:
    """Number of first-order deformations, for the hypersurface or its line scheme.

    side "cubic" works on projective space with normal class O(3) and
    needs d >= 3; side "fano" works on the Grassmannian of 2-planes with
    the dual cubic power of S as normal class and needs d >= 5. Raises
    UnderdeterminedError when a needed verdict is only a range.
    """
    side = side.lower()
    if side == "cubic":
        if d < 3:
            raise ValueError("cubic side needs d >= 3")
        ctx = Grassmannian.projective_space(d + 2)
        axiom = "H0_tangent_cubic_zero"
    elif side == "fano":
        if d < 5:
            raise ValueError("fano side needs d >= 5")
        ctx = Grassmannian(2, d + 2)
        axiom = "H0_tangent_fano_zero"
    else:
        raise ValueError(f"unknown side {side!r}")

    tangent = named_class(ctx, "tangent")
    normal = named_class(ctx, "sym_cube_dual")
    restricted_tangent = restricted_cohomology(ctx, tangent)
    restricted_normal = restricted_cohomology(ctx, normal)
    h0_tangent = restricted_tangent[0].exact
    h1_tangent_ambient = restricted_tangent[1].exact
    h0_normal = restricted_normal[0].exact
    if h0_tangent is None or h1_tangent_ambient is None or h0_normal is None:
        raise UnderdeterminedError(
            f"restricted cohomology not pinned down at d={d}, side={side}"
        )
    if h1_tangent_ambient != 0:
        raise UnderdeterminedError(
            "H^1 of the restricted ambient tangent sheaf does not vanish; "
            "the connecting map is not forced surjective"
        )
    return DeformationNumbers(
        d=d,
        side=side,
        h0_normal=h0_normal,
        h0_ambient_tangent_restricted=h0_tangent,
        h1_tangent=h0_normal - h0_tangent,
        axioms_used=(axiom,),
    )


def euler_consistency(ctx: Grassmannian, coefficient: EquivariantClass) -> bool:
    """Alternating-sum cross-check between the two page variants.

    The Euler characteristic of the restriction page must equal the
    alternating sum of the restricted dimensions (when those are all
    exact, which routes through the ideal-sheaf page and the ambient
    cohomology instead) and, unconditionally, the ambient Euler
    characteristic minus that of the ideal-sheaf page.
    """
    restriction_page = build_page(ctx, RESTRICTION, coefficient)
    chi_page = restriction_page.euler_characteristic()
    restricted = restricted_cohomology(ctx, coefficient)
    if all(v.exact is not None for v in restricted.values()):
        chi_restricted = sum((-1) ** m * v.exact for m, v in restricted.items())
        if chi_restricted != chi_page:
            return False
    ideal_page = build_page(ctx, IDEAL_SHEAF, coefficient)
    return chi_page == (
        coefficient.euler_characteristic() - ideal_page.euler_characteristic()
    )
