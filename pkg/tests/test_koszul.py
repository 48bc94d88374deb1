import pytest

from bbwkoszul.bbw import Grassmannian
from bbwkoszul.classes import EquivariantClass, named_class
from bbwkoszul.koszul import (
    AXIOMS,
    IDEAL_SHEAF,
    RESTRICTION,
    DimValue,
    analyze,
    build_page,
    deformation_numbers,
    euler_consistency,
    ideal_sheaf_cohomology,
    restricted_cohomology,
)


def plane(d):
    return Grassmannian(2, d + 2)


def line(d):
    return Grassmannian.projective_space(d + 2)


class TestBuildPage:
    def test_tangent_page_vanishes_for_large_d(self):
        ctx = plane(9)
        page = build_page(ctx, IDEAL_SHEAF, named_class(ctx, "tangent"))
        assert page.nonzero_entries() == []

    def test_normal_page_at_d5(self):
        ctx = plane(5)
        page = build_page(ctx, IDEAL_SHEAF, named_class(ctx, "sym_cube_dual"))
        assert page.nonzero_entries() == [(-2, 5, 7), (0, 0, 1)]

    def test_twist_restriction_page_on_p6(self):
        ctx = line(5)
        page = build_page(ctx, RESTRICTION, named_class(ctx, "O(3)"))
        assert page.nonzero_entries() == [(-1, 0, 1), (0, 0, 84)]

    def test_column_ranges(self):
        ctx = plane(5)
        ideal = build_page(ctx, IDEAL_SHEAF, named_class(ctx, "tangent"))
        restriction = build_page(ctx, RESTRICTION, named_class(ctx, "tangent"))
        assert sorted(ideal.columns) == [-3, -2, -1, 0]
        assert sorted(restriction.columns) == [-4, -3, -2, -1, 0]
        assert ideal.wedge_level(0) == 1
        assert restriction.wedge_level(0) == 0

    def test_variants_agree_up_to_shift(self):
        # ideal entry at column p equals restriction entry at column p-1
        for d in range(3, 13):
            for ctx, name in (
                (plane(d), "tangent"),
                (plane(d), "sym_cube_dual"),
                (line(d), "tangent"),
                (line(d), "O(3)"),
            ):
                coefficient = named_class(ctx, name)
                ideal = build_page(ctx, IDEAL_SHEAF, coefficient)
                restriction = build_page(ctx, RESTRICTION, coefficient)
                for p in ideal.columns:
                    assert ideal.columns[p] == restriction.columns[p - 1]

    def test_bad_variant(self):
        ctx = plane(5)
        with pytest.raises(ValueError):
            build_page(ctx, "e2", named_class(ctx, "tangent"))


class TestAnalyze:
    def test_normal_side_determined_at_d6(self):
        ctx = plane(6)
        verdicts = analyze(build_page(ctx, IDEAL_SHEAF, named_class(ctx, "sym_cube_dual")))
        assert [verdicts[m].dimension for m in (0, 1, 2)] == [1, 0, 0]
        assert all(verdicts[m].determined for m in (0, 1, 2))

    def test_normal_side_determined_at_d5(self):
        ctx = plane(5)
        verdicts = analyze(build_page(ctx, IDEAL_SHEAF, named_class(ctx, "sym_cube_dual")))
        assert [verdicts[m].dimension for m in (0, 1, 2)] == [1, 0, 0]
        assert verdicts[3].determined and verdicts[3].dimension == 7

    def test_tangent_side_determined_at_d5(self):
        ctx = plane(5)
        verdicts = analyze(build_page(ctx, IDEAL_SHEAF, named_class(ctx, "tangent")))
        assert [verdicts[m].dimension for m in (0, 1, 2)] == [0, 0, 0]

    def test_empty_degrees_have_zero_upper_bound(self):
        ctx = plane(7)
        verdicts = analyze(build_page(ctx, IDEAL_SHEAF, named_class(ctx, "tangent")))
        assert all(v.determined and v.dimension == 0 for v in verdicts.values())


class TestRestricted:
    def test_tangent_restriction_at_d5(self):
        ctx = plane(5)
        restricted = restricted_cohomology(ctx, named_class(ctx, "tangent"))
        assert restricted[0].exact == 48
        assert restricted[1].exact == 0

    def test_normal_restriction_at_d5(self):
        ctx = plane(5)
        restricted = restricted_cohomology(ctx, named_class(ctx, "sym_cube_dual"))
        assert restricted[0].exact == 84 - 1

    def test_cubic_side_tangent_restriction(self):
        ctx = line(3)
        restricted = restricted_cohomology(ctx, named_class(ctx, "tangent"))
        assert restricted[0].exact == 24
        assert restricted[1].exact == 0

    def test_low_d_tangent_restriction_is_determined(self):
        # at d=3 the two surviving entries are isolated, so the nonzero
        # first cohomology of the restricted tangent bundle is exact
        ctx = plane(3)
        restricted = restricted_cohomology(ctx, named_class(ctx, "tangent"))
        assert restricted[0].exact == 24
        assert restricted[1].exact == 60

    def test_ideal_cohomology_values(self):
        ctx = line(4)
        ideal = ideal_sheaf_cohomology(ctx, named_class(ctx, "O(3)"))
        assert ideal[0].exact == 1
        assert all(ideal[m].exact == 0 for m in range(1, 6))


class TestDeformationNumbers:
    def test_fano_side_at_d5(self):
        numbers = deformation_numbers(5, "fano")
        assert numbers.h0_normal == 83
        assert numbers.h0_ambient_tangent_restricted == 48
        assert numbers.h1_tangent == 35
        assert numbers.axioms_used == ("H0_tangent_fano_zero",)

    def test_cubic_side_at_d3(self):
        numbers = deformation_numbers(3, "cubic")
        assert numbers.h0_normal == 34
        assert numbers.h0_ambient_tangent_restricted == 24
        assert numbers.h1_tangent == 10
        assert numbers.axioms_used == ("H0_tangent_cubic_zero",)

    def test_cubic_side_at_d4(self):
        assert deformation_numbers(4, "cubic").h1_tangent == 20

    def test_preconditions(self):
        with pytest.raises(ValueError):
            deformation_numbers(4, "fano")
        with pytest.raises(ValueError):
            deformation_numbers(2, "cubic")
        with pytest.raises(ValueError):
            deformation_numbers(5, "quartic")

    def test_sides_agree(self):
        for d in (5, 6, 7):
            assert (
                deformation_numbers(d, "cubic").h1_tangent
                == deformation_numbers(d, "fano").h1_tangent
            )


class TestEulerConsistency:
    def test_standard_pages(self):
        ctx6 = plane(6)
        assert euler_consistency(ctx6, named_class(ctx6, "sym_cube_dual"))
        ctx5 = plane(5)
        assert euler_consistency(ctx5, named_class(ctx5, "tangent"))

    def test_cubic_side(self):
        ctx = line(3)
        assert euler_consistency(ctx, named_class(ctx, "O(3)"))
        assert euler_consistency(ctx, named_class(ctx, "tangent"))

    def test_empty_class(self):
        ctx = plane(5)
        assert euler_consistency(ctx, EquivariantClass.empty(ctx))

    def test_low_d(self):
        ctx = plane(3)
        assert euler_consistency(ctx, named_class(ctx, "tangent"))
        assert euler_consistency(ctx, named_class(ctx, "sym_cube_dual"))


class TestVanishingTable:
    def test_only_survivor_is_the_pairing_section(self):
        for d in range(6, 13):
            ctx = plane(d)
            tangent_page = build_page(ctx, IDEAL_SHEAF, named_class(ctx, "tangent"))
            assert tangent_page.nonzero_entries() == []
            normal_page = build_page(ctx, IDEAL_SHEAF, named_class(ctx, "sym_cube_dual"))
            assert normal_page.nonzero_entries() == [(0, 0, 1)]


def test_dim_value():
    assert DimValue.of(5).exact == 5
    assert DimValue(0, 3).exact is None
    assert DimValue(0, 3).to_dict() == {"lower": 0, "upper": 3}
    with pytest.raises(ValueError):
        DimValue(4, 2)


def test_axiom_registry():
    assert set(AXIOMS) == {
        "H0_tangent_fano_zero",
        "KAN_vanishing",
        "H0_tangent_cubic_zero",
        "Hq_tangent_cubic_zero",
    }
    for axiom in AXIOMS.values():
        assert axiom.statement and axiom.source
        assert "assumed" in axiom.source
