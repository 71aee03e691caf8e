from fractions import Fraction

import pytest

from adereduce import (
    AdeError,
    AdeType,
    Attachment,
    FamilyPresentation,
    MPoly,
    a2_displayed_family,
    a2_reconciliation,
    a2_worked_family,
    blowup_chart_family,
    chart_substitution,
    discriminant_identity_holds,
    divides,
    double_cover_family,
    double_cover_substitution,
    even_case_reduction,
    hyperplane_product,
    miniversal_family,
    miniversal_polynomial,
    odd_case_reduction,
    pulled_back_discriminant,
    reduction,
    root_elimination,
    special_points_a2,
    substitute,
    tail_rule,
    weyl_cover_bindings,
    weyl_cover_map,
    weyl_pullback_family,
)


def strs(polys) -> list:
    return [str(p) for p in polys]


def test_weyl_cover() -> None:
    assert ["a1 + a2 + a3", "a1*a2 + a1*a3 + a2*a3", "a1*a2*a3"] == strs(
        weyl_cover_map(2)
    )
    bindings = weyl_cover_bindings(2)
    assert MPoly.parse("-a1*a2*a3") == bindings["t3"]
    assert {"a3": MPoly.parse("-a1 - a2")} == root_elimination(2)


def test_weyl_cover_factors_the_polynomial() -> None:
    # x^(n+1) + t1 x^n + ... + t_(n+1) pulls back to the product of x - a_i
    n = 3
    x1 = MPoly.var("x1")
    general = x1 ** (n + 1)
    for i, image in weyl_cover_bindings(n).items():
        general = general + image * x1 ** (n + 1 - int(i[1:]))
    product = MPoly.const(1)
    for i in range(1, n + 2):
        product = product * (x1 - MPoly.var(f"a{i}"))
    assert product == general


def test_miniversal_polynomial() -> None:
    assert "x1^3 + t2*x1 + t3" == str(miniversal_polynomial(2))
    assert "x1^2 + t2" == str(miniversal_polynomial(1))


def test_pulled_back_discriminant_a1() -> None:
    assert "4*a1^2" == str(pulled_back_discriminant(1))
    assert hyperplane_product(1) == pulled_back_discriminant(1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_discriminant_is_product_of_hyperplanes(n: int) -> None:
    assert discriminant_identity_holds(n)


def test_miniversal_and_pullback_families() -> None:
    family = miniversal_family(2)
    assert ("t2", "t3") == family.base_vars
    assert ("x1", "x2") == family.fiber_vars
    assert () == family.base_relations
    assert MPoly.parse("x2^2 + x1^3 + t2*x1 + t3") == family.equation
    pullback = weyl_pullback_family(1)
    assert ["a1 + a2"] == strs(pullback.base_relations)
    assert MPoly.parse("x2^2 + (x1 - a1)*(x1 - a2)") == pullback.equation
    with pytest.raises(AdeError):
        family.fiber_over_exceptional()


def test_blowup_chart() -> None:
    assert {
        "a1": MPoly.parse("b1"),
        "a2": MPoly.parse("b1*b2"),
        "a3": MPoly.parse("b1*b3"),
    } == chart_substitution(2)
    family = blowup_chart_family(2)
    assert ["b2 + b3 + 1"] == strs(family.base_relations)
    assert (
        MPoly.parse("x2^2 + (x1 - b1)*(x1 - b1*b2)*(x1 - b1*b3)") == family.equation
    )
    assert MPoly.parse("x1^3 + x2^2") == family.fiber_over_exceptional()
    assert "char(k) > 3" == family.to_json()["characteristic"]
    assert "b1" == family.to_json()["exceptional_divisor"]


def test_double_cover() -> None:
    assert {"b1": MPoly.parse("c1^2"), "b2": MPoly.parse("c2")} == (
        double_cover_substitution(1)
    )
    family = double_cover_family(2, m=3)
    assert ("x1", "x2", "x3") == family.fiber_vars
    assert MPoly.parse("x2^2 + x3^2 + x1^3") == family.fiber_over_exceptional()
    assert family.total_relations[0] == family.base_relations[0]


def test_family_checks_its_relations() -> None:
    b1, x1 = MPoly.var("b1"), MPoly.var("x1")
    with pytest.raises(AdeError):
        FamilyPresentation("bad", ("b1",), ("x1",), (x1,), (x1, b1), 2)
    with pytest.raises(AdeError):
        FamilyPresentation("bad", ("b1",), ("x1",), (), (MPoly.var("y"),), 2)
    with pytest.raises(AdeError):
        FamilyPresentation("bad", ("b1",), ("x1",), (b1,), (x1,), 2)


def test_odd_case_reduction() -> None:
    r = odd_case_reduction(5, m=3)
    assert "odd" == r.chart
    assert ["b1^3", "b1^2*x1", "b1*x1^2", "x1^3", "x2", "x3"] == strs(r.ideal)
    assert ["x1^3", "x2", "x3"] == strs(r.desingularization_ideal)
    assert (3, 1, 1) == r.desingularization_weights
    with pytest.raises(AdeError):
        odd_case_reduction(2)


def test_even_case_reduction() -> None:
    r = even_case_reduction(2)
    assert "even" == r.chart
    assert [
        "c1^6",
        "c1^4*x1",
        "c1^2*x1^2",
        "x1^3",
        "c1^3*x2",
        "c1*x1*x2",
        "x2^2",
    ] == strs(r.ideal)
    assert ["x1^3", "x2^2"] == strs(r.desingularization_ideal)
    assert r.desingularization_weights is None
    with pytest.raises(AdeError):
        even_case_reduction(3)


def test_reduction_picks_chart_by_parity() -> None:
    assert "odd" == reduction(3).chart
    assert "even" == reduction(4).chart
    assert "even" == reduction(4, chart="even").chart
    with pytest.raises(AdeError):
        reduction(3, chart="even")
    with pytest.raises(AdeError):
        reduction(0)


def test_reduction_document() -> None:
    doc = reduction(3).to_json()
    assert "A3" == doc["sing"]
    assert "char(k) > 4" == doc["characteristic"]
    assert ["b2 + b3 + b4 + 1"] == doc["base_relations"]
    assert ["b1^2", "b1*x1", "x1^2", "x2"] == doc["ideal"]
    assert {"ideal": ["x1^2", "x2"], "weights": [2, 1]} == doc["desingularization"]
    assert "-a1 - a2 - a3 - a4" == doc["weyl_cover"]["t1"]
    assert "b1*b4" == doc["cover"]["a4"]


def test_tail_rule_even() -> None:
    tail = tail_rule(4)
    assert AdeType("A", 4) == tail.sing
    assert 2 == tail.tail_genus
    assert Attachment.WEIERSTRASS_POINT is tail.attachment
    assert (1, 2, 5) == tail.ambient_weights
    assert 2 == tail.generic_aut_order
    assert "Weierstrass point" in tail.involution
    assert (1, 2, 5, 5) == tail_rule(4, m=3).ambient_weights
    assert tail.exceptional_genus_rule is None


def test_tail_rule_odd() -> None:
    tail = tail_rule(3)
    assert 1 == tail.tail_genus
    assert Attachment.CONJUGATE_POINTS is tail.attachment
    assert (1, 1, 2) == tail.ambient_weights
    assert 1 == tail.generic_aut_order
    assert "Aut ≅ ℤ/2 when g = 2" == tail.exceptional_genus_rule
    assert 2 == tail_rule(3, genus=2).generic_aut_order
    assert "fixing the node" in tail_rule(3, genus=2).involution
    assert 2 == tail_rule(5, genus=3).generic_aut_order
    assert 1 == tail_rule(5, genus=4).generic_aut_order


def test_tail_summary() -> None:
    assert (
        "A2: genus 1 tail in P(1,2,3) attached at one Weierstrass point; "
        "generic |Aut| = 2 (hyperelliptic involution of the tail, fixing the "
        "Weierstrass point of attachment)"
    ) == tail_rule(2).summary()


def test_a2_reconciliation() -> None:
    check = a2_reconciliation()
    assert not check.direct_match
    assert check.match_after_x1_negation
    assert check.match_after_root_negation
    expected = MPoly.parse(
        "x2^2 + x1^3 - (b2^2 + b2 + 1)*b1^2*x1 + b2*(1 + b2)*b1^3"
    )
    assert expected == a2_worked_family()
    displayed = a2_displayed_family()
    assert expected - displayed == 2 * MPoly.parse("b2*(1 + b2)*b1^3")


def test_a2_slope_variable_can_be_renamed() -> None:
    family = a2_worked_family("s")
    assert ("b1", "s", "x1", "x2") == family.variables


@pytest.mark.parametrize(
    "b2, coincident, degenerate",
    [
        (1, True, False),
        (-2, True, False),
        (Fraction(-1, 2), True, False),
        (0, False, True),
        (-1, False, True),
        (3, False, False),
    ],
)
def test_special_points(b2, coincident: bool, degenerate: bool) -> None:
    points = special_points_a2(b2)
    assert coincident is points.coincident
    assert degenerate is points.degenerate


def test_special_point_labels() -> None:
    assert ("∞", "1", "3", "-4") == special_points_a2(3).labels
    assert ("∞", "1", "b2", "-b2 - 1") == special_points_a2("b2").labels
    assert special_points_a2("2").labels == special_points_a2(2).labels


def squares(m: int) -> MPoly:
    return sum((MPoly.var(f"x{i}") ** 2 for i in range(2, m + 1)), MPoly())


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_fiber_over_exceptional_divisor(n: int, m: int) -> None:
    expected = MPoly.var("x1") ** (n + 1) + squares(m)
    assert expected == blowup_chart_family(n, m).fiber_over_exceptional()
    assert expected == double_cover_family(n, m).fiber_over_exceptional()


@pytest.mark.parametrize("n", range(1, 6))
def test_charts_are_substitutions_of_each_other(n: int) -> None:
    pullback = weyl_pullback_family(n)
    b_chart = blowup_chart_family(n)
    c_chart = double_cover_family(n)
    chart = chart_substitution(n)
    assert b_chart.equation == substitute(pullback.equation, chart)
    # σ₁(a) pulls back to b1 times the chart's base relation
    assert MPoly.var("b1") * b_chart.base_relations[0] == substitute(
        pullback.base_relations[0], chart
    )
    cover = double_cover_substitution(n)
    assert c_chart.equation == substitute(b_chart.equation, cover)
    assert c_chart.base_relations[0] == substitute(b_chart.base_relations[0], cover)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_pullback_is_the_miniversal_family_on_the_cover(n: int) -> None:
    elimination = root_elimination(n)
    cover = {
        t: substitute(image, elimination)
        for t, image in weyl_cover_bindings(n).items()
    }
    expected = substitute(miniversal_family(n).equation, cover)
    assert expected == substitute(weyl_pullback_family(n).equation, elimination)


def test_hyperplanes_divide_the_pulled_back_discriminant() -> None:
    a = [MPoly.var(f"a{i}") for i in range(1, 4)]
    a.append(-(a[0] + a[1] + a[2]))
    disc = pulled_back_discriminant(3)
    for i in range(4):
        for j in range(i + 1, 4):
            assert divides(a[i] - a[j], disc)
    assert not divides(a[0], disc)


@pytest.mark.parametrize("n", range(1, 11))
def test_tail_table(n: int) -> None:
    tail = tail_rule(n)
    assert n // 2 == tail.tail_genus
    if n % 2 == 0:
        assert Attachment.WEIERSTRASS_POINT is tail.attachment
        assert (1, 2, n + 1) == tail.ambient_weights
        assert 2 == tail.generic_aut_order
        assert tail.exceptional_genus_rule is None
    else:
        assert Attachment.CONJUGATE_POINTS is tail.attachment
        assert (1, 1, (n + 1) // 2) == tail.ambient_weights
        assert 1 == tail.generic_aut_order
        assert 2 == tail_rule(n, genus=(n + 1) // 2).generic_aut_order
