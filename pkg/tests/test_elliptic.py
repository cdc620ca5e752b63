"""Ellipticity tests: geometric fixed-space test vs the exponent criterion."""

from rgroups import (
    GroupDatum,
    LeviDatum,
    QUASI_SPLIT,
    SigmaDatum,
    arthur_elliptic,
    closed_form,
    components,
    elliptic_report,
    herb_applicable,
    herb_elliptic,
    knapp_stein,
)


def sd(classes, dual, reducible, c0=None):
    return SigmaDatum.make(classes, dual, reducible, c0)


def test_full_sign_group_is_elliptic():
    g, lv = GroupDatum("C", 3, QUASI_SPLIT), LeviDatum((1, 1), 1)
    s = sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True})
    res = knapp_stein(g, lv, s)
    assert res.r_order == 4
    assert arthur_elliptic(res)
    assert herb_elliptic(g, lv, closed_form(g, lv, s))


def test_half_sign_group_is_not():
    g, lv = GroupDatum("C", 3, QUASI_SPLIT), LeviDatum((1, 1), 1)
    s = sd(("a", "a"), {"a": "a"}, {"a": True})
    res = knapp_stein(g, lv, s)
    assert not arthur_elliptic(res)
    assert not herb_elliptic(g, lv, closed_form(g, lv, s))


def test_single_block_elliptic():
    g, lv = GroupDatum("C", 3, QUASI_SPLIT), LeviDatum((1,), 2)
    res = knapp_stein(g, lv, sd(("a",), {"a": "a"}, {"a": True}))
    assert arthur_elliptic(res)


def test_d_paired_case_elliptic():
    # R = <C_1 C_2> acts freely: elliptic with exponent k - 1 and even d2
    g, lv = GroupDatum("D1", 4, QUASI_SPLIT), LeviDatum((1, 1), 2)
    s = sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True}, c0=False)
    res = knapp_stein(g, lv, s)
    cf = closed_form(g, lv, s)
    assert res.exponent == 1 and cf.d2 == 2
    assert arthur_elliptic(res)
    assert herb_elliptic(g, lv, cf)


def test_d_odd_d2_not_elliptic():
    g, lv = GroupDatum("D1", 5, QUASI_SPLIT), LeviDatum((1, 2), 2)
    s = sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True}, c0=False)
    res = knapp_stein(g, lv, s)
    cf = closed_form(g, lv, s)
    assert res.exponent == 1 and cf.d2 == 1
    assert not arthur_elliptic(res)
    assert not herb_elliptic(g, lv, cf)


def test_d_m0_even_blocks_exponent_gap():
    # exponent k-1 but d2 = 0: the concession clause must not fire
    g, lv = GroupDatum("D1", 4, QUASI_SPLIT), LeviDatum((2, 2), 0)
    s = sd(("a", "a"), {"a": "a"}, {"a": True})
    cf = closed_form(g, lv, s)
    assert cf.exponent == 1 and cf.d2 == 0
    assert not herb_elliptic(g, lv, cf)
    assert not arthur_elliptic(knapp_stein(g, lv, s))


def test_applicability_window():
    g = GroupDatum("D2", 2, QUASI_SPLIT)
    s = sd(("a",), {"a": "a"}, {"a": True}, c0=True)
    assert not herb_applicable(g, LeviDatum((1,), 1), s)
    g5 = GroupDatum("D1", 5, QUASI_SPLIT)
    s2 = sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True}, c0=True)
    assert herb_applicable(g5, LeviDatum((1, 2), 2), s2)
    gc = GroupDatum("C", 3, QUASI_SPLIT)
    assert herb_applicable(gc, LeviDatum((1, 1), 1), sd(("a", "a"), {"a": "a"}, {"a": True}))


def test_component_bookkeeping():
    g, lv = GroupDatum("C", 3, QUASI_SPLIT), LeviDatum((1, 1), 1)
    s = sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True})
    res = knapp_stein(g, lv, s)
    dim, num, mult = components(res)
    assert dim == num == res.r_order == 4
    assert mult == 1


def test_report_assembly():
    g, lv = GroupDatum("D2", 2, QUASI_SPLIT), LeviDatum((1,), 1)
    rep = elliptic_report(g, lv, sd(("a",), {"a": "a"}, {"a": True}, c0=True))
    assert rep.arthur is True
    assert rep.herb is None          # outside the criterion's window
    assert rep.elliptic is True
    assert rep.num_components == 2
