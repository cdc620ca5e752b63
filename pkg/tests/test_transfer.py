"""Transfer invariance between quasi-split groups and their inner forms,
plus deliberately corrupted pairs as negative controls."""

import pytest

from rgroups import (
    GroupDatum,
    LeviDatum,
    QUASI_SPLIT,
    Scenario,
    ScenarioPair,
    SigmaDatum,
    ValidationError,
    transfer_check,
    transfer_datum,
)


def sd(classes, dual, reducible, c0=None):
    return SigmaDatum.make(classes, dual, reducible, c0)


def make_pair(family, rank, form, blocks, m, sigma, inner_sigma=None):
    qs = GroupDatum(family, rank, QUASI_SPLIT)
    inner = GroupDatum(family, rank, form)
    s_inner = inner_sigma if inner_sigma is not None else transfer_datum(sigma)
    return ScenarioPair(
        Scenario(qs, LeviDatum(blocks, m, qs.ddeg), sigma),
        Scenario(inner, LeviDatum(blocks, m, inner.ddeg), s_inner),
    )


MATCHED = [
    ("B", 3, "inner", (1, 1), 1, sd(("a", "a"), {"a": "a"}, {"a": True})),
    ("B", 4, "inner", (2,), 2, sd(("a",), {"a": "a"}, {"a": False})),
    ("C", 3, "inner", (2,), 1, sd(("a",), {"a": "a"}, {"a": True})),
    ("C", 4, "inner", (2, 2), 0, sd(("a", "a"), {"a": "a"}, {"a": True})),
    ("C", 4, "inner", (2,), 2, sd(("a",), {"a": "b", "b": "a"}, {})),
    ("D1", 4, "inner-even", (2, 2), 0, sd(("a", "b"), {"a": "b", "b": "a"}, {})),
    ("D1", 5, "inner-odd", (2,), 3, sd(("a",), {"a": "a"}, {"a": True}, c0=True)),
    ("D1", 4, "inner-any", (1, 1), 2, sd(("a", "a"), {"a": "a"}, {"a": True}, c0=False)),
    ("D2", 4, "inner", (2,), 2, sd(("a",), {"a": "a"}, {"a": False}, c0=True)),
    ("D2", 5, "inner", (2,), 3, sd(("a",), {"a": "a"}, {"a": True}, c0=False)),
]


@pytest.mark.parametrize("family,rank,form,blocks,m,sigma", MATCHED)
def test_matched_pairs_transfer(family, rank, form, blocks, m, sigma):
    report = transfer_check(make_pair(family, rank, form, blocks, m, sigma))
    assert report.ok, report.mismatches
    assert report.quasi_split.r_order == report.inner.r_order


def _flip_reducible(s, label):
    red = s.reducible_map()
    red[label] = not red[label]
    return SigmaDatum.make(s.classes, s.dual_map(), red, s.c0_fixes_tau)


CORRUPTED = [
    # reducibility flag flipped on the inner side
    ("B", 3, "inner", (1, 1), 1,
     sd(("a", "a"), {"a": "a"}, {"a": True}),
     sd(("a", "a"), {"a": "a"}, {"a": False})),
    ("B", 4, "inner", (2,), 2,
     sd(("a",), {"a": "a"}, {"a": False}),
     sd(("a",), {"a": "a"}, {"a": True})),
    ("C", 3, "inner", (2,), 1,
     sd(("a",), {"a": "a"}, {"a": True}),
     sd(("a",), {"a": "a"}, {"a": False})),
    ("C", 4, "inner", (2, 2), 0,
     sd(("a", "a"), {"a": "a"}, {"a": True}),
     sd(("a", "a"), {"a": "a"}, {"a": False})),
    # self-duality broken on one side
    ("C", 4, "inner", (2,), 2,
     sd(("a",), {"a": "a"}, {"a": True}),
     sd(("a",), {"a": "b", "b": "a"}, {})),
    ("B", 3, "inner", (1, 1), 1,
     sd(("a", "b"), {"a": "b", "b": "a"}, {}),
     sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True})),
    # equivalence pattern broken
    ("B", 4, "inner", (1, 1), 2,
     sd(("a", "a"), {"a": "a"}, {"a": False}),
     sd(("a", "b"), {"a": "a", "b": "b"}, {"a": False, "b": False})),
    # c0 flag flipped in the even orthogonal case
    ("D1", 4, "inner-any", (1, 1), 2,
     sd(("a", "a"), {"a": "a"}, {"a": True}, c0=True),
     sd(("a", "a"), {"a": "a"}, {"a": True}, c0=False)),
    ("D2", 4, "inner", (2,), 2,
     sd(("a",), {"a": "a"}, {"a": False}, c0=True),
     sd(("a",), {"a": "a"}, {"a": True}, c0=True)),
    ("D1", 5, "inner-odd", (2,), 3,
     sd(("a",), {"a": "a"}, {"a": True}, c0=True),
     sd(("a",), {"a": "a"}, {"a": False}, c0=False)),
    # reducibility flipped with two classes present
    ("C", 4, "inner", (2, 2), 0,
     sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": True}),
     sd(("a", "b"), {"a": "a", "b": "b"}, {"a": True, "b": False})),
]


@pytest.mark.parametrize("family,rank,form,blocks,m,s_qs,s_in", CORRUPTED)
def test_corrupted_pairs_mismatch(family, rank, form, blocks, m, s_qs, s_in):
    report = transfer_check(make_pair(family, rank, form, blocks, m, s_qs, s_in))
    assert not report.ok
    assert report.mismatches


def test_corrupted_count_is_at_least_ten():
    assert len(CORRUPTED) >= 10


def test_malformed_pair_rejected():
    qs = GroupDatum("C", 3, QUASI_SPLIT)
    inner = GroupDatum("C", 3, "inner")
    s = sd(("a",), {"a": "a"}, {"a": True})
    # block shapes differ: not a pair at all
    pair = ScenarioPair(
        Scenario(qs, LeviDatum((1,), 2, 1), s),
        Scenario(inner, LeviDatum((2,), 1, 2), s),
    )
    with pytest.raises(ValidationError):
        transfer_check(pair)


def test_flip_helper_sanity():
    s = sd(("a",), {"a": "a"}, {"a": True})
    assert _flip_reducible(s, "a").reducible_map() == {"a": False}
