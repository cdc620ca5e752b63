"""Exhaustive verification over every small datum.

For each group form, Levi, and abstract inducing datum within the given rank
and block-count bounds, the sweep recomputes R_sigma by brute force, checks
the closed-form description and the ellipticity criteria against it, and runs
the transfer comparison for every matched (quasi-split, inner form) pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .elliptic import arthur_elliptic, herb_applicable, herb_elliptic
from .errors import ValidationError
from .groupdata import (
    FAMILIES,
    QUASI_SPLIT,
    GroupDatum,
    LeviDatum,
    enumerate_inner_forms,
    enumerate_levis,
    validate_levi,
)
from .repdatum import Scenario, ScenarioPair, SigmaDatum, validate_sigma
from .rgroup import (
    closed_form,
    closed_form_matches,
    endoscopic_side,
    knapp_stein,
    transfer_check,
)

_LABELS = "abcdefgh"


def _class_assignments(sizes: tuple[int, ...]):
    """Set partitions of the blocks into classes, classes only joining
    equal-size blocks, rendered as canonical label tuples."""
    k = len(sizes)

    def rec(i: int, parts: list[list[int]]):
        if i == k:
            yield [list(p) for p in parts]
            return
        for p in parts:
            if sizes[p[0]] == sizes[i]:
                p.append(i)
                yield from rec(i + 1, parts)
                p.pop()
        parts.append([i])
        yield from rec(i + 1, parts)
        parts.pop()

    for parts in rec(0, []):
        labels = [""] * k
        for label, part in zip(_LABELS, parts):
            for b in part:
                labels[b] = label
        yield tuple(labels), [sizes[p[0]] for p in parts]


def _involutions(n_classes: int, class_sizes: list[int]):
    """Duality maps: involutions on classes matching classes of equal size."""

    def rec(remaining: list[int]):
        if not remaining:
            yield []
            return
        a = remaining[0]
        rest = remaining[1:]
        yield from ([(a, a)] + tail for tail in rec(rest))
        for idx, b in enumerate(rest):
            if class_sizes[a] == class_sizes[b]:
                others = rest[:idx] + rest[idx + 1:]
                yield from ([(a, b)] + tail for tail in rec(others))

    yield from rec(list(range(n_classes)))


def iter_sigmas(group: GroupDatum, levi: LeviDatum):
    """Every inequivalent abstract datum on the given Levi."""
    for labels, class_sizes in _class_assignments(levi.blocks):
        n_classes = len(class_sizes)
        names = _LABELS[:n_classes]
        for pairs in _involutions(n_classes, class_sizes):
            dual = {}
            for a, b in pairs:
                dual[names[a]] = names[b]
                dual[names[b]] = names[a]
            selfdual = sorted(c for c in names if dual[c] == c)
            c0_choices = (True, False) if group.d_type and levi.m >= 1 else (None,)
            for flags in product((True, False), repeat=len(selfdual)):
                reducible = dict(zip(selfdual, flags))
                for c0 in c0_choices:
                    s = SigmaDatum.make(labels, dual, reducible, c0)
                    if not validate_sigma(group, levi, s):
                        yield s


def iter_scenarios(group: GroupDatum, max_k: int):
    for desc in enumerate_levis(group):
        if not desc.supported or desc.levi.k == 0 or desc.levi.k > max_k:
            continue
        for s in iter_sigmas(group, desc.levi):
            yield Scenario(group, desc.levi, s)


@dataclass
class SweepResult:
    scenarios: int = 0
    pairs: int = 0
    violations: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _flag(res: SweepResult, scen: Scenario, check: str, detail: str) -> None:
    res.violations.append(
        {
            "check": check,
            "family": scen.group.family,
            "rank": scen.group.rank,
            "form": scen.group.form,
            "blocks": list(scen.levi.blocks),
            "m": scen.levi.m,
            "classes": list(scen.sigma.classes),
            "dual": [list(p) for p in scen.sigma.dual],
            "reducible": [[c, f] for c, f in scen.sigma.reducible],
            "c0_fixes_tau": scen.sigma.c0_fixes_tau,
            "detail": detail,
        }
    )


def _check_scenario(res: SweepResult, scen: Scenario) -> None:
    res.scenarios += 1
    try:
        result = knapp_stein(scen.group, scen.levi, scen.sigma)
    except Exception as exc:  # structural failure is itself the finding
        _flag(res, scen, "knapp-stein", str(exc))
        return
    endo = endoscopic_side(scen.group, scen.levi, scen.sigma)
    if (endo.weyl_sigma, endo.w_prime, endo.r_group) != (
        result.weyl_sigma, result.w_prime, result.r_group
    ):
        _flag(res, scen, "endoscopic", "parameter-side sets differ from sigma-side sets")
    cf = closed_form(scen.group, scen.levi, scen.sigma)
    if not closed_form_matches(result, cf):
        _flag(
            res, scen, "closed-form",
            f"brute-force exponent {result.exponent}, closed-form {cf.exponent}",
        )
    arthur = arthur_elliptic(result)
    if herb_applicable(scen.group, scen.levi, scen.sigma):
        herb = herb_elliptic(scen.group, scen.levi, cf)
        if herb != arthur:
            _flag(res, scen, "ellipticity", f"arthur={arthur} herb={herb}")
    res.rows.append(
        {
            "family": scen.group.family,
            "rank": scen.group.rank,
            "form": scen.group.form,
            "blocks": "+".join(map(str, scen.levi.blocks)),
            "m": scen.levi.m,
            "k": scen.levi.k,
            "weyl_sigma": len(result.weyl_sigma),
            "w_prime": len(result.w_prime),
            "r_order": result.r_order,
            "exponent": result.exponent,
            "elliptic": int(arthur),
        }
    )


def _check_pairs(res: SweepResult, family: str, rank: int, max_k: int) -> None:
    qs = GroupDatum(family, rank, QUASI_SPLIT)
    inners = [g for g in enumerate_inner_forms(family, rank) if not g.quasi_split]
    for scen in iter_scenarios(qs, max_k):
        for inner in inners:
            levi_i = LeviDatum(scen.levi.blocks, scen.levi.m, inner.ddeg)
            if validate_levi(inner, levi_i) or validate_sigma(inner, levi_i, scen.sigma):
                continue
            pair = ScenarioPair(scen, Scenario(inner, levi_i, scen.sigma))
            res.pairs += 1
            try:
                report = transfer_check(pair)
            except ValidationError as exc:
                _flag(res, scen, "transfer", f"pair rejected: {exc}")
                continue
            for msg in report.mismatches:
                _flag(res, scen, "transfer", f"{inner.form}: {msg}")


def run_sweep(max_rank: int = 4, max_k: int = 3, families=None) -> SweepResult:
    res = SweepResult()
    for family in families or FAMILIES:
        for rank in range(2, max_rank + 1):
            for group in enumerate_inner_forms(family, rank):
                for scen in iter_scenarios(group, max_k):
                    _check_scenario(res, scen)
            _check_pairs(res, family, rank, max_k)
    return res
