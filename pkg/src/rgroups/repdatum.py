"""Abstract discrete-series data: class labels plus boolean oracles.

Everything analytic about an inducing representation (or its L-parameter) is
reduced to: one equivalence-class label per GL block, a duality involution on
labels, a flag saying whether the outer twist fixes the residual factor, and
a rank-one reducibility oracle on self-dual labels.  Both the sigma side and
the parameter side carry identical combinatorics, so one datum type serves
both.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .errors import ValidationError
from .groupdata import GroupDatum, LeviDatum, validate_levi


def _as_pairs(mapping: Mapping) -> tuple:
    return tuple(sorted(mapping.items()))


@dataclass(frozen=True)
class SigmaDatum:
    """Labels and oracles for sigma = sigma_1 x ... x sigma_k x tau.

    ``tau_twisted`` tracks whether the residual factor currently carries the
    outer twist; it starts False and is toggled by Weyl elements whose
    sign-change pattern picks up the twist.
    """

    classes: tuple[str, ...]
    dual: tuple[tuple[str, str], ...]
    reducible: tuple[tuple[str, bool], ...] = ()
    c0_fixes_tau: Optional[bool] = None
    tau_twisted: bool = False

    @classmethod
    def make(cls, classes, dual: Mapping[str, str],
             reducible: Mapping[str, bool] = (),
             c0_fixes_tau: Optional[bool] = None) -> "SigmaDatum":
        return cls(tuple(classes), _as_pairs(dual), _as_pairs(dict(reducible)),
                   c0_fixes_tau)

    @property
    def k(self) -> int:
        return len(self.classes)

    def dual_map(self) -> dict[str, str]:
        return dict(self.dual)

    def reducible_map(self) -> dict[str, bool]:
        return dict(self.reducible)

    def dual_of(self, label: str) -> str:
        return self.dual_map()[label]

    def is_self_dual(self, label: str) -> bool:
        return self.dual_map().get(label) == label

    def with_classes(self, classes, twist_flip: bool = False) -> "SigmaDatum":
        twisted = self.tau_twisted ^ twist_flip
        return replace(self, classes=tuple(classes), tau_twisted=twisted)


def validate_sigma(group: GroupDatum, levi: LeviDatum, s: SigmaDatum
                   ) -> list[tuple[str, str]]:
    """Structural checks on a datum; returns violations, never raises."""
    out = list(validate_levi(group, levi))
    dual = s.dual_map()
    if len(s.classes) != levi.k:
        out.append(("sigma.classes", f"expected {levi.k} labels, got {len(s.classes)}"))
        return out
    for c in s.classes:
        if c not in dual:
            out.append(("sigma.dual", f"label {c!r} has no dual entry"))
    for a, b in dual.items():
        if dual.get(b) != a:
            out.append(("sigma.dual", f"dual is not involutive at {a!r}"))
    # equivalent (or dual-paired) representations live on equal-size blocks
    sizes: dict[str, int] = {}
    for c, n in zip(s.classes, levi.blocks):
        for label in (c, dual.get(c)):
            if label is None:
                continue
            if sizes.setdefault(label, n) != n:
                out.append(("sigma.classes", f"label {label!r} used on blocks of unequal size"))
    for label in s.reducible_map():
        if dual.get(label) != label:
            out.append(("sigma.reducible", f"label {label!r} is not self-dual"))
    if not group.d_type and s.c0_fixes_tau is not None:
        out.append(("sigma.c0_fixes_tau", "only meaningful for even orthogonal types"))
    return out


def require_valid_sigma(group: GroupDatum, levi: LeviDatum, s: SigmaDatum) -> None:
    violations = validate_sigma(group, levi, s)
    if violations:
        raise ValidationError(violations)


def sigma_equal(s1: SigmaDatum, s2: SigmaDatum) -> bool:
    """Equivalence of two data over the same Levi.

    The residual factors compare equal either when neither or both carry the
    outer twist, or when the twist fixes tau.
    """
    if s1.classes != s2.classes or s1.dual != s2.dual or s1.reducible != s2.reducible:
        return False
    if s1.tau_twisted != s2.tau_twisted:
        return bool(s1.c0_fixes_tau)
    return True


def transfer_datum(s: SigmaDatum) -> SigmaDatum:
    """Datum carried to (or from) an inner form: all oracles are preserved."""
    return s


@dataclass(frozen=True)
class Scenario:
    group: GroupDatum
    levi: LeviDatum
    sigma: SigmaDatum


@dataclass(frozen=True)
class ScenarioPair:
    """A quasi-split scenario matched with an inner-form scenario."""

    quasi_split: Scenario
    inner: Scenario

    def violations(self) -> list[tuple[str, str]]:
        out = []
        qs, inn = self.quasi_split, self.inner
        if not qs.group.quasi_split:
            out.append(("pair.quasi_split", "first member must be quasi-split"))
        if inn.group.quasi_split:
            out.append(("pair.inner", "second member must be an inner form"))
        if (qs.group.family, qs.group.rank) != (inn.group.family, inn.group.rank):
            out.append(("pair", "members must share family and rank"))
        if qs.levi.blocks != inn.levi.blocks or qs.levi.m != inn.levi.m:
            out.append(("pair.levi", "matched Levis must share block sizes and m"))
        # the two data are deliberately NOT required to agree: corrupted
        # pairs must flow through transfer_check and come back as mismatches
        return out


# -- scenario JSON schema ----------------------------------------------------

_GROUP_KEYS = {"family", "rank", "form"}
_LEVI_KEYS = {"blocks", "m", "ddeg"}
_SIGMA_KEYS = {"classes", "dual", "c0_fixes_tau", "reducible"}


def _check_keys(obj: dict, allowed: set, required: set, path: str) -> None:
    if not isinstance(obj, dict):
        raise ValidationError([(path, "expected an object")])
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError([(path, f"unknown keys {sorted(unknown)}")])
    missing = required - set(obj)
    if missing:
        raise ValidationError([(path, f"missing keys {sorted(missing)}")])


def scenario_from_json(data: dict, path: str = "") -> Scenario:
    """Parse one scenario object; unknown keys are rejected."""
    _check_keys(data, {"group", "levi", "sigma"}, {"group", "levi", "sigma"}, path or "scenario")
    g, l, s = data["group"], data["levi"], data["sigma"]
    _check_keys(g, _GROUP_KEYS, _GROUP_KEYS, f"{path}group")
    _check_keys(l, _LEVI_KEYS, _LEVI_KEYS, f"{path}levi")
    _check_keys(s, _SIGMA_KEYS, {"classes", "dual", "reducible"}, f"{path}sigma")
    group = GroupDatum(str(g["family"]), int(g["rank"]), str(g["form"]))
    levi = LeviDatum(tuple(int(b) for b in l["blocks"]), int(l["m"]), int(l["ddeg"]))
    c0 = s.get("c0_fixes_tau")
    if c0 is not None and not isinstance(c0, bool):
        raise ValidationError([(f"{path}sigma.c0_fixes_tau", "expected a boolean")])
    sigma = SigmaDatum.make(
        [str(c) for c in s["classes"]],
        {str(a): str(b) for a, b in dict(s["dual"]).items()},
        {str(a): bool(b) for a, b in dict(s["reducible"]).items()},
        c0,
    )
    declared = set(sigma.dual_map())
    undeclared = [c for c in sigma.classes if c not in declared]
    undeclared += [c for c in sigma.reducible_map() if c not in declared]
    if undeclared:
        raise ValidationError([(f"{path}sigma", f"labels {sorted(set(undeclared))} not declared in dual")])
    return Scenario(group, levi, sigma)


def scenario_to_json(sc: Scenario) -> dict:
    sigma = {
        "classes": list(sc.sigma.classes),
        "dual": dict(sc.sigma.dual),
        "reducible": dict(sc.sigma.reducible),
    }
    if sc.sigma.c0_fixes_tau is not None:
        sigma["c0_fixes_tau"] = sc.sigma.c0_fixes_tau
    return {
        "group": {"family": sc.group.family, "rank": sc.group.rank, "form": sc.group.form},
        "levi": {"blocks": list(sc.levi.blocks), "m": sc.levi.m, "ddeg": sc.levi.ddeg},
        "sigma": sigma,
    }
