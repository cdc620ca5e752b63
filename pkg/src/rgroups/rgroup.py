"""The Knapp-Stein calculation: W(sigma), Delta'_sigma, W'_sigma, R_sigma.

Everything here is finite and done by brute force over W_M; the closed-form
description is computed separately and the two are compared by the callers
(tests, sweep, transfer checks).  Any failure of the structural facts the
brute force is supposed to guarantee (normality, semidirect decomposition,
R elementary abelian of sign changes) raises InternalInconsistencyError
rather than returning a half-trusted answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConfigurationError,
    InternalInconsistencyError,
    UnsupportedLeviError,
)
from .groupdata import GroupDatum, LeviDatum, LeviDescription
from .repdatum import (
    ScenarioPair,
    SigmaDatum,
    require_valid_sigma,
    sigma_equal,
)
from .rootdata import ALPHA, BETA, BlockRoot, is_positive, reduced_roots
from .weylgroup import (
    WeylContext,
    WeylElement,
    act_on_root,
    act_on_sigma,
    compose,
    identity,
    inverse,
    reflection_element,
    sign_change,
    sort_key,
    subgroup_closure,
    weyl_context,
    enumerate_weyl,
)


def ensure_supported(desc: LeviDescription) -> None:
    if not desc.supported:
        raise UnsupportedLeviError(
            [("levi", f"no discrete series on the residual factor of {desc.display_name}")]
        )


@dataclass(frozen=True)
class RGroupResult:
    group: GroupDatum
    levi: LeviDatum
    sigma: SigmaDatum
    weyl_sigma: frozenset[WeylElement]
    delta: frozenset[BlockRoot]
    w_prime: frozenset[WeylElement]
    r_group: frozenset[WeylElement]
    r_generators: tuple[WeylElement, ...]

    @property
    def exponent(self) -> int:
        return len(self.r_generators)

    @property
    def r_order(self) -> int:
        return len(self.r_group)


def stabilizer(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> frozenset[WeylElement]:
    """W(sigma) = { w in W_M : w.sigma ~ sigma }."""
    require_valid_sigma(group, levi, sigma)
    return frozenset(
        w for w in enumerate_weyl(group, levi)
        if sigma_equal(act_on_sigma(w, sigma), sigma)
    )


def delta_prime(
    group: GroupDatum,
    levi: LeviDatum,
    sigma: SigmaDatum,
    weyl_sigma: frozenset[WeylElement] | None = None,
) -> frozenset[BlockRoot]:
    """Positive reduced roots whose rank-one induced representation is
    irreducible (the root system of W'_sigma)."""
    if weyl_sigma is None:
        weyl_sigma = stabilizer(group, levi, sigma)
    ctx = weyl_context(group, levi)
    dual = sigma.dual_map()
    red = sigma.reducible_map()
    out = []
    for r in reduced_roots(group, levi):
        ci, cj = sigma.classes[r.i - 1], (sigma.classes[r.j - 1] if r.j else None)
        if r.kind == ALPHA:
            keep = ci == cj
        elif r.kind == BETA:
            keep = dual[ci] == cj
        else:  # gamma
            if reflection_element(ctx, r) not in weyl_sigma:
                keep = False
            else:
                if ci not in red:
                    raise ConfigurationError(
                        [("sigma.reducible",
                          f"class '{ci}' needs a reducibility flag to settle gamma({r.i})")]
                    )
                keep = not red[ci]
        if keep:
            out.append(r)
    return frozenset(out)


def _sign_basis(ctx: WeylContext, elements) -> tuple[WeylElement, ...]:
    """Reduced echelon basis over F_2 of the sign vectors, as elements."""
    basis: list[list[int]] = []
    for w in sorted(elements, key=sort_key):
        v = list(w.signs)
        for b in basis:
            pivot = next(i for i, x in enumerate(b) if x)
            if v[pivot]:
                v = [x ^ y for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
    # back-substitute to reduced form, then sort by pivot
    for idx, b in enumerate(basis):
        pivot = next(i for i, x in enumerate(b) if x)
        for other in range(len(basis)):
            if other != idx and basis[other][pivot]:
                basis[other] = [x ^ y for x, y in zip(basis[other], b)]
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
    return tuple(
        sign_change(ctx, *(i + 1 for i, x in enumerate(b) if x)) for b in basis
    )


def knapp_stein(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> RGroupResult:
    """Full brute-force computation, with structural self-checks."""
    ctx = weyl_context(group, levi)
    wsig = stabilizer(group, levi, sigma)
    delta = delta_prime(group, levi, sigma, wsig)

    wprime = subgroup_closure(ctx, [reflection_element(ctx, r) for r in delta])
    if not wprime <= wsig:
        raise InternalInconsistencyError("W'_sigma is not contained in W(sigma)")
    for w in wsig:
        wi = inverse(w)
        for u in wprime:
            if compose(compose(w, u), wi) not in wprime:
                raise InternalInconsistencyError("W'_sigma is not normal in W(sigma)")

    rgrp = frozenset(
        w for w in wsig
        if all(is_positive(act_on_root(w, r)) for r in delta)
    )
    if rgrp & wprime != {identity(ctx)}:
        raise InternalInconsistencyError("R_sigma meets W'_sigma nontrivially")
    if len(rgrp) * len(wprime) != len(wsig):
        raise InternalInconsistencyError("|W(sigma)| != |R_sigma| * |W'_sigma|")
    for w in rgrp:
        if w.perm != tuple(range(ctx.k)):
            raise InternalInconsistencyError(f"R_sigma element {w} is not a pure sign change")
        if compose(w, w) != identity(ctx):
            raise InternalInconsistencyError("R_sigma element of order > 2")
    for a in rgrp:
        for b in rgrp:
            if compose(a, b) not in rgrp:
                raise InternalInconsistencyError("R_sigma not closed under products")

    gens = _sign_basis(ctx, rgrp)
    if 2 ** len(gens) != len(rgrp):
        raise InternalInconsistencyError("R_sigma is not elementary abelian of the stated rank")
    return RGroupResult(group, levi, sigma, wsig, delta, wprime, rgrp, gens)


def endoscopic_side(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> RGroupResult:
    """The same brute force read on the parameter side.

    The two sides share every predicate the computation consumes, so this is
    knapp_stein verbatim; it exists so callers can assert the element-by-
    element agreement rather than assume it.
    """
    return knapp_stein(group, levi, sigma)


@dataclass(frozen=True)
class ClosedFormResult:
    exponent: int
    generators: tuple[WeylElement, ...]
    index_set: tuple[int, ...]          # blocks contributing (1-based)
    d1: int | None = None               # even-orthogonal bookkeeping
    d2: int | None = None

    @property
    def r_order(self) -> int:
        return 2 ** self.exponent


def _class_reps(sigma: SigmaDatum, indices) -> list[int]:
    """One block index per inequivalent class among the given blocks, the
    largest index representing each class, listed in increasing order."""
    best: dict[str, int] = {}
    for i in indices:
        c = sigma.classes[i - 1]
        best[c] = max(best.get(c, 0), i)
    return sorted(best.values())


def closed_form(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> ClosedFormResult:
    """Predicted R_sigma without touching W_M: an explicit elementary abelian
    2-group of sign changes read off from the inducing datum."""
    require_valid_sigma(group, levi, sigma)
    ctx = weyl_context(group, levi)
    k = ctx.k
    dual = sigma.dual_map()
    red = sigma.reducible_map()

    def self_dual(i: int) -> bool:
        return dual[sigma.classes[i - 1]] == sigma.classes[i - 1]

    def reducible(i: int) -> bool:
        c = sigma.classes[i - 1]
        if c not in red:
            raise ConfigurationError(
                [("sigma.reducible", f"class '{c}' needs a reducibility flag")]
            )
        return red[c]

    if not group.d_type:
        idx = [i for i in range(1, k + 1) if self_dual(i) and reducible(i)]
        reps = _class_reps(sigma, idx)
        gens = tuple(sign_change(ctx, i) for i in reps)
        return ClosedFormResult(len(reps), gens, tuple(idx))

    # even orthogonal: blocks split by whether a lone sign change is available
    if levi.m >= 1 and bool(sigma.c0_fixes_tau):
        i1_blocks = list(range(1, k + 1))
    else:
        i1_blocks = [i for i in range(1, k + 1) if levi.blocks[i - 1] % 2 == 0]
    i2_blocks = [i for i in range(1, k + 1) if i not in i1_blocks]

    i1_sigma = [i for i in i1_blocks if self_dual(i) and reducible(i)]
    i2_sigma = [i for i in i2_blocks if self_dual(i)]
    reps1 = _class_reps(sigma, i1_sigma)
    reps2 = _class_reps(sigma, i2_sigma)
    d1, d2 = len(reps1), len(reps2)

    gens = [sign_change(ctx, i) for i in reps1]
    if d2 > 0:
        anchor = max(reps2)
        gens.extend(sign_change(ctx, i, anchor) for i in reps2 if i != anchor)
        exponent = d1 + d2 - 1
    else:
        exponent = d1
    gens.sort(key=sort_key)
    return ClosedFormResult(
        exponent, tuple(gens), tuple(sorted(i1_sigma + i2_sigma)), d1, d2
    )


def closed_form_matches(result: RGroupResult, cf: ClosedFormResult) -> bool:
    """The predicted generators must generate exactly the brute-force R."""
    ctx = weyl_context(result.group, result.levi)
    if cf.exponent != result.exponent:
        return False
    return subgroup_closure(ctx, cf.generators) == result.r_group


@dataclass(frozen=True)
class TransferReport:
    pair: ScenarioPair
    quasi_split: RGroupResult
    inner: RGroupResult
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def transfer_check(pair: ScenarioPair) -> TransferReport:
    """Run both sides of a matched pair and compare every invariant."""
    bad = pair.violations()
    if bad:
        from .errors import ValidationError
        raise ValidationError(bad)
    qs, inn = pair.quasi_split, pair.inner
    res_q = knapp_stein(qs.group, qs.levi, qs.sigma)
    res_i = knapp_stein(inn.group, inn.levi, inn.sigma)

    mism = []
    if res_q.delta != res_i.delta:
        mism.append("delta'_sigma differs between the two forms")
    pairs = [
        ("W(sigma)", res_q.weyl_sigma, res_i.weyl_sigma),
        ("W'_sigma", res_q.w_prime, res_i.w_prime),
        ("R_sigma", res_q.r_group, res_i.r_group),
    ]
    for label, a, b in pairs:
        if {(w.perm, w.signs) for w in a} != {(w.perm, w.signs) for w in b}:
            mism.append(f"{label} differs between the two forms")
    if res_q.exponent != res_i.exponent:
        mism.append("R_sigma exponent differs between the two forms")
    return TransferReport(pair, res_q, res_i, tuple(mism))
