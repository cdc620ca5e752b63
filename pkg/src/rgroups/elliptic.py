"""Ellipticity of the induced representation, two ways.

The geometric test looks for an element of R_sigma with no fixed vectors on
the span of the block coordinates.  The combinatorial test reads ellipticity
straight off the closed-form exponent.  The sweep checks they agree whenever
the combinatorial test applies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groupdata import GroupDatum, LeviDatum
from .repdatum import SigmaDatum
from .rgroup import ClosedFormResult, RGroupResult, closed_form, knapp_stein
from .weylgroup import fixed_space_dim


def arthur_elliptic(result: RGroupResult) -> bool:
    """Some element of R_sigma acts without nonzero fixed vectors.

    For k = 0 blocks the condition is vacuous and the representation is
    elliptic (the identity has a 0-dimensional fixed space); that case never
    arises here since Levis have at least one GL block.
    """
    return any(fixed_space_dim(w) == 0 for w in result.r_group)


def herb_applicable(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> bool:
    """The exponent criterion is stated away from the small-residual twisted
    even-orthogonal case, where lone odd-block sign changes behave
    differently; skip it there."""
    return not (group.d_type and levi.m <= 1 and bool(sigma.c0_fixes_tau))


def herb_elliptic(group: GroupDatum, levi: LeviDatum, cf: ClosedFormResult) -> bool:
    """Exponent criterion: R_sigma must be as large as the block count
    allows, with a one-off concession in the even orthogonal paired case."""
    k = levi.k
    if not group.d_type:
        return cf.exponent == k
    if cf.exponent == k:
        return True
    d2 = cf.d2 or 0
    return cf.exponent == k - 1 and d2 > 0 and d2 % 2 == 0


def components(result: RGroupResult) -> tuple[int, int, int]:
    """(dim of the commuting algebra, #irreducible constituents,
    common multiplicity).  R_sigma is abelian so induction is
    multiplicity-free with |R_sigma| constituents."""
    n = result.r_order
    return (n, n, 1)


@dataclass(frozen=True)
class EllipticReport:
    result: RGroupResult
    closed: ClosedFormResult
    arthur: bool
    herb: bool | None          # None when the exponent criterion is not applicable
    commuting_dim: int
    num_components: int
    multiplicity: int

    @property
    def elliptic(self) -> bool:
        return self.arthur


def elliptic_report(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> EllipticReport:
    result = knapp_stein(group, levi, sigma)
    cf = closed_form(group, levi, sigma)
    arthur = arthur_elliptic(result)
    herb = None
    if herb_applicable(group, levi, sigma):
        herb = herb_elliptic(group, levi, cf)
    dim, num, mult = components(result)
    return EllipticReport(result, cf, arthur, herb, dim, num, mult)
