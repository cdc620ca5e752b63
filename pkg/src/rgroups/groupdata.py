"""Classification data: group families, inner forms, and their F-Levi subgroups.

Families are the four classical series of rank n over a p-adic field:

    B  : odd special orthogonal SO_{2n+1} (split)
    C  : symplectic Sp_{2n} (split)
    D1 : even special orthogonal SO_{2n} (split)
    D2 : quasi-split non-split even special orthogonal SO*_{2n}

Each family has the quasi-split member plus its non-split inner forms; the
inner forms are pinned down by their Satake diagrams, and the admissible
Levi shapes GL x ... x GL x G_-(m) are exactly the ones obtained by removing
white diagram vertices.  Forms whose diagram alternates black/white carry GL
blocks over the quaternion algebra D_2 (ddeg = 2, block sizes even); the
B-family inner form and the D1 "any" inner form keep GL blocks over F.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError

FAMILIES = ("B", "C", "D1", "D2")

QUASI_SPLIT = "quasi-split"

#: form labels valid for each family
FORMS = {
    "B": (QUASI_SPLIT, "inner"),
    "C": (QUASI_SPLIT, "inner"),
    "D1": (QUASI_SPLIT, "inner-any", "inner-odd", "inner-even"),
    "D2": (QUASI_SPLIT, "inner"),
}


@dataclass(frozen=True, order=True)
class GroupDatum:
    """A classical group: family, rank and form selector."""

    family: str
    rank: int
    form: str = QUASI_SPLIT

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError([("group.family", f"unknown family {self.family!r}")])
        if self.rank < 2:
            raise ValidationError([("group.rank", "rank must be >= 2")])
        if self.form not in FORMS[self.family]:
            raise ValidationError(
                [("group.form", f"form {self.form!r} invalid for family {self.family}")]
            )
        if self.form == "inner-odd" and self.rank % 2 == 0:
            raise ValidationError([("group.form", "inner-odd requires odd rank")])
        if self.form == "inner-even" and self.rank % 2 == 1:
            raise ValidationError([("group.form", "inner-even requires even rank")])

    @property
    def quasi_split(self) -> bool:
        return self.form == QUASI_SPLIT

    @property
    def d_type(self) -> bool:
        """True for the even orthogonal families (D1 and D2)."""
        return self.family in ("D1", "D2")

    @property
    def ddeg(self) -> int:
        """Degree d of the division algebra carrying the GL blocks."""
        if self.quasi_split:
            return 1
        if self.family == "B" or self.form == "inner-any":
            return 1
        return 2


@dataclass(frozen=True, order=True)
class LeviDatum:
    """Levi shape GL_{m_1}(D) x ... x GL_{m_k}(D) x G_-(m).

    ``blocks`` stores the sizes n_i over the base field (n_i = ddeg * m_i),
    so matched Levis of a quasi-split group and its inner form carry
    identical block tuples.
    """

    blocks: tuple[int, ...]
    m: int
    ddeg: int = 1

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class LeviDescription:
    """A Levi together with printable factor names."""

    group: GroupDatum
    levi: LeviDatum
    factors: tuple[str, ...]
    supported: bool = True  # False: accepted for enumeration, rejected by the engine

    @property
    def display_name(self) -> str:
        return " x ".join(self.factors)

    def golden_line(self) -> str:
        blocks = ",".join(str(b) for b in self.levi.blocks) or "-"
        return (
            f"{self.group.family} {self.group.rank} {self.group.form} : "
            f"{blocks} | {self.levi.m} | {self.levi.ddeg} | {self.display_name}"
        )


def enumerate_inner_forms(family: str, rank: int) -> list[GroupDatum]:
    """All forms of the given family and rank, quasi-split first."""
    if family not in FAMILIES:
        raise ValidationError([("family", f"unknown family {family!r}")])
    if rank < 2:
        raise ValidationError([("rank", "rank must be >= 2")])
    out = [GroupDatum(family, rank, QUASI_SPLIT)]
    if family == "D1":
        out.append(GroupDatum(family, rank, "inner-any"))
        out.append(GroupDatum(family, rank, "inner-odd" if rank % 2 else "inner-even"))
    else:
        out.append(GroupDatum(family, rank, "inner"))
    return out


def _m_violation(group: GroupDatum, levi: LeviDatum) -> str | None:
    """Residual-rank constraint of the form's diagram, or None if satisfied."""
    fam, form, n, m = group.family, group.form, group.rank, levi.m
    if m < 0:
        return "m must be >= 0"
    if fam == "B":
        return None if group.quasi_split or m >= 1 else "inner form requires m >= 1"
    if fam == "C":
        if not group.quasi_split and m % 2 != n % 2:
            return "residual rank must match rank parity"
        return None
    if fam == "D1":
        if form == QUASI_SPLIT:
            return None if m != 1 else "m = 1 does not occur for even orthogonal Levis"
        if form == "inner-any":
            return None if m >= 2 else "this inner form requires m >= 2"
        if form == "inner-odd":
            return None if m >= 3 and m % 2 == 1 else "requires odd m >= 3"
        return None if m % 2 == 0 else "requires even m"
    # D2
    if group.quasi_split:
        return None if m >= 1 else "quasi-split SO* requires m >= 1"
    if n % 2 == 1:
        return None if m % 2 == 1 else "requires odd m"
    return None if m >= 2 and m % 2 == 0 else "requires even m >= 2"


def validate_levi(group: GroupDatum, levi: LeviDatum) -> list[tuple[str, str]]:
    """Check a Levi shape against the form's Satake diagram; returns violations."""
    out: list[tuple[str, str]] = []
    if any(b < 1 for b in levi.blocks):
        out.append(("levi.blocks", "block sizes must be positive"))
    if sum(levi.blocks) + levi.m != group.rank:
        out.append(("levi", f"blocks + m must sum to rank {group.rank}"))
    if levi.ddeg != group.ddeg:
        out.append(("levi.ddeg", f"form {group.form} requires ddeg {group.ddeg}"))
    if group.ddeg == 2 and any(b % 2 for b in levi.blocks):
        out.append(("levi.blocks", "GL blocks over D_2 have even size over F"))
    if not out:
        msg = _m_violation(group, levi)
        if msg is not None:
            out.append(("levi.m", msg))
    return out


def require_valid_levi(group: GroupDatum, levi: LeviDatum) -> None:
    violations = validate_levi(group, levi)
    if violations:
        raise ValidationError(violations)


# -- factor naming ----------------------------------------------------------


def _gl_name(size: int, ddeg: int) -> str:
    return f"GL_{size}(F)" if ddeg == 1 else f"GL_{size // 2}(D_2)"


def _residual_name(group: GroupDatum, m: int) -> str | None:
    fam, form = group.family, group.form
    if group.quasi_split:
        if m == 0:
            return None
        return {
            "B": f"SO_{2 * m + 1}",
            "C": f"Sp_{2 * m}",
            "D1": f"SO_{2 * m}",
            "D2": f"SO*_{2 * m}",
        }[fam]
    if fam == "B":
        return "PSL_1(D_2)" if m == 1 else f"G'({m})"
    if fam == "C":
        if m == 0:
            return None
        if m == 1:
            return "SL_1(D_2)"
        return f"SU^+_{m}(D_2)" if m % 2 == 0 else f"G'({m})"
    if form == "inner-any":
        return f"G'({m})"
    if form == "inner-odd":
        return "PSL_1(D_4)" if m == 3 else f"G'({m})"
    if form == "inner-even":
        return None if m == 0 else f"SU^-_{m}(D_2)"
    # D2 inner: the fork removal at residual rank 1 leaves no residual
    # factor; the E^x torus variant is named explicitly by the caller
    return None if m == 1 else f"G'({m})"


def _describe(group: GroupDatum, levi: LeviDatum, residual: str | None = None,
              supported: bool = True) -> LeviDescription:
    factors = [_gl_name(b, levi.ddeg) for b in levi.blocks]
    name = residual if residual is not None else _residual_name(group, levi.m)
    if name is not None:
        factors.append(name)
    if not factors:
        factors = ["1"]
    return LeviDescription(group, levi, tuple(factors), supported)


# -- enumeration ------------------------------------------------------------


def _compositions(total: int, even_only: bool = False):
    """Ordered compositions of `total` into positive parts (() for total 0)."""
    if total == 0:
        yield ()
        return
    step = 2 if even_only else 1
    for first in range(step, total + 1, step):
        for rest in _compositions(total - first, even_only):
            yield (first,) + rest


def _allowed_m(group: GroupDatum) -> list[int]:
    fam, form, n = group.family, group.form, group.rank
    if fam == "B":
        return list(range(0 if group.quasi_split else 1, n + 1))
    if fam == "C":
        if group.quasi_split:
            return list(range(0, n + 1))
        return list(range(n % 2, n + 1, 2))
    if fam == "D1":
        if form == QUASI_SPLIT:
            return [0] + list(range(2, n + 1))
        if form == "inner-any":
            return list(range(2, n + 1))
        if form == "inner-odd":
            return list(range(3, n + 1, 2))
        return list(range(0, n + 1, 2))
    # D2
    if group.quasi_split:
        return list(range(1, n + 1))
    if n % 2 == 1:
        return list(range(3, n + 1, 2))  # m = 1 handled specially
    return list(range(2, n + 1, 2))


def enumerate_levis(group: GroupDatum, maximal: bool = False) -> list[LeviDescription]:
    """All standard Levi shapes of the form, sorted deterministically.

    With ``maximal`` only single-block shapes are kept (one white vertex
    removed, M maximal proper).
    """
    even = group.ddeg == 2
    out: list[LeviDescription] = []
    for m in _allowed_m(group):
        for blocks in _compositions(group.rank - m, even_only=even):
            out.append(_describe(group, LeviDatum(blocks, m, group.ddeg)))
    if group.family == "D2" and not group.quasi_split and group.rank % 2 == 1:
        # fork-vertex removals: same block shapes, residual rank 1; one variant
        # has an extra E^x torus factor and is outside the engine's scope
        for blocks in _compositions(group.rank - 1, even_only=True):
            levi = LeviDatum(blocks, 1, 2)
            out.append(_describe(group, levi))
            out.append(_describe(group, levi, residual="E^x", supported=False))
    if maximal:
        out = [d for d in out if d.levi.k == 1]
    out.sort(key=lambda d: (d.levi.k, d.levi.blocks, d.levi.m, not d.supported,
                            d.display_name))
    return out
