"""The finite group W_M of block permutations and block sign changes.

W_M = S x| C, where S permutes equal-size GL blocks and C is a subgroup of
{+-1}^k.  For types B and C every sign vector occurs.  For the even
orthogonal types the sign subgroup depends on the residual rank m:

    m = 0 : sign changes at odd-size blocks occur only in pairs;
    m > 0 : all sign vectors occur, but a sign change at an odd-size block
            drags along the outer automorphism of the residual factor, so
            each element carries a derived twist bit c0 (the parity of its
            odd-block sign changes).

Elements act on R^k as signed permutation matrices: basis vector e_i is sent
to (-1)^{signs[perm(i)]} e_{perm(i)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import InternalInconsistencyError, ValidationError
from .groupdata import GroupDatum, LeviDatum, require_valid_levi
from .repdatum import SigmaDatum
from .rootdata import BlockRoot, root_from_vector, root_vector


@dataclass(frozen=True, order=True)
class WeylContext:
    """Shape data an element needs: block sizes, family kind, residual rank."""

    sizes: tuple[int, ...]
    d_type: bool
    m: int

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def twist_active(self) -> bool:
        return self.d_type and self.m > 0

    @property
    def odd_blocks(self) -> tuple[int, ...]:
        return tuple(i for i, n in enumerate(self.sizes) if n % 2 == 1)


def weyl_context(group: GroupDatum, levi: LeviDatum) -> WeylContext:
    require_valid_levi(group, levi)
    return WeylContext(levi.blocks, group.d_type, levi.m)


@dataclass(frozen=True, order=True)
class WeylElement:
    """perm is 0-based: block i is carried to block perm[i]."""

    ctx: WeylContext
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.perm)

    @property
    def c0(self) -> int:
        """Parity of odd-block sign changes when the twist is active, else 0."""
        if not self.ctx.twist_active:
            return 0
        return sum(self.signs[i] for i in self.ctx.odd_blocks) % 2

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.k)) and not any(self.signs)

    def satisfies_membership(self) -> bool:
        """Whether (perm, signs) actually lies in W_M for this context."""
        ctx = self.ctx
        if any(ctx.sizes[self.perm[i]] != ctx.sizes[i] for i in range(self.k)):
            return False
        if ctx.d_type and ctx.m == 0:
            return sum(self.signs[i] for i in ctx.odd_blocks) % 2 == 0
        return True

    def __str__(self) -> str:
        cycles = []
        seen = [False] * self.k
        for start in range(self.k):
            if seen[start] or self.perm[start] == start:
                continue
            cyc, i = [], start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.perm[i]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        flips = ",".join(str(i + 1) for i, s in enumerate(self.signs) if s)
        return f"{''.join(cycles) or '()'};{{{flips}}};{self.c0}"


def _check_context(w1: WeylElement, w2: WeylElement) -> None:
    if w1.ctx != w2.ctx:
        raise ValidationError([("weyl", "elements from different (group, levi) contexts")])


def identity(ctx: WeylContext) -> WeylElement:
    return WeylElement(ctx, tuple(range(ctx.k)), (0,) * ctx.k)


def sign_change(ctx: WeylContext, *blocks: int) -> WeylElement:
    """Sign change at the given 1-based block indices."""
    signs = [0] * ctx.k
    for b in blocks:
        signs[b - 1] ^= 1
    return WeylElement(ctx, tuple(range(ctx.k)), tuple(signs))


def transposition(ctx: WeylContext, i: int, j: int) -> WeylElement:
    """Block transposition (ij), 1-based."""
    perm = list(range(ctx.k))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return WeylElement(ctx, tuple(perm), (0,) * ctx.k)


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Product w1 * w2 acting as matrices: (w1*w2)x = w1(w2 x)."""
    _check_context(w1, w2)
    perm = tuple(w1.perm[w2.perm[i]] for i in range(w1.k))
    inv1 = [0] * w1.k
    for i, p in enumerate(w1.perm):
        inv1[p] = i
    signs = tuple(w1.signs[j] ^ w2.signs[inv1[j]] for j in range(w1.k))
    return WeylElement(w1.ctx, perm, signs)


def inverse(w: WeylElement) -> WeylElement:
    inv = [0] * w.k
    for i, p in enumerate(w.perm):
        inv[p] = i
    signs = tuple(w.signs[w.perm[i]] for i in range(w.k))
    return WeylElement(w.ctx, tuple(inv), signs)


def act_on_vector(w: WeylElement, v: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * w.k
    for i, val in enumerate(v):
        out[w.perm[i]] = -val if w.signs[w.perm[i]] else val
    return tuple(out)


def act_on_root(w: WeylElement, r: BlockRoot) -> BlockRoot:
    return root_from_vector(act_on_vector(w, root_vector(r, w.k)))


def act_on_sigma(w: WeylElement, s: SigmaDatum) -> SigmaDatum:
    """Permute block classes, dualize where a sign change hits, twist tau."""
    inv = [0] * w.k
    for i, p in enumerate(w.perm):
        inv[p] = i
    dual = s.dual_map()
    classes = [
        dual[s.classes[inv[j]]] if w.signs[j] else s.classes[inv[j]]
        for j in range(w.k)
    ]
    return s.with_classes(classes, twist_flip=bool(w.c0))


def fixed_space_dim(w: WeylElement) -> int:
    """Dimension of the fixed subspace in R^k: cycles with sign product +1."""
    seen = [False] * w.k
    dim = 0
    for start in range(w.k):
        if seen[start]:
            continue
        i, flips = start, 0
        while not seen[i]:
            seen[i] = True
            flips += w.signs[w.perm[i]]
            i = w.perm[i]
        if flips % 2 == 0:
            dim += 1
    return dim


def reflection_element(ctx: WeylContext, r: BlockRoot) -> WeylElement:
    """The reflection in a block root, as a signed permutation."""
    if r.kind == "gamma":
        return sign_change(ctx, r.i)
    w = transposition(ctx, r.i, r.j)
    if r.kind == "beta":
        w = compose(w, sign_change(ctx, r.i, r.j))
    return w


def enumerate_weyl(group: GroupDatum, levi: LeviDatum) -> frozenset[WeylElement]:
    """All of W_M, by filtering S_k x {0,1}^k through the membership rules."""
    ctx = weyl_context(group, levi)
    k = ctx.k
    out = []
    for perm in permutations(range(k)):
        if any(ctx.sizes[perm[i]] != ctx.sizes[i] for i in range(k)):
            continue
        for signs in product((0, 1), repeat=k):
            w = WeylElement(ctx, perm, signs)
            if w.satisfies_membership():
                out.append(w)
    return frozenset(out)


def subgroup_closure(ctx: WeylContext, generators) -> frozenset[WeylElement]:
    """Subgroup generated by the given elements (finite closure)."""
    elems = {identity(ctx)}
    frontier = list(elems)
    gens = list(generators)
    for g in gens:
        if not g.satisfies_membership():
            raise InternalInconsistencyError(f"generator {g} outside W_M")
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                prod = compose(g, w)
                if prod not in elems:
                    elems.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return frozenset(elems)


def sort_key(w: WeylElement):
    """Canonical deterministic ordering of elements."""
    return (sum(w.signs), w.signs, w.perm)
