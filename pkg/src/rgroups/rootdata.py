"""Block-level reduced roots in the split-component coordinate space.

A Levi with k GL blocks has split component isomorphic to (GL_1)^k, and the
reduced roots of the ambient group restrict to vectors in Z^k:

    alpha(i,j) = e_i - e_j      (i < j)
    beta(i,j)  = e_i + e_j      (i < j)
    gamma(i)   = e_i            (block-level restriction of the sign-change
                                 root: e, 2e or e + e_n depending on family)

Only these restrictions matter for stabilizers and R-groups, so gamma is
stored in its common block-level normalization.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InternalInconsistencyError
from .groupdata import GroupDatum, LeviDatum, require_valid_levi

ALPHA = "alpha"
BETA = "beta"
GAMMA = "gamma"


@dataclass(frozen=True, order=True)
class BlockRoot:
    kind: str
    i: int  # 1-based block index
    j: int = 0  # second index for alpha/beta, 0 for gamma
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (ALPHA, BETA, GAMMA):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind == GAMMA:
            if self.j != 0 or self.i < 1:
                raise ValueError("gamma roots take a single index")
        elif not 1 <= self.i < self.j:
            raise ValueError("paired roots require i < j")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __neg__(self) -> "BlockRoot":
        return replace(self, sign=-self.sign)

    def __str__(self) -> str:
        body = f"{self.kind}({self.i})" if self.kind == GAMMA else f"{self.kind}({self.i},{self.j})"
        return body if self.sign == 1 else f"-{body}"


def root_vector(root: BlockRoot, k: int) -> tuple[int, ...]:
    """Realization of the root in Z^k."""
    v = [0] * k
    v[root.i - 1] = root.sign
    if root.kind == ALPHA:
        v[root.j - 1] = -root.sign
    elif root.kind == BETA:
        v[root.j - 1] = root.sign
    return tuple(v)


def root_from_vector(v: tuple[int, ...]) -> BlockRoot:
    """Inverse of root_vector; input must be the image of some block root."""
    support = [(idx + 1, val) for idx, val in enumerate(v) if val]
    if len(support) == 1:
        (i, val), = support
        return BlockRoot(GAMMA, i, sign=val)
    if len(support) == 2:
        (i, vi), (j, vj) = support
        if vi == vj:
            return BlockRoot(BETA, i, j, sign=vi)
        if vi == -vj:
            return BlockRoot(ALPHA, i, j, sign=vi)
    raise InternalInconsistencyError(f"vector {v} is not a block root")


def is_positive(root: BlockRoot) -> bool:
    """Lexicographic positivity: first nonzero coordinate of the vector."""
    # for every kind the first nonzero coordinate is the one at index i
    return root.sign == 1


def reduced_roots(group: GroupDatum, levi: LeviDatum) -> frozenset[BlockRoot]:
    """Positive block-level reduced roots for this group and Levi.

    Sign-change (gamma) roots exist at every block for types B and C, and
    for the even orthogonal types whenever m >= 1.  For even orthogonal
    Levis with m = 0 the ambient roots inside a block still restrict to a
    doubled coordinate vector provided the block has size >= 2, but only the
    even-size blocks admit the corresponding reflection in the Weyl group;
    those are the gamma roots kept here.
    """
    require_valid_levi(group, levi)
    k = levi.k
    roots = set()
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            roots.add(BlockRoot(ALPHA, i, j))
            roots.add(BlockRoot(BETA, i, j))
    if group.d_type and levi.m == 0:
        gammas = [i for i in range(1, k + 1) if levi.blocks[i - 1] % 2 == 0]
    else:
        gammas = list(range(1, k + 1))
    for i in gammas:
        roots.add(BlockRoot(GAMMA, i))
    return frozenset(roots)
