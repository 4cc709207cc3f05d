"""Generalized Reed-Solomon codes GRS_k(a, v) over GF(q^2).

Self-orthogonality is tested two ways: through the Hermitian Gram matrix
G (G^(q))^T, and through the power sums <a^(qi+j), v^(q+1)>.  MDS is checked
as "every k columns of G are independent", and the minimum distance can be
found by enumerating codewords.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .gf import FieldCtx, Fq2Elem
from .linalg import (
    EXHAUSTIVE_SUBSET_BOUND,
    ExactMatrix,
    all_subsets_nonsingular,
    random_subsets,
)

DEFAULT_SAMPLES = 10**5
ENUMERATION_BOUND = 1 << 24
_BLOCK_BUDGET = 1 << 21


class EnumerationBoundError(ValueError):
    pass


@dataclass(frozen=True)
class GrsCode:
    ctx: FieldCtx
    a: tuple[Fq2Elem, ...]
    v: tuple[Fq2Elem, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        n = len(self.a)
        if len(self.v) != n:
            raise ValueError("a and v must have the same length")
        if len(set(self.a)) != n:
            raise ValueError("evaluation points must be pairwise distinct")
        if any(x == 0 for x in self.v):
            raise ValueError("column multipliers must be nonzero")
        if not 1 <= self.k <= n <= self.ctx.order:
            raise ValueError(f"need 1 <= k <= n <= q^2, got k={self.k}, n={n}")

    @property
    def n(self) -> int:
        return len(self.a)

    def with_multiplier(self, i: int, value: Fq2Elem) -> "GrsCode":
        v = list(self.v)
        v[i] = value
        return GrsCode(self.ctx, self.a, tuple(v), self.k)


def _generator_array(C: GrsCode) -> np.ndarray:
    ctx = C.ctx
    a = np.array(C.a, dtype=np.int64)
    v = np.array(C.v, dtype=np.int64)
    powers = ctx.vpow(a[None, :], np.arange(C.k)[:, None])
    return ctx.vmul(powers, v[None, :])


def generator_matrix(C: GrsCode) -> ExactMatrix:
    """k x n matrix with entry (i, j) = v_j a_j^i (and 0^0 = 1)."""
    G = _generator_array(C)
    return ExactMatrix(C.ctx, C.k, C.n, tuple(int(x) for x in G.ravel()))


def hermitian_inner(ctx: FieldCtx, x: Sequence[Fq2Elem], y: Sequence[Fq2Elem]) -> Fq2Elem:
    """sum_i x_i y_i^q."""
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return ctx.dot(x, [ctx.frobenius(b) for b in y])


def hermitian_gram(C: Union[GrsCode, ExactMatrix]) -> ExactMatrix:
    """G (G^(q))^T; zero exactly when the code is Hermitian self-orthogonal."""
    if isinstance(C, GrsCode):
        ctx, G = C.ctx, _generator_array(C)
    else:
        ctx, G = C.ctx, C.to_numpy()
    k = G.shape[0]
    Gq = ctx.vpow(G, ctx.q)
    prods = ctx.vmul(G[:, None, :], Gq[None, :, :])
    gram = ctx.vsum(prods, axis=-1) if k else np.zeros((0, 0), dtype=np.int64)
    return ExactMatrix(ctx, k, k, tuple(int(x) for x in np.asarray(gram).ravel()))


def power_sums(C: GrsCode) -> np.ndarray:
    """k x k array of <a^(qi+j), v^(q+1)>."""
    ctx = C.ctx
    a = np.array(C.a, dtype=np.int64)
    u = ctx.vpow(np.array(C.v, dtype=np.int64), ctx.q + 1)
    i = np.arange(C.k)
    expo = ctx.q * i[:, None] + i[None, :]
    terms = ctx.vmul(ctx.vpow(a[None, None, :], expo[:, :, None]), u[None, None, :])
    return ctx.vsum(terms, axis=-1)


def power_sum_check(C: GrsCode) -> bool:
    return not power_sums(C).any()


@dataclass(frozen=True)
class MdsVerdict:
    ok: bool
    probabilistic: bool
    subsets_checked: int

    def __bool__(self) -> bool:
        return self.ok


def is_mds(
    C: Union[GrsCode, ExactMatrix],
    *,
    exhaustive_bound: int = EXHAUSTIVE_SUBSET_BOUND,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> MdsVerdict:
    """Check that every k columns of the generator matrix are independent.

    Exhaustive when C(n, k) <= exhaustive_bound, otherwise ``samples`` random
    k-subsets are checked and the verdict is flagged probabilistic.
    """
    if isinstance(C, GrsCode):
        ctx, G = C.ctx, _generator_array(C)
    else:
        ctx, G = C.ctx, C.to_numpy()
    k, n = G.shape
    if math.comb(n, k) <= exhaustive_bound:
        ok, seen = all_subsets_nonsingular(ctx, G, itertools.combinations(range(n), k))
        return MdsVerdict(ok, False, seen)
    ok, seen = all_subsets_nonsingular(ctx, G, random_subsets(n, k, samples, seed))
    return MdsVerdict(ok, True, seen)


def codeword_count(C: GrsCode) -> int:
    return C.ctx.order ** C.k


def min_distance_enumerate(C: Union[GrsCode, ExactMatrix], bound: int = ENUMERATION_BOUND) -> int:
    """Exact minimum weight over all nonzero codewords.

    Only messages whose first nonzero coordinate is 1 are visited; every
    other nonzero codeword is a scalar multiple of one of those and has the
    same weight.
    """
    if isinstance(C, GrsCode):
        ctx, G = C.ctx, _generator_array(C)
    else:
        ctx, G = C.ctx, C.to_numpy()
    k, n = G.shape
    Q = ctx.order
    if Q**k > bound:
        raise EnumerationBoundError(f"(q^2)^k = {Q ** k} codewords exceed bound {bound}")
    elems = np.arange(Q, dtype=np.int64)
    # all multiples c * G[row] for c in GF(q^2)
    scaled = [ctx.vmul(elems[:, None], G[row][None, :]) for row in range(k)]
    best = n + 1
    for lead in range(k):
        tail = list(range(lead + 1, k))
        # vectorise over as many trailing rows as fit in the block budget
        j = 0
        while j < len(tail) and Q ** (j + 1) * n <= _BLOCK_BUDGET:
            j += 1
        inner_rows, outer_rows = tail[len(tail) - j:], tail[:len(tail) - j]
        block = G[lead][None, :]
        for row in inner_rows:
            block = ctx.vadd(block[:, None, :], scaled[row][None, :, :]).reshape(-1, n)
        for coeffs in itertools.product(range(Q), repeat=len(outer_rows)):
            offset = np.zeros(n, dtype=np.int64)
            for row, c in zip(outer_rows, coeffs):
                offset = ctx.vadd(offset, scaled[row][c])
            words = ctx.vadd(block, offset[None, :])
            w = int(np.count_nonzero(words, axis=1).min())
            if w < best:
                best = w
    return best
