"""Dense exact linear algebra over GF(q^2).

Small matrices (the multiplier systems, Gram matrices) go through the pure
Python :class:`ExactMatrix`.  Checks that touch many column subsets at once
use :func:`batch_nonsingular`, a numpy elimination over a stack of square
matrices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf import FieldCtx, Fq2Elem

EXHAUSTIVE_SUBSET_BOUND = 10**6
_BATCH = 20_000


class DescentError(ArithmeticError):
    """A descent solver's hypotheses do not hold for the given matrix."""


class RankDeficitError(DescentError):
    pass


class RowEquivalenceError(DescentError):
    pass


class ZeroEntryError(DescentError):
    pass


class SubsetBoundError(ValueError):
    """Too many column subsets for an exhaustive check."""


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    ctx: FieldCtx
    rows: int
    cols: int
    entries: tuple[Fq2Elem, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[Fq2Elem]], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(ctx, len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "ExactMatrix":
        return cls(ctx, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "ExactMatrix":
        return cls.from_rows(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> Fq2Elem:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fq2Elem]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fq2Elem]]:
        return [self.row(i) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.ctx == other.ctx and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def columns(self, idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.from_rows(self.ctx, [[r[j] for j in idx] for r in self.to_rows()], len(idx))

    def delete_column(self, j: int) -> "ExactMatrix":
        return self.columns([c for c in range(self.cols) if c != j])

    def apply(self, vec: Sequence[Fq2Elem]) -> list[Fq2Elem]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return [self.ctx.dot(self.row(i), vec) for i in range(self.rows)]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {self.to_rows()})"


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    ctx = M.ctx
    A = M.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        piv = next((i for i in range(r, M.rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = ctx.inv(A[r][c])
        A[r] = [ctx.mul(inv, x) for x in A[r]]
        for i in range(M.rows):
            f = A[i][c]
            if i != r and f:
                nf = ctx.neg(f)
                A[i] = [ctx.add(x, ctx.mul(nf, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return ExactMatrix.from_rows(ctx, A, M.cols), pivots


def rank(M: ExactMatrix) -> int:
    return len(rref(M)[1])


def nullspace(M: ExactMatrix) -> list[list[Fq2Elem]]:
    """Basis of the right kernel, one vector per free column."""
    ctx = M.ctx
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [0] * M.cols
        vec[fcol] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = ctx.neg(R[i, fcol])
        basis.append(vec)
    return basis


def entrywise_frobenius(M: ExactMatrix) -> ExactMatrix:
    ctx = M.ctx
    return ExactMatrix(ctx, M.rows, M.cols, tuple(ctx.frobenius(x) for x in M.entries))


def row_equivalent(A: ExactMatrix, B: ExactMatrix) -> bool:
    return rref(A)[0] == rref(B)[0]


# --- batched nonsingularity ------------------------------------------------


def batch_nonsingular(ctx: FieldCtx, mats: np.ndarray) -> np.ndarray:
    """Boolean mask: which of the square matrices ``mats[b]`` are invertible."""
    A = np.array(mats, dtype=np.int64, copy=True)
    B, n, n2 = A.shape
    if n != n2:
        raise ValueError("batch_nonsingular needs square matrices")
    ok = np.ones(B, dtype=bool)
    ar = np.arange(B)
    for c in range(n):
        nz = A[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = nz.argmax(axis=1) + c
        top = A[ar, c, :].copy()
        A[ar, c, :] = A[ar, piv, :]
        A[ar, piv, :] = top
        if c + 1 == n:
            break
        pv = A[:, c, c]
        scale = ctx.vneg(ctx.vinv(np.where(pv == 0, 1, pv)))
        f = ctx.vmul(A[:, c + 1:, c], scale[:, None])
        A[:, c + 1:, :] = ctx.vadd(A[:, c + 1:, :], ctx.vmul(f[:, :, None], A[:, None, c, :]))
    return ok


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def all_subsets_nonsingular(ctx: FieldCtx, M: np.ndarray, subsets: Iterable[Sequence[int]]) -> tuple[bool, int]:
    """True iff every listed column subset of M (rows x r) is nonsingular.

    Returns the verdict together with the number of subsets inspected
    (stops at the first singular batch).
    """
    M = np.asarray(M, dtype=np.int64)
    seen = 0
    for block in _chunks(iter(subsets), _BATCH):
        idx = np.asarray(block, dtype=np.int64)
        mats = np.transpose(M[:, idx], (1, 0, 2))
        seen += len(block)
        if not batch_nonsingular(ctx, mats).all():
            return False, seen
    return True, seen


def random_subsets(n: int, r: int, count: int, seed: int) -> Iterator[np.ndarray]:
    rng = np.random.default_rng(seed)
    left = count
    while left > 0:
        b = min(left, _BATCH)
        keys = rng.random((b, n))
        yield from np.sort(np.argpartition(keys, r - 1, axis=1)[:, :r], axis=1)
        left -= b


def any_r_columns_independent(M: ExactMatrix, r: int, bound: int = EXHAUSTIVE_SUBSET_BOUND) -> bool:
    """Exhaustive check that every r-subset of the columns has rank r."""
    if r > M.cols:
        raise ValueError("r exceeds the number of columns")
    if r == 0:
        return True
    if M.rows < r:
        return False
    if math.comb(M.cols, r) > bound:
        raise SubsetBoundError(f"C({M.cols},{r}) exceeds exhaustive bound {bound}")
    A = M.to_numpy()
    if M.rows > r:
        # r independent columns <=> some r x r minor is nonzero; reduce rows
        # to a basis of the row space first.
        R, piv = rref(M)
        if len(piv) < r:
            return False
        A = R.to_numpy()[: len(piv)]
        if len(piv) > r:
            return all(rank(M.columns(c)) == r for c in itertools.combinations(range(M.cols), r))
    return all_subsets_nonsingular(M.ctx, A, itertools.combinations(range(M.cols), r))[0]


# --- descent solvers -------------------------------------------------------


def _normalize(ctx: FieldCtx, w: list[Fq2Elem]) -> list[Fq2Elem]:
    lead = next(x for x in w if x)
    inv = ctx.inv(lead)
    return [ctx.mul(inv, x) for x in w]


def frobenius_descent_solve(A: ExactMatrix) -> list[Fq2Elem]:
    """Kernel vector of an r x (r+1) system with all entries in GF(q)*.

    Hypotheses: any r columns independent, and A row-equivalent to its
    entrywise Frobenius image.  Each failed hypothesis raises its own
    :class:`DescentError` subclass.
    """
    ctx = A.ctx
    r = A.rows
    if r < 1 or A.cols != r + 1:
        raise ValueError(f"expected an r x (r+1) matrix, got {A.rows}x{A.cols}")
    if not any_r_columns_independent(A, r):
        raise RankDeficitError("some r columns of A are linearly dependent")
    if not row_equivalent(A, entrywise_frobenius(A)):
        raise RowEquivalenceError("A and its Frobenius image are not row equivalent")
    kernel = nullspace(A)
    if len(kernel) != 1:
        raise RankDeficitError(f"kernel has dimension {len(kernel)}, expected 1")
    w = _normalize(ctx, kernel[0])
    i0 = next(i for i, x in enumerate(w) if x)
    lam = ctx.div(ctx.frobenius(w[i0]), w[i0])
    if [ctx.frobenius(x) for x in w] != [ctx.mul(lam, x) for x in w]:
        raise RowEquivalenceError("Frobenius image of the kernel vector is not a multiple of it")
    L = ctx.dlog(lam)
    if L % (ctx.q - 1):
        raise RowEquivalenceError("lambda is not a (q+1)-th root of unity")
    # c^(q-1) = lambda^-1
    c = ctx.omega_pow((-(L // (ctx.q - 1))) % (ctx.q + 1))
    u = [ctx.mul(c, x) for x in w]
    if any(x == 0 for x in u):
        raise ZeroEntryError("kernel vector has a zero coordinate")
    if not all(ctx.is_in_base_subfield(x) for x in u):
        raise RowEquivalenceError("descended vector is not GF(q)-rational")
    if any(A.apply(u)):
        raise DescentError("descended vector does not solve the system")
    return u


def paired_descent_solve(M: ExactMatrix) -> list[Fq2Elem]:
    """Solution in (GF(q)*)^tau of a (tau-2) x tau system.

    Solves the two subsystems with the first / last column deleted, then
    combines them as ``(0, u) - alpha (v, 0)`` with alpha in GF(q)* avoiding
    the ratios u_i / v_i.
    """
    ctx = M.ctx
    tau = M.cols
    if M.rows != tau - 2:
        raise ValueError(f"expected a (tau-2) x tau matrix, got {M.rows}x{M.cols}")
    if tau < 3:
        raise ValueError("tau must be at least 3")
    if tau >= ctx.q + 1:
        raise DescentError(f"tau={tau} >= q+1={ctx.q + 1}: no admissible alpha is guaranteed")
    if not row_equivalent(M, entrywise_frobenius(M)):
        raise RowEquivalenceError("M and its Frobenius image are not row equivalent")
    if not any_r_columns_independent(M, tau - 2):
        raise RankDeficitError("some tau-2 columns of M are linearly dependent")
    u = frobenius_descent_solve(M.delete_column(0))        # coordinates 2..tau
    v = frobenius_descent_solve(M.delete_column(tau - 1))  # coordinates 1..tau-1
    bad = {ctx.div(u[i - 1], v[i]) for i in range(1, tau - 1)}
    alpha = next((g for g in ctx.subfield_elements() if g not in bad), None)
    if alpha is None:  # pragma: no cover - impossible when tau < q+1
        raise DescentError("no admissible alpha")
    left = [0] + u
    right = v + [0]
    x = [ctx.sub(a, ctx.mul(alpha, b)) for a, b in zip(left, right)]
    if any(c == 0 for c in x):
        raise ZeroEntryError("combined vector has a zero coordinate")
    if any(M.apply(x)):
        raise DescentError("combined vector does not solve the system")
    return x
