"""Exact probability-vector arithmetic and the majorization order.

Everything in this module computes with `fractions.Fraction`, so verdicts,
prefix gaps, and witness matrices are exact.  Floating point appears nowhere
here; the numeric search lives in :mod:`trumpkit.solver` and always hands its
candidates back to these functions for certification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AllZero,
    DimensionMismatch,
    NegativeEntry,
    NotMajorized,
    TargetTooSmall,
    TrumpkitError,
)

__all__ = [
    "ProbVec",
    "SortedProbVec",
    "MajorizationReport",
    "DoublyStochasticMatrix",
    "as_fraction",
    "pv",
    "uniform_vector",
    "normalize",
    "sort_desc",
    "tensor",
    "pad_zeros",
    "majorizes",
    "majorizes_alt",
    "t_transform_chain",
    "ds_witness",
    "sample_S",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, strings, Fractions, and floats to an exact Fraction.

    Strings may be decimal ("0.25") or ratio ("1/4") notation.  Floats are
    read through their shortest repr, so ``as_fraction(0.4)`` is exactly 2/5
    rather than the binary double closest to it.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class ProbVec:
    """A probability vector: nonnegative rationals with exact sum 1."""

    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = tuple(as_fraction(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise TrumpkitError("a probability vector needs at least one component")
        for c in comps:
            if c < 0:
                raise NegativeEntry(f"negative component {c}")
        total = sum(comps)
        if total != 1:
            raise TrumpkitError(f"components sum to {total}, expected exactly 1")

    @property
    def dim(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


class SortedProbVec(ProbVec):
    """A ProbVec whose components are non-increasing."""

    def __post_init__(self):
        super().__post_init__()
        comps = self.components
        for a, b in zip(comps, comps[1:]):
            if a < b:
                raise TrumpkitError(f"components not sorted non-increasingly: {a} < {b}")


def pv(*components) -> ProbVec:
    """Shorthand constructor: ``pv(0.4, 0.4, 0.1, 0.1)``."""
    return ProbVec(tuple(as_fraction(c) for c in components))


def uniform_vector(dim: int) -> SortedProbVec:
    """The flat vector (1/dim, ..., 1/dim)."""
    if dim < 1:
        raise TrumpkitError("dimension must be at least 1")
    return SortedProbVec((Fraction(1, dim),) * dim)


def normalize(raw: Iterable) -> ProbVec:
    """Scale a nonnegative, not-all-zero vector so it sums to exactly 1.

    Raises
    ------
    NegativeEntry
        if any entry is negative.  Signed inputs are rejected outright rather
        than shifted, because shifting silently changes what the vector means.
    AllZero
        if every entry is zero.
    """
    vals = [as_fraction(v) for v in raw]
    for v in vals:
        if v < 0:
            raise NegativeEntry(f"negative entry {v}")
    total = sum(vals)
    if total == 0:
        raise AllZero("all entries are zero")
    return ProbVec(tuple(v / total for v in vals))


def sort_desc(v: ProbVec) -> SortedProbVec:
    """Sort components into non-increasing order (stable among ties)."""
    return SortedProbVec(tuple(sorted(v.components, reverse=True)))


def tensor(x: ProbVec, z: ProbVec) -> ProbVec:
    """Componentwise product distribution: entry (i, j) is x_i * z_j.

    The output is ordered with i major and j minor; ordering never affects
    any majorization verdict downstream, which sorts anyway.
    """
    return ProbVec(tuple(xi * zj for xi in x.components for zj in z.components))


def pad_zeros(v: ProbVec, dim: int) -> ProbVec:
    """Append zero components until the vector has the requested dimension."""
    if dim < v.dim:
        raise TargetTooSmall(f"cannot pad dimension {v.dim} down to {dim}")
    return ProbVec(v.components + (Fraction(0),) * (dim - v.dim))


@dataclass(frozen=True)
class MajorizationReport:
    """Outcome of one exact prefix-sum comparison.

    prefix_gaps[l-1] is (sum of the l largest of y) - (sum of the l largest
    of x), for l = 1 .. dim-1.  The verdict is true exactly when every gap is
    nonnegative; tight_indices lists the l where the gap is zero.
    """

    verdict: bool
    prefix_gaps: tuple[Fraction, ...]
    tight_indices: tuple[int, ...]

    @property
    def min_gap(self) -> Fraction:
        return min(self.prefix_gaps)


def majorizes(x: ProbVec, y: ProbVec) -> MajorizationReport:
    """Decide whether y majorizes x, with the full gap profile.

    Both vectors must have equal dimension; use :func:`pad_zeros` first when
    they differ, since padding is a modelling decision the caller must own.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    xs = sort_desc(x).components
    ys = sort_desc(y).components
    gaps = []
    cx = cy = Fraction(0)
    for l in range(x.dim - 1):
        cx += xs[l]
        cy += ys[l]
        gaps.append(cy - cx)
    verdict = all(g >= 0 for g in gaps)
    tight = tuple(l for l, g in enumerate(gaps, start=1) if g == 0)
    return MajorizationReport(verdict, tuple(gaps), tight)


def majorizes_alt(x: ProbVec, y: ProbVec) -> tuple[bool, bool]:
    """Two independent reformulations of the same order, for cross-checking.

    Returns ``(tail_verdict, tsum_verdict)``:

    * tail_verdict: every trailing sum of sorted x is at least the matching
      trailing sum of sorted y (equivalent to the prefix test because both
      totals are 1).
    * tsum_verdict: sum_i |x_i - t| <= sum_i |y_i - t| for every real t.
      Both sides are piecewise linear in t, their breakpoints are component
      values, and they agree as t -> +-inf because the totals are equal, so
      checking t at every component of either vector decides the claim for
      all real t.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    xs = sort_desc(x).components
    ys = sort_desc(y).components

    tail_verdict = True
    sx = sy = Fraction(0)
    for i in range(x.dim - 1, 0, -1):
        sx += xs[i]
        sy += ys[i]
        if sx < sy:
            tail_verdict = False
            break

    tsum_verdict = True
    for t in sorted(set(xs) | set(ys)):
        if sum(abs(c - t) for c in xs) > sum(abs(c - t) for c in ys):
            tsum_verdict = False
            break

    return tail_verdict, tsum_verdict


@dataclass(frozen=True)
class DoublyStochasticMatrix:
    """A square matrix of rationals whose rows and columns each sum to 1."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        rows = tuple(tuple(as_fraction(e) for e in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        for row in rows:
            if len(row) != n:
                raise TrumpkitError("matrix is not square")
            for e in row:
                if e < 0:
                    raise NegativeEntry(f"negative matrix entry {e}")
            if sum(row) != 1:
                raise TrumpkitError("a row does not sum to 1")
        for j in range(n):
            if sum(row[j] for row in rows) != 1:
                raise TrumpkitError("a column does not sum to 1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product with exact arithmetic."""
        if len(v) != self.dim:
            raise DimensionMismatch(f"matrix dim {self.dim} vs vector dim {len(v)}")
        return tuple(sum(row[j] * v[j] for j in range(self.dim)) for row in self.entries)

    @staticmethod
    def identity(dim: int) -> "DoublyStochasticMatrix":
        one, zero = Fraction(1), Fraction(0)
        return DoublyStochasticMatrix(
            tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
        )


def _matmul(a: DoublyStochasticMatrix, b: DoublyStochasticMatrix) -> DoublyStochasticMatrix:
    n = a.dim
    if b.dim != n:
        raise DimensionMismatch("matrix dimensions differ")
    rows = tuple(
        tuple(sum(a.entries[i][k] * b.entries[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return DoublyStochasticMatrix(rows)


def _t_transform(dim: int, i: int, j: int, lam: Fraction) -> DoublyStochasticMatrix:
    """lam * I + (1 - lam) * (transposition of coordinates i and j)."""
    one, zero = Fraction(1), Fraction(0)
    rows = [[one if r == c else zero for c in range(dim)] for r in range(dim)]
    rows[i][i] = lam
    rows[j][j] = lam
    rows[i][j] = 1 - lam
    rows[j][i] = 1 - lam
    return DoublyStochasticMatrix(tuple(tuple(r) for r in rows))


def t_transform_chain(x: ProbVec, y: ProbVec) -> list[DoublyStochasticMatrix]:
    """Averaging steps T_1, ..., T_m with x↓ = T_m ... T_1 y↓ and m <= dim-1.

    Each step averages exactly two coordinates of the current vector: take i
    as the largest index where the current vector still exceeds x↓, j as the
    first later index where it falls short, and transfer the smaller of the
    two discrepancies.  Every step fixes at least one coordinate and never
    disturbs a fixed one, so at most dim-1 steps are needed.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    if not majorizes(x, y).verdict:
        raise NotMajorized("no doubly stochastic witness exists: majorization fails")
    xs = list(sort_desc(x).components)
    cur = list(sort_desc(y).components)
    dim = len(xs)
    chain: list[DoublyStochasticMatrix] = []
    while cur != xs:
        i = max(idx for idx in range(dim) if cur[idx] > xs[idx])
        j = min(idx for idx in range(i + 1, dim) if cur[idx] < xs[idx])
        delta = min(cur[i] - xs[i], xs[j] - cur[j])
        lam = 1 - delta / (cur[i] - cur[j])
        chain.append(_t_transform(dim, i, j, lam))
        cur[i] -= delta
        cur[j] += delta
        if len(chain) > dim:
            raise TrumpkitError("internal: averaging chain failed to terminate")
    return chain


def ds_witness(x: ProbVec, y: ProbVec) -> DoublyStochasticMatrix:
    """A doubly stochastic D with D y↓ = x↓ exactly.

    Raises NotMajorized when y does not majorize x, since no such matrix
    exists in that case.
    """
    chain = t_transform_chain(x, y)
    d = DoublyStochasticMatrix.identity(x.dim)
    for t in chain:
        d = _matmul(t, d)
    if d.apply(sort_desc(y).components) != sort_desc(x).components:
        raise TrumpkitError("internal: witness matrix failed verification")
    return d


def sample_S(y: ProbVec, n: int, seed: int) -> list[ProbVec]:
    """n random vectors majorized by y, exactly.

    Each sample is a convex combination, with rational weights, of random
    permutations of y; such mixtures are precisely the vectors reachable from
    y by doubly stochastic maps, so membership needs no further checking.
    """
    rng = random.Random(seed)
    dim = y.dim
    out: list[ProbVec] = []
    for _ in range(n):
        m = rng.randint(2, dim + 1)
        weights = [rng.randint(1, 20) for _ in range(m)]
        wsum = sum(weights)
        acc = [Fraction(0)] * dim
        for w in weights:
            perm = list(range(dim))
            rng.shuffle(perm)
            for pos, src in enumerate(perm):
                acc[pos] += Fraction(w, wsum) * y.components[src]
        out.append(ProbVec(tuple(acc)))
    return out
