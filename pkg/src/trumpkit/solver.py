"""Catalyst search: floating-point descent, exact certification.

The search side works in floats for speed; nothing it believes is trusted.
Any candidate catalyst that looks feasible is converted to small rationals
and re-checked with exact arithmetic before being reported, so a certified
result is a proof about the inputs, while a failed search proves nothing.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

import numpy as np

from .core import (
    ProbVec,
    SortedProbVec,
    majorizes,
    sort_desc,
    uniform_vector,
)
from .errors import (
    DimensionMismatch,
    NotNormalizable,
    NotUseful,
    TrumpkitError,
)
from .trumping import TrumpCertificate, classify, trumps_with
from .util import parallel_map

__all__ = [
    "SearchStatus",
    "SearchConfig",
    "SearchResult",
    "RayProbeResult",
    "h_value",
    "minimize_f",
    "rationalize",
    "find_catalyst",
    "ray_probe",
]


class SearchStatus(Enum):
    CERTIFIED_FOUND = "CertifiedFound"
    NUMERIC_ONLY = "NumericOnly"
    NOT_FOUND = "NotFound"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the numeric search.  Identical configs give identical
    results, whatever the worker count."""

    k: int = 1
    restarts: int = 8
    max_iters: int = 40
    seed: int = 0
    float_tolerance: float = 1e-9
    max_denominator: int = 10**6

    def __post_init__(self):
        if self.k < 1:
            raise TrumpkitError("catalyst dimension must be at least 1")
        if self.restarts < 1:
            raise TrumpkitError("need at least one restart")
        if self.max_iters < 1:
            raise TrumpkitError("need at least one iteration")
        if not (0 < self.float_tolerance < 1):
            raise TrumpkitError("float_tolerance must lie in (0, 1)")
        if self.max_denominator < 2:
            raise TrumpkitError("max_denominator must be at least 2")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a catalyst search.

    f_value is the worst prefix-sum excess of the lifted comparison at
    z_float (nonpositive means numerically feasible).  certificate is present
    exactly when status is CERTIFIED_FOUND.  impossible_by_extremes is set
    when the search was skipped because the largest component of x exceeds
    that of y or the smallest falls below, which no catalyst can repair.
    """

    z_float: tuple[float, ...]
    f_value: float
    certificate: TrumpCertificate | None
    status: SearchStatus
    impossible_by_extremes: bool = False

    def __post_init__(self):
        if (self.certificate is not None) != (self.status is SearchStatus.CERTIFIED_FOUND):
            raise TrumpkitError("certificate presence must match status")


def _floats(v: ProbVec) -> np.ndarray:
    return np.asarray(v.as_floats(), dtype=float)


def _simplex_floats(z) -> np.ndarray:
    if isinstance(z, ProbVec):
        return _floats(z)
    arr = np.asarray([float(c) for c in z], dtype=float)
    return arr


def _h(xf: np.ndarray, yf: np.ndarray, z: np.ndarray) -> float:
    px = np.sort(np.multiply.outer(xf, z), axis=None)[::-1]
    py = np.sort(np.multiply.outer(yf, z), axis=None)[::-1]
    diff = np.cumsum(px - py)[:-1]
    if diff.size == 0:
        return 0.0
    return float(diff.max())


def h_value(x: ProbVec, y: ProbVec, z) -> float:
    """Worst prefix-sum excess of x tensor z over y tensor z, in floats.

    Nonpositive means the lifted comparison passes up to rounding; use
    :func:`trumpkit.trumping.trumps_with` for the exact verdict.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    return _h(_floats(x), _floats(y), _simplex_floats(z))


# ---------------------------------------------------------------------------
# descent


def _line_breakpoints(values: np.ndarray, statics: np.ndarray, zi: float, zj: float,
                      lo: float, hi: float) -> list[float]:
    """Transfer amounts t in (lo, hi) where the sort order of one tensor can
    change while moving mass z_i += t, z_j -= t.

    Products a*(z_i + t) and b*(z_j - t) cross at t = (b z_j - a z_i)/(a + b);
    a moving product meets a static value s where a*(z_i + t) = s or
    b*(z_j - t) = s.  Between consecutive crossings every sorted prefix sum
    is linear in t.
    """
    ts: list[float] = []
    vals = values[values > 0]
    for a in vals:
        for b in vals:
            t = (b * zj - a * zi) / (a + b)
            if lo < t < hi:
                ts.append(t)
        for s in statics:
            t1 = s / a - zi
            if lo < t1 < hi:
                ts.append(t1)
            t2 = zj - s / a
            if lo < t2 < hi:
                ts.append(t2)
    return ts


def _golden(fn, a: float, b: float, iters: int = 24) -> tuple[float, float]:
    """Golden-section minimum of fn on [a, b]; fn convex on the bracket."""
    invphi = (np.sqrt(5.0) - 1) / 2
    c = b - (b - a) * invphi
    d = a + (b - a) * invphi
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * invphi
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * invphi
            fd = fn(d)
    return (c, fc) if fc <= fd else (d, fd)


def _descend(xf: np.ndarray, yf: np.ndarray, z0: np.ndarray, config: SearchConfig):
    """Pairwise mass-transfer descent from z0; returns (z, f)."""
    k = z0.size
    z = z0.copy()
    f = _h(xf, yf, z)
    if k == 1:
        return z, f
    for _ in range(config.max_iters):
        improved = False
        for i, j in itertools.combinations(range(k), 2):
            lo, hi = -z[i], z[j]
            if hi - lo < 1e-14:
                continue
            statics_idx = [m for m in range(k) if m not in (i, j)]

            def moved(t: float) -> float:
                znew = z.copy()
                znew[i] += t
                znew[j] -= t
                return _h(xf, yf, znew)

            ts = {lo, hi, 0.0}
            for comps in (xf, yf):
                statics = np.multiply.outer(comps, z[statics_idx]).ravel() if statics_idx else np.empty(0)
                ts.update(_line_breakpoints(comps, statics, z[i], z[j], lo, hi))
            grid = np.unique(np.round(sorted(ts), 15))
            samples = list(grid) + [0.5 * (a + b) for a, b in zip(grid, grid[1:])]
            fs = [(moved(t), t) for t in samples]
            fbest, tbest = min(fs)
            pos = int(np.searchsorted(grid, tbest))
            left = grid[max(pos - 1, 0)]
            right = grid[min(pos + 1, grid.size - 1)]
            tg, fg = _golden(moved, float(left), float(right))
            if fg < fbest:
                fbest, tbest = fg, tg
            if fbest < f - 1e-15:
                z[i] += tbest
                z[j] -= tbest
                np.clip(z, 0.0, None, out=z)
                z /= z.sum()
                f = _h(xf, yf, z)
                improved = True
        if not improved:
            break
    return z, f


_GEOMETRIC_RATIOS = (0.5, 2 / 3, 0.75, 0.875, 0.9375)


def _start_points(k: int, config: SearchConfig) -> list[np.ndarray]:
    starts = [np.full(k, 1.0 / k)]
    if k >= 2:
        for r in _GEOMETRIC_RATIOS:
            g = r ** np.arange(k)
            starts.append(g / g.sum())
    rng = np.random.default_rng([config.seed, k])
    for _ in range(config.restarts):
        d = rng.dirichlet(np.ones(k))
        starts.append(np.sort(d)[::-1])
    return starts


def _minimize_pool(x: ProbVec, y: ProbVec, config: SearchConfig):
    """All restart outcomes, merged deterministically by (f, start index)."""
    xf, yf = _floats(x), _floats(y)
    starts = _start_points(config.k, config)

    def run(pair):
        idx, z0 = pair
        z, f = _descend(xf, yf, z0, config)
        return f, idx, z

    pool = parallel_map(run, list(enumerate(starts)))
    pool.sort(key=lambda r: (r[0], r[1]))
    return pool


def minimize_f(x: ProbVec, y: ProbVec, config: SearchConfig) -> SearchResult:
    """Best numeric catalyst of dimension config.k found by multi-start
    pairwise mass-transfer descent.

    Along a transfer between two catalyst coordinates the objective is
    piecewise linear, so the line search samples every sort-order breakpoint
    and the midpoints between them, then polishes the best bracket.  Restart
    outcomes are merged by (value, start index), so the result is identical
    however restarts are scheduled.  Never certifies anything by itself.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    pool = _minimize_pool(x, y, config)
    f, _, z = pool[0]
    status = SearchStatus.NUMERIC_ONLY if f <= config.float_tolerance else SearchStatus.NOT_FOUND
    return SearchResult(tuple(float(v) for v in z), float(f), None, status)


# ---------------------------------------------------------------------------
# exact certification of numeric candidates


def rationalize(z_float, max_denominator: int) -> ProbVec:
    """Snap a float simplex point to exact rationals summing to 1.

    Each component becomes its best rational approximation with denominator
    at most max_denominator (continued-fraction convergents); the final
    component is then adjusted so the sum is exactly 1.
    """
    vals = [float(v) for v in z_float]
    cleaned = []
    for v in vals:
        if v < 0:
            if v < -1e-9:
                raise NotNormalizable(f"negative component {v}")
            v = 0.0
        cleaned.append(v)
    if abs(sum(cleaned) - 1.0) > 1e-6:
        raise NotNormalizable(f"sum {sum(cleaned)} too far from 1")
    fracs = [Fraction(v).limit_denominator(max_denominator) for v in cleaned[:-1]]
    last = 1 - sum(fracs, Fraction(0))
    if last < 0:
        raise NotNormalizable("adjusted final component is negative")
    return ProbVec(tuple(fracs) + (last,))


_GRID_DENOMS = {2: (8, 10, 12, 16, 20, 24, 32, 40, 48, 60, 64), 3: (8, 12, 16, 20, 24, 32, 48, 60)}


@functools.cache
def _grid_catalysts(k: int) -> tuple[ProbVec, ...]:
    """Deterministic sorted rational simplex points for small k.

    A thin exact net: the descent explores freely, but certification needs a
    rational point inside the feasible set, and near-degenerate feasible
    regions are easier to hit from a fixed net than by rounding one float.
    """
    if k not in _GRID_DENOMS:
        return ()
    seen: dict[tuple[Fraction, ...], None] = {}
    for q in _GRID_DENOMS[k]:
        if k == 2:
            for a in range(q - 1, (q - 1) // 2, -1):
                seen.setdefault((Fraction(a, q), Fraction(q - a, q)), None)
        else:
            for a in range(q - 2, (q - 1) // 3, -1):
                for b in range(min(a, q - a - 1), 0, -1):
                    c = q - a - b
                    if 1 <= c <= b:
                        seen.setdefault((Fraction(a, q), Fraction(b, q), Fraction(c, q)), None)
    return tuple(ProbVec(comp) for comp in seen)


_LADDER = (10, 100, 10**4, 10**6)


def _certification_candidates(pool, config: SearchConfig):
    """Rational candidates from the numeric pool: best restarts first, each
    snapped at every rung of the denominator ladder."""
    ladder = [q for q in _LADDER if q <= config.max_denominator]
    if config.max_denominator not in ladder:
        ladder.append(config.max_denominator)
    picked: list[np.ndarray] = []
    keys = set()
    for f, _, z in pool:
        key = tuple(np.round(z, 6))
        if key not in keys:
            keys.add(key)
            picked.append(z)
        if len(picked) >= 4:
            break
    seen = set()
    for z in picked:
        for q in ladder:
            try:
                cand = rationalize(z, q)
            except NotNormalizable:
                continue
            if cand.components not in seen:
                seen.add(cand.components)
                yield cand


def find_catalyst(x: ProbVec, y: ProbVec, k_max: int,
                  config: SearchConfig = SearchConfig()) -> SearchResult:
    """Search catalyst dimensions 1..k_max and certify the first hit exactly.

    Dimension 1 is plain majorization, decided exactly.  A pair whose sorted
    extremes already disqualify it (x's largest above y's largest, or x's
    smallest below y's smallest) is rejected without searching, flagged
    impossible_by_extremes.  For each k the numeric minimum is rationalized
    over a denominator ladder, then a fixed exact net of small-denominator
    catalysts is tried; the first exact certificate wins.  NOT_FOUND means
    only that the search failed, never that no catalyst exists.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    if k_max < 1:
        raise TrumpkitError("k_max must be at least 1")
    xs = sort_desc(x).components
    ys = sort_desc(y).components
    one = (1.0,)
    if xs[0] > ys[0] or xs[-1] < ys[-1]:
        return SearchResult(one, h_value(x, y, one), None, SearchStatus.NOT_FOUND,
                            impossible_by_extremes=True)

    best_f = h_value(x, y, one)
    best_z = one
    numeric_hit = best_f <= config.float_tolerance
    if majorizes(x, y).verdict:
        cert = trumps_with(x, y, ProbVec((Fraction(1),)))
        if cert is None:
            raise TrumpkitError("internal: exact and certified verdicts disagree")
        return SearchResult(one, best_f, cert, SearchStatus.CERTIFIED_FOUND)

    xf, yf = _floats(x), _floats(y)
    for k in range(2, k_max + 1):
        pool = _minimize_pool(x, y, replace(config, k=k))
        f, _, z = pool[0]
        if f < best_f:
            best_f, best_z = f, tuple(float(v) for v in z)
        if f <= config.float_tolerance:
            numeric_hit = True
            for cand in _certification_candidates(pool, config):
                cert = trumps_with(x, y, cand)
                if cert is not None:
                    return SearchResult(cand.as_floats(), h_value(x, y, cand), cert,
                                        SearchStatus.CERTIFIED_FOUND)
        for cand in _grid_catalysts(k):
            if _h(xf, yf, _floats(cand)) <= 1e-7:
                cert = trumps_with(x, y, cand)
                if cert is not None:
                    return SearchResult(cand.as_floats(), h_value(x, y, cand), cert,
                                        SearchStatus.CERTIFIED_FOUND)
    status = SearchStatus.NUMERIC_ONLY if numeric_hit else SearchStatus.NOT_FOUND
    return SearchResult(best_z, float(best_f), None, status)


# ---------------------------------------------------------------------------
# ray probing


RAY_GRID_LEVELS = 10


@dataclass(frozen=True)
class RayProbeResult:
    """Certified lower bound for how far along a fixed ray catalysts of each
    dimension up to k keep membership, with the certificate at the bound.

    ladder holds (k', t_k') for every dimension probed on the way up; bounds
    are non-decreasing because a certificate for a smaller catalyst embeds
    into any larger dimension by appending zeros.
    """

    y: SortedProbVec
    k: int
    t: Fraction
    certificate: TrumpCertificate
    ladder: tuple[tuple[int, Fraction], ...]
    x: SortedProbVec
    levels: int


def _mix(x: ProbVec, w: ProbVec, t: Fraction) -> ProbVec:
    return ProbVec(tuple(t * a + (1 - t) * b for a, b in zip(x.components, w.components)))


def ray_probe(y: ProbVec, k: int, config: SearchConfig = SearchConfig()) -> RayProbeResult:
    """Walk the segment from the flat vector toward a point just outside the
    catalytic region of y, certifying how far each catalyst dimension gets.

    The far endpoint bumps the first non-maximal component of sorted y up
    and the last non-minimal component down by the same amount, which keeps
    the endpoint out of the catalytic region entirely (it majorizes y while
    differing from it, and mutual catalysis forces equality).  For each
    dimension k' <= k a bisection over t certifies midpoints via plain
    majorization, previously found catalysts, and fresh searches; failures
    shrink the bracket but prove nothing.  Certificates found at smaller k'
    seed every later level, so the reported bounds never decrease in k'.
    """
    if k < 1:
        raise TrumpkitError("catalyst dimension must be at least 1")
    c = classify(y)
    if not c.useful:
        raise NotUseful("catalysis reaches nothing beyond plain majorization here")
    ys = sort_desc(y)
    dim = ys.dim
    first_below = c.d1
    last_above = dim - c.d2 - 1
    delta = min(ys[0] - ys[first_below], ys[last_above] - ys[-1])
    comps = list(ys.components)
    comps[first_below] += delta
    comps[last_above] -= delta
    x = SortedProbVec(tuple(comps))
    w = uniform_vector(dim)

    trivial = ProbVec((Fraction(1),))
    lo = Fraction(0)
    lo_cert = trumps_with(w, ys, trivial)
    if lo_cert is None:
        raise TrumpkitError("internal: the flat vector must satisfy every comparison")
    known: list[ProbVec] = []
    ladder: list[tuple[int, Fraction]] = []

    def probe(v: ProbVec, kk: int) -> TrumpCertificate | None:
        if majorizes(v, ys).verdict:
            return trumps_with(v, ys, trivial)
        for z in known:
            if z.dim <= kk:
                cert = trumps_with(v, ys, z)
                if cert is not None:
                    return cert
        res = find_catalyst(v, ys, kk, config)
        return res.certificate

    for kk in range(1, k + 1):
        hi = Fraction(1)
        for _ in range(RAY_GRID_LEVELS):
            mid = (lo + hi) / 2
            cert = probe(_mix(x, w, mid), kk)
            if cert is not None:
                lo, lo_cert = mid, cert
                if cert.z.dim > 1 and cert.z.components not in {z.components for z in known}:
                    known.append(cert.z)
            else:
                hi = mid
        ladder.append((kk, lo))

    return RayProbeResult(y=ys, k=k, t=lo, certificate=lo_cert,
                          ladder=tuple(ladder), x=x, levels=RAY_GRID_LEVELS)
