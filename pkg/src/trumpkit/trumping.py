"""Catalytic majorization: certificates, classification, and witnesses.

A catalyst z turns "x is not majorized by y" into "x tensor z is majorized
by y tensor z" for some pairs (x, y).  This module decides single instances
exactly, classifies which targets y can benefit from a catalyst at all, and
constructs explicit witness vectors for both directions of that dichotomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    MajorizationReport,
    ProbVec,
    SortedProbVec,
    majorizes,
    normalize,
    sort_desc,
    tensor,
)
from .errors import (
    DimensionMismatch,
    NotMajorized,
    NotStrict,
    NotUseful,
    PreconditionViolated,
    TrumpkitError,
    UniformCatalyst,
)

__all__ = [
    "TrumpCertificate",
    "CatalysisClassification",
    "GeometricCatalyst",
    "SeparationWitness",
    "trumps_with",
    "classify",
    "boundary_witness",
    "geometric_catalyst",
    "interior_radius",
    "separating_example",
    "nonuniform_demo",
]


@dataclass(frozen=True)
class TrumpCertificate:
    """Exact evidence that x tensor z is majorized by y tensor z.

    The report carries every prefix gap of the lifted comparison, computed in
    rational arithmetic; all_strict records whether all of them are positive.
    """

    x: ProbVec
    y: ProbVec
    z: ProbVec
    report: MajorizationReport
    all_strict: bool

    def __post_init__(self):
        if not self.report.verdict:
            raise TrumpkitError("a certificate requires a passing comparison")
        if self.all_strict != (len(self.report.tight_indices) == 0):
            raise TrumpkitError("all_strict contradicts the gap profile")


def trumps_with(x: ProbVec, y: ProbVec, z: ProbVec) -> TrumpCertificate | None:
    """Check x tensor z against y tensor z exactly; certificate or None."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    report = majorizes(tensor(x, z), tensor(y, z))
    if not report.verdict:
        return None
    return TrumpCertificate(x, y, z, report, all_strict=not report.tight_indices)


@dataclass(frozen=True)
class CatalysisClassification:
    """Whether catalysts can reach anything beyond plain majorization of y.

    d1 counts components equal to the largest, d2 components equal to the
    smallest.  Catalysis helps exactly when at least two components differ
    from both extremes, i.e. d1 + d2 + 2 <= dim.  When useful, l and m are
    the 1-based positions (in sorted order) of the first component below the
    maximum and the last component above the minimum.
    """

    useful: bool
    d1: int
    d2: int
    l: int | None
    m: int | None


def classify(y: ProbVec) -> CatalysisClassification:
    ys = sort_desc(y).components
    dim = len(ys)
    d1 = sum(1 for c in ys if c == ys[0])
    d2 = sum(1 for c in ys if c == ys[-1])
    useful = d1 + d2 + 2 <= dim
    return CatalysisClassification(
        useful=useful,
        d1=d1,
        d2=d2,
        l=d1 + 1 if useful else None,
        m=dim - d2 if useful else None,
    )


def boundary_witness(y: ProbVec) -> SortedProbVec:
    """A vector on the boundary of the majorization region that catalysis
    moves strictly inside the catalytic region.

    Built from sorted y by averaging the first d1+1 components into one
    block, averaging the last d2+1 components into another, and copying
    everything between.  The result is majorized by y with the prefix at
    l = d1+1 exactly tight.
    """
    c = classify(y)
    if not c.useful:
        raise NotUseful("no component differs from both extremes of y")
    ys = sort_desc(y).components
    dim = len(ys)
    head = sum(ys[: c.d1 + 1], Fraction(0)) / (c.d1 + 1)
    tail = sum(ys[dim - c.d2 - 1 :], Fraction(0)) / (c.d2 + 1)
    comps = (head,) * (c.d1 + 1) + ys[c.d1 + 1 : dim - c.d2 - 1] + (tail,) * (c.d2 + 1)
    x = SortedProbVec(comps)
    report = majorizes(x, y)
    if not report.verdict or (c.d1 + 1) not in report.tight_indices:
        raise TrumpkitError("internal: averaged witness failed its gap profile")
    return x


@dataclass(frozen=True)
class GeometricCatalyst:
    """A catalyst (1, alpha, ..., alpha^(k-1)) / normalizer, alpha in (0, 1)."""

    alpha: Fraction
    k: int
    z: SortedProbVec


def geometric_catalyst(x: ProbVec, y: ProbVec) -> GeometricCatalyst:
    """A catalyst certifying x strictly inside the catalytic region of y.

    Preconditions (checked, in sorted order): y majorizes x, the largest
    component of y strictly exceeds that of x, and the smallest component of
    y is strictly below that of x.  Under those, the ratio

        alpha = (1 + max(x1/y1, yd/xd)) / 2

    lies in (max(x1/y1, yd/xd), 1), and the geometric catalyst with the
    smallest k satisfying x1 * alpha^(k-1) < xd makes every prefix gap of the
    lifted comparison strictly positive.  Strictness is verified here by
    exhaustive exact enumeration of all dim*k - 1 gaps before returning.
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions differ: {x.dim} vs {y.dim}")
    xs = sort_desc(x).components
    ys = sort_desc(y).components
    failed = []
    if not majorizes(x, y).verdict:
        failed.append("y must majorize x")
    if not ys[0] > xs[0]:
        failed.append("largest component of y must exceed largest of x")
    if not ys[-1] < xs[-1]:
        failed.append("smallest component of y must be below smallest of x")
    if failed:
        raise PreconditionViolated("; ".join(failed))

    alpha = (1 + max(xs[0] / ys[0], ys[-1] / xs[-1])) / 2
    k = 1
    p = xs[0]
    while p >= xs[-1]:
        p *= alpha
        k += 1
    z = normalize([alpha**i for i in range(k)])
    z = SortedProbVec(z.components)
    cert = trumps_with(x, y, z)
    if cert is None or not cert.all_strict:
        raise TrumpkitError("internal: geometric catalyst failed strict verification")
    return GeometricCatalyst(alpha=alpha, k=k, z=z)


def interior_radius(x: ProbVec, y: ProbVec, z: ProbVec) -> Fraction:
    """Largest r such that every x' with ||x' - x||_1 < r keeps the lifted
    comparison passing with the same catalyst.

    r is the minimum prefix gap of x tensor z against y tensor z.  Moving x
    by total variation below r moves each sorted prefix sum of x tensor z by
    less than r (z is normalized), so no gap can reach zero.  Requires every
    gap strictly positive to begin with.
    """
    cert = trumps_with(x, y, z)
    if cert is None:
        raise NotMajorized("the lifted comparison fails; no radius exists")
    if not cert.all_strict:
        raise NotStrict(f"zero gap at prefix index(es) {cert.report.tight_indices}")
    return min(cert.report.prefix_gaps)


@dataclass(frozen=True)
class SeparationWitness:
    """A vector strictly inside the catalytic region yet outside the plain
    majorization region, with exact evidence for both claims."""

    x_prime: ProbVec
    y: ProbVec
    certificate: TrumpCertificate
    not_majorized_proof: MajorizationReport

    def __post_init__(self):
        if self.not_majorized_proof.verdict:
            raise TrumpkitError("witness must fail plain majorization")


def separating_example(y: ProbVec) -> SeparationWitness:
    """Construct a point separating the catalytic region from the plain
    majorization region of y, whenever the classification says one exists.

    Starts from the averaged boundary witness, certifies it strictly inside
    the catalytic region with a geometric catalyst, then nudges mass from the
    last component onto the tight prefix.  The nudge breaks plain
    majorization at l = d1+1 immediately, while staying within half the
    interior radius keeps the lifted comparison passing.
    """
    c = classify(y)
    if not c.useful:
        raise NotUseful("no component differs from both extremes of y")
    ysorted = sort_desc(y)
    x = boundary_witness(y)
    geo = geometric_catalyst(x, ysorted)
    r = interior_radius(x, ysorted, geo.z)
    eps = min(r / 4, x.components[-1] / 2)
    comps = list(x.components)
    comps[c.d1] += eps
    comps[-1] -= eps
    x_prime = ProbVec(tuple(comps))
    proof = majorizes(x_prime, ysorted)
    cert = trumps_with(x_prime, ysorted, geo.z)
    if proof.verdict or cert is None:
        raise TrumpkitError("internal: separation construction failed verification")
    return SeparationWitness(x_prime=x_prime, y=ysorted, certificate=cert, not_majorized_proof=proof)


def nonuniform_demo(z: ProbVec) -> SeparationWitness:
    """Show that any non-uniform catalyst strictly helps some 4-dim pair.

    Zero components of z are dropped first (they never change a lifted
    comparison); the remaining support must contain two distinct values.
    With a = z_max/(z_max + z_min) and b = z_min/(z_max + z_min) the pair

        x = (a/2 + b/4, a/2 + b/4, b/4, b/4),  y = (a, b/2, b/2, 0)

    satisfies the lifted comparison with every gap strictly positive, which
    is verified here by exact enumeration.  Nudging x by an eighth of the
    interior radius then yields a vector catalyzed by z but no longer
    majorized by y, because the top-two sums of x and y are exactly equal.
    """
    zs = tuple(c for c in sort_desc(z).components if c > 0)
    if all(c == zs[0] for c in zs):
        raise UniformCatalyst("all nonzero components are equal")
    z_clean = SortedProbVec(zs)
    a = zs[0] / (zs[0] + zs[-1])
    b = zs[-1] / (zs[0] + zs[-1])
    x = SortedProbVec((a / 2 + b / 4, a / 2 + b / 4, b / 4, b / 4))
    y = SortedProbVec((a, b / 2, b / 2, Fraction(0)))
    base = trumps_with(x, y, z_clean)
    if base is None or not base.all_strict:
        raise TrumpkitError("internal: strict lifted comparison expected for this pair")
    r = min(base.report.prefix_gaps)
    eps = r / 8
    x_prime = ProbVec((x[0] + eps, x[1] + eps, x[2] - eps, x[3] - eps))
    proof = majorizes(x_prime, y)
    cert = trumps_with(x_prime, y, z_clean)
    if proof.verdict or cert is None:
        raise TrumpkitError("internal: nudged vector failed verification")
    return SeparationWitness(x_prime=x_prime, y=y, certificate=cert, not_majorized_proof=proof)
