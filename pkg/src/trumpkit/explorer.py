"""Region mapping: sample the simplex around a target, label every point.

Produces datasets describing where plain majorization ends and certified
catalysis begins.  There is no canonical way to weight such a sample; this
sampler stratifies half uniform-like draws and half perturbed boundary
points, plus the known landmark constructions, and says so in the dataset
header.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .core import ProbVec, majorizes, sample_S, sort_desc, pv
from .errors import TrumpkitError
from .jsonio import certificate_to_dict, frac_str
from .solver import SearchConfig, minimize_f, find_catalyst
from .trumping import TrumpCertificate, boundary_witness, classify, separating_example
from .util import parallel_map

__all__ = ["RegionRecord", "sample_region", "write_region_csv"]

_SAMPLER_NOTE = (
    "stratified sample: landmarks, then alternating uniform-like simplex draws "
    "and perturbed convex mixtures of permutations of y"
)


@dataclass(frozen=True)
class RegionRecord:
    """One labeled sample point.

    f_values[i] is the numeric search minimum for catalyst dimension i+1;
    catalyst_dim_found is the dimension of the certified catalyst, or None
    when the search certified nothing (which proves nothing by itself).
    """

    x: ProbVec
    in_S: bool
    catalyst_dim_found: int | None
    f_values: tuple[float, ...]
    certificate: TrumpCertificate | None


def _uniform_like(rng: random.Random, dim: int) -> ProbVec:
    # spacings of sorted lattice draws: exact, and close to uniform on the simplex
    m = 10**4
    cuts = sorted(rng.randint(0, m) for _ in range(dim - 1))
    parts = [cuts[0]] + [b - a for a, b in zip(cuts, cuts[1:])] + [m - cuts[-1]]
    return ProbVec(tuple(Fraction(p, m) for p in parts))


def _near_boundary(rng: random.Random, y: ProbVec) -> ProbVec:
    base = sample_S(y, 1, rng.randrange(2**31))[0]
    comps = list(base.components)
    dim = len(comps)
    j = max(range(dim), key=lambda idx: comps[idx])
    i = rng.randrange(dim)
    if i == j:
        i = (j + 1) % dim
    eps = comps[j] * Fraction(rng.randint(1, 10), 40)
    comps[i] += eps
    comps[j] -= eps
    return ProbVec(tuple(comps))


def sample_region(y: ProbVec, k_max: int, n: int, seed: int,
                  config: SearchConfig = SearchConfig()) -> list[RegionRecord]:
    """n sorted sample points around y, each labeled exactly.

    Membership in the plain majorization region is decided exactly; the
    catalyst label comes from :func:`trumpkit.solver.find_catalyst`, so a
    missing catalyst label is an open question, not a negative verdict.
    Known landmark points are always included when they exist: the averaged
    boundary witness, the separating nudge, and the canonical hard point for
    the target (1/2, 1/4, 1/4, 0).
    """
    if k_max < 1:
        raise TrumpkitError("k_max must be at least 1")
    if n < 1:
        raise TrumpkitError("need at least one sample")
    rng = random.Random(seed)
    dim = y.dim

    points: list[ProbVec] = []
    if classify(y).useful:
        points.append(boundary_witness(y))
        points.append(separating_example(y).x_prime)
    if sort_desc(y).components == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(0)):
        points.append(pv(0.4, 0.4, 0.1, 0.1))
    del points[n:]
    while len(points) < n:
        if len(points) % 2 == 0:
            points.append(_uniform_like(rng, dim))
        else:
            points.append(_near_boundary(rng, y))
    points = [sort_desc(p) for p in points]

    def label(x: ProbVec) -> RegionRecord:
        in_s = majorizes(x, y).verdict
        found = find_catalyst(x, y, k_max, config)
        cert = found.certificate
        fs = tuple(
            minimize_f(x, y, replace(config, k=k)).f_value for k in range(1, k_max + 1)
        )
        return RegionRecord(
            x=x,
            in_S=in_s,
            catalyst_dim_found=cert.z.dim if cert else None,
            f_values=fs,
            certificate=cert,
        )

    return parallel_map(label, points)


def write_region_csv(records: list[RegionRecord], path: str, k_max: int) -> list[str]:
    """Write the dataset plus one certificate sidecar file per certified row.

    The first line is a '#' comment naming the sampling strategy; then a
    header row and one row per record.  Rationals appear as "p/q", reals as
    shortest round-trip decimals.  Returns the sidecar paths written.
    """
    if not records:
        raise TrumpkitError("nothing to write")
    dim = records[0].x.dim
    stem = os.path.splitext(path)[0]
    cert_dir = stem + "_certs"
    sidecars: list[str] = []
    lines = ["# " + _SAMPLER_NOTE]
    header = (
        [f"x_{i + 1}" for i in range(dim)]
        + ["in_S", "catalyst_dim_found"]
        + [f"f_{k}" for k in range(1, k_max + 1)]
        + ["certificate_ref"]
    )
    lines.append(",".join(header))
    for idx, rec in enumerate(records):
        ref = ""
        if rec.certificate is not None:
            os.makedirs(cert_dir, exist_ok=True)
            name = f"record_{idx:04d}.json"
            cert_path = os.path.join(cert_dir, name)
            with open(cert_path, "w", encoding="utf-8") as fh:
                json.dump(certificate_to_dict(rec.certificate), fh, indent=2, sort_keys=True)
            sidecars.append(cert_path)
            ref = os.path.join(os.path.basename(cert_dir), name)
        row = (
            [frac_str(c) for c in rec.x.components]
            + ["true" if rec.in_S else "false",
               "" if rec.catalyst_dim_found is None else str(rec.catalyst_dim_found)]
            + [repr(f) for f in rec.f_values]
            + [ref]
        )
        lines.append(",".join(row))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return sidecars
