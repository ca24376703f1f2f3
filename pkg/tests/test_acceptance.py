"""End-to-end acceptance checks, one verdict line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.  Exact
claims are checked in rational arithmetic with zero tolerance; floats appear
only where the numeric search itself is under test, with the threshold
stated inline.  Wall-clock budgets are asserted where a criterion carries
one.
"""

import random
import time
from fractions import Fraction as F

from trumpkit import (
    NotMajorized,
    ProbVec,
    SearchConfig,
    SearchStatus,
    boundary_witness,
    classify,
    ds_witness,
    find_catalyst,
    majorizes,
    majorizes_alt,
    nonuniform_demo,
    normalize,
    pv,
    ray_probe,
    sample_S,
    separating_example,
    sort_desc,
    t_transform_chain,
    tensor,
    trumps_with,
    uniform_vector,
)

X_HARD = pv("0.4", "0.4", "0.1", "0.1")
Y_TARGET = pv("0.5", "0.25", "0.25", "0")

LIFTED_GAPS = (F(3, 50), F(1, 50), F(1, 100), F(0), F(1, 25), F(2, 25), F(1, 25))


def verdict_line(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}"
    if detail and not ok:
        line += f" [{detail}]"
    print(line)
    assert ok, f"{name}: {detail}" if detail else name


def rand_simplex(rng: random.Random, dim: int) -> ProbVec:
    return normalize([rng.randint(1, 9) for _ in range(dim)])


def test_acceptance_1_hard_pair_reproduction():
    t0 = time.perf_counter()
    plain = majorizes(X_HARD, Y_TARGET)
    lifted = trumps_with(X_HARD, Y_TARGET, pv("0.6", "0.4"))
    elapsed = time.perf_counter() - t0
    ok = (
        plain.verdict is False
        and plain.prefix_gaps == (F(1, 10), F(-1, 20), F(1, 10))
        and lifted is not None
        and lifted.report.verdict is True
        and min(lifted.report.prefix_gaps) >= 0
        and lifted.report.prefix_gaps == LIFTED_GAPS
        and elapsed < 1.0
    )
    verdict_line(1, "hard-pair-reproduction", ok, f"elapsed={elapsed:.3f}s")


def test_acceptance_2_nonuniform_catalyst_sweep():
    rng = random.Random(202)
    t0 = time.perf_counter()
    good = 0
    for _ in range(100):
        while True:
            dim = rng.randint(2, 5)
            raw = [rng.randint(0, 9) for _ in range(dim)]
            if sum(raw) == 0:
                continue
            z = normalize(raw)
            if len({c for c in z.components if c != 0}) >= 2:
                break
        w = nonuniform_demo(z)
        # re-establish both halves of the witness from scratch, exactly
        if (majorizes(w.x_prime, w.y).verdict is False
                and trumps_with(w.x_prime, w.y, w.certificate.z) is not None):
            good += 1
    elapsed = time.perf_counter() - t0
    ok = good == 100 and elapsed < 10.0
    verdict_line(2, "nonuniform-catalyst-sweep", ok,
                 f"good={good}/100 elapsed={elapsed:.2f}s")


def test_acceptance_3_useful_targets_separate():
    rng = random.Random(303)
    t0 = time.perf_counter()
    good = 0
    for _ in range(200):
        while True:
            y = rand_simplex(rng, rng.randint(4, 6))
            if classify(y).useful:
                break
        w = separating_example(y)
        # every lifted gap of the witness base must be strictly positive,
        # checked over the full tensored comparison in exact arithmetic
        strict = trumps_with(boundary_witness(y), y, w.certificate.z)
        if (w.not_majorized_proof.verdict is False
                and majorizes(w.x_prime, y).verdict is False
                and trumps_with(w.x_prime, y, w.certificate.z) is not None
                and strict is not None
                and strict.all_strict):
            good += 1
    elapsed = time.perf_counter() - t0
    ok = good == 200 and elapsed < 60.0
    verdict_line(3, "useful-targets-separate", ok,
                 f"good={good}/200 elapsed={elapsed:.2f}s")


def useless_target(rng: random.Random) -> ProbVec:
    roll = rng.randrange(3)
    if roll == 0:
        y = rand_simplex(rng, rng.randint(2, 3))
    elif roll == 1:
        # two-valued spectrum: every component sits at an extreme
        dim = rng.randint(4, 6)
        hi = rng.randint(2, 9)
        lo = rng.randint(1, hi - 1)
        n_hi = rng.randint(1, dim - 1)
        y = normalize([hi] * n_hi + [lo] * (dim - n_hi))
    else:
        y = uniform_vector(rng.randint(2, 6))
    assert classify(y).useful is False
    return y


def test_acceptance_4_useless_targets_converse():
    rng = random.Random(404)
    targets = [useless_target(rng) for _ in range(200)]
    violations = 0
    for j in range(500):
        y = targets[j % 200]
        if j % 2 == 0:
            x = sample_S(y, 1, 40_000 + j)[0]
        else:
            x = rand_simplex(rng, y.dim)
        result = find_catalyst(x, y, 3, SearchConfig(restarts=2, max_iters=12, seed=j))
        if (result.status is SearchStatus.CERTIFIED_FOUND
                and not majorizes(x, y).verdict):
            violations += 1
    verdict_line(4, "useless-targets-converse", violations == 0,
                 f"violations={violations}")


def test_acceptance_5_criterion_equivalence():
    rng = random.Random(505)
    t0 = time.perf_counter()
    agreed = 0
    positives = 0
    for i in range(1000):
        dim = rng.randint(2, 6)
        y = rand_simplex(rng, dim)
        x = sample_S(y, 1, 50_000 + i)[0] if i % 2 else rand_simplex(rng, dim)
        verdict = majorizes(x, y).verdict
        tail, tsum = majorizes_alt(x, y)
        good = tail == verdict and tsum == verdict
        if verdict:
            positives += 1
            chain = t_transform_chain(x, y)
            d = ds_witness(x, y)
            good = (good
                    and len(chain) <= dim - 1
                    and d.apply(sort_desc(y).components) == sort_desc(x).components)
        else:
            try:
                t_transform_chain(x, y)
                good = False
            except NotMajorized:
                pass
        agreed += good
    elapsed = time.perf_counter() - t0
    ok = agreed == 1000 and positives >= 100 and elapsed < 10.0
    verdict_line(5, "criterion-equivalence", ok,
                 f"agreed={agreed}/1000 positives={positives} elapsed={elapsed:.2f}s")


def test_acceptance_6_invariant_suite():
    rng = random.Random(606)

    lifts = 0
    for i in range(1000):
        dim = rng.randint(2, 5)
        y = rand_simplex(rng, dim)
        x = sample_S(y, 1, 600_000 + i)[0]
        w = rand_simplex(rng, rng.randint(1, 3))
        lifts += majorizes(tensor(x, w), tensor(y, w)).verdict

    antisym = 0
    for i in range(1000):
        dim = rng.randint(2, 5)
        y = rand_simplex(rng, dim)
        z = rand_simplex(rng, rng.randint(1, 3))
        if i % 2:
            comps = list(y.components)
            rng.shuffle(comps)
            x = ProbVec(tuple(comps))
        else:
            x = rand_simplex(rng, dim)
        forward = trumps_with(x, y, z) is not None
        backward = trumps_with(y, x, z) is not None
        if sort_desc(x).components == sort_desc(y).components:
            antisym += forward and backward
        else:
            antisym += not (forward and backward)

    ends = 0
    premise_fired = 0
    for i in range(1000):
        dim = rng.randint(2, 5)
        y = rand_simplex(rng, dim)
        x = sample_S(y, 1, 700_000 + i)[0] if i % 2 else rand_simplex(rng, dim)
        z = rand_simplex(rng, rng.randint(1, 3))
        cert = trumps_with(x, y, z)
        if cert is None:
            ends += 1
            continue
        premise_fired += 1
        xs = sort_desc(x).components
        ys = sort_desc(y).components
        ends += xs[0] <= ys[0] and xs[-1] >= ys[-1]

    ok = lifts == antisym == ends == 1000 and premise_fired >= 100
    verdict_line(6, "invariant-suite", ok,
                 f"lift={lifts} antisymmetry={antisym} ends={ends} "
                 f"premises={premise_fired}")


def test_acceptance_7_ray_ladder_growth():
    t0 = time.perf_counter()
    y = pv("0.4", "0.3", "0.2", "0.1")
    result = ray_probe(y, 3)  # default SearchConfig throughout
    elapsed = time.perf_counter() - t0
    ts = dict(result.ladder)
    cert = result.certificate
    # the witness lies on the probe ray beyond where plain majorization stops
    outside_plain = majorizes(cert.x, y).verdict is False
    mixed = tuple((1 - ts[3]) * F(1, 4) + ts[3] * c for c in result.x.components)
    ok = (
        ts[1] <= ts[2] <= ts[3]
        and ts[1] < ts[3]
        and cert.z.dim <= 3
        and cert.report.verdict is True
        and outside_plain
        and cert.x.components == mixed
        and elapsed < 300.0
    )
    verdict_line(7, "ray-ladder-growth", ok,
                 f"ladder={[(k, float(t)) for k, t in result.ladder]} "
                 f"elapsed={elapsed:.1f}s")


def test_acceptance_8_solver_recovery():
    found = 0
    worst = 0.0
    for seed in range(10):
        t0 = time.perf_counter()
        result = find_catalyst(X_HARD, Y_TARGET, 2, SearchConfig(seed=seed))
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if result.status is SearchStatus.CERTIFIED_FOUND and dt < 5.0:
            found += 1
    verdict_line(8, "solver-recovery", found == 10,
                 f"found={found}/10 worst={worst:.2f}s")
