"""Exact vector arithmetic and majorization checks."""

import random
from fractions import Fraction as F

import pytest

from trumpkit import (
    AllZero,
    DimensionMismatch,
    NegativeEntry,
    NotMajorized,
    ProbVec,
    TargetTooSmall,
    TrumpkitError,
    as_fraction,
    ds_witness,
    majorizes,
    majorizes_alt,
    normalize,
    pad_zeros,
    pv,
    sample_S,
    sort_desc,
    t_transform_chain,
    tensor,
    uniform_vector,
)

X_HARD = pv("0.4", "0.4", "0.1", "0.1")
Y_TARGET = pv("0.5", "0.25", "0.25", "0")


def random_vector(rng, dim):
    return normalize([rng.randint(1, 9) for _ in range(dim)])


def test_as_fraction_reads_float_literals_exactly():
    assert as_fraction(0.4) == F(2, 5)
    assert as_fraction(0.1) == F(1, 10)
    assert as_fraction(F(1, 3)) == F(1, 3)
    assert as_fraction("1/3") == F(1, 3)
    assert as_fraction(2) == F(2)


def test_pv_requires_unit_sum():
    with pytest.raises(TrumpkitError):
        pv("0.5", "0.3")
    with pytest.raises(NegativeEntry):
        pv("1.2", "-0.2")


def test_pv_accepts_mixed_component_spellings():
    v = pv(0.5, "1/4", F(1, 4))
    assert v.components == (F(1, 2), F(1, 4), F(1, 4))
    assert v.dim == 3
    assert list(v.as_floats()) == [0.5, 0.25, 0.25]


def test_normalize():
    assert normalize([3, 3, 2, 2]).components == (F(3, 10), F(3, 10), F(1, 5), F(1, 5))
    assert normalize([F(1, 2)]).components == (F(1),)
    with pytest.raises(AllZero):
        normalize([0, 0, 0])
    with pytest.raises(NegativeEntry):
        normalize([1, -1, 2])


def test_uniform_vector():
    u = uniform_vector(4)
    assert u.components == (F(1, 4),) * 4
    with pytest.raises(TrumpkitError):
        uniform_vector(0)


def test_sort_desc_orders_and_preserves_mass():
    v = pv("0.1", "0.5", "0.15", "0.25")
    s = sort_desc(v)
    assert s.components == (F(1, 2), F(1, 4), F(3, 20), F(1, 10))
    assert sum(s.components) == 1


def test_tensor_matches_hand_expansion():
    z = pv("0.6", "0.4")
    lifted = tensor(X_HARD, z)
    assert lifted.dim == 8
    assert sort_desc(lifted).components == (
        F(6, 25), F(6, 25), F(4, 25), F(4, 25),
        F(3, 50), F(3, 50), F(1, 25), F(1, 25),
    )


def test_tensor_with_scalar_catalyst_is_identity():
    one = pv("1")
    assert tensor(X_HARD, one).components == X_HARD.components


def test_pad_zeros():
    v = pv("0.5", "0.5")
    assert pad_zeros(v, 4).components == (F(1, 2), F(1, 2), F(0), F(0))
    assert pad_zeros(v, 2).components == v.components
    with pytest.raises(TargetTooSmall):
        pad_zeros(v, 1)


def test_majorizes_known_failure_gap():
    """The (0.4,0.4,0.1,0.1) vs (0.5,0.25,0.25,0) pair fails only at the
    second prefix, by exactly 1/20."""
    report = majorizes(X_HARD, Y_TARGET)
    assert report.verdict is False
    assert report.prefix_gaps == (F(1, 10), F(-1, 20), F(1, 10))
    assert report.tight_indices == ()


def test_majorizes_tight_indices():
    x = pv("3/8", "3/8", "1/8", "1/8")
    report = majorizes(x, Y_TARGET)
    assert report.verdict is True
    assert report.tight_indices == (2,)
    assert report.min_gap == F(0)


def test_majorizes_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        majorizes(pv("0.5", "0.5"), Y_TARGET)


def test_uniform_is_majorized_by_everything():
    rng = random.Random(11)
    for _ in range(50):
        dim = rng.randint(2, 7)
        y = random_vector(rng, dim)
        assert majorizes(uniform_vector(dim), y).verdict is True
        assert majorizes(y, y).verdict is True


def test_majorizes_alt_agrees_with_prefix_route():
    rng = random.Random(23)
    for _ in range(300):
        dim = rng.randint(2, 6)
        x = random_vector(rng, dim)
        y = random_vector(rng, dim)
        verdict = majorizes(x, y).verdict
        tail, tsum = majorizes_alt(x, y)
        assert tail == verdict
        assert tsum == verdict


def test_t_transform_chain_two_dim():
    x = pv("0.5", "0.5")
    y = pv("1", "0")
    chain = t_transform_chain(x, y)
    assert len(chain) == 1
    d = ds_witness(x, y)
    assert d.entries == ((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)))


def test_t_transform_chain_rejects_non_majorized():
    with pytest.raises(NotMajorized):
        t_transform_chain(X_HARD, Y_TARGET)


def test_ds_witness_properties():
    rng = random.Random(5)
    trials = 0
    while trials < 60:
        dim = rng.randint(2, 6)
        y = random_vector(rng, dim)
        x = random_vector(rng, dim)
        if not majorizes(x, y).verdict:
            continue
        trials += 1
        chain = t_transform_chain(x, y)
        assert len(chain) <= dim - 1
        d = ds_witness(x, y)
        applied = d.apply(sort_desc(y).components)
        assert applied == sort_desc(x).components


def test_sample_S_members_are_majorized():
    rng_seeds = [0, 1, 2]
    for seed in rng_seeds:
        y = pv("0.5", "0.2", "0.2", "0.1")
        for x in sample_S(y, 40, seed):
            assert majorizes(x, y).verdict is True


def test_sample_S_is_deterministic():
    y = pv("0.6", "0.3", "0.1")
    a = sample_S(y, 10, 9)
    b = sample_S(y, 10, 9)
    assert [v.components for v in a] == [v.components for v in b]


def test_probvec_is_immutable():
    v = pv("0.5", "0.5")
    with pytest.raises(AttributeError):
        v.components = ()
    assert v == ProbVec((F(1, 2), F(1, 2)))
