import math
import random

import numpy as np
import pytest

from cohcat.errors import AllZeroError, DimTooSmallError, EpsOutOfRangeError
from cohcat.statevec import (
    ProbVector,
    StateSpec,
    canonicalize,
    pad,
    perturb,
    tensor,
    uniform,
)

from randstates import random_state


def test_canonicalize_sorts_and_normalizes():
    p = canonicalize(StateSpec((1.0, 4.0, 5.0)))
    assert p.entries == (0.5, 0.4, 0.1)
    assert math.isclose(math.fsum(p.entries), 1.0, abs_tol=1e-12)


def test_canonicalize_rejects_all_zero():
    with pytest.raises(AllZeroError):
        canonicalize(StateSpec((0.0, 0.0)))


def test_canonicalize_clamps_dust():
    p = canonicalize(StateSpec((1.0, 1e-17)))
    assert p.entries[1] == 0.0
    assert p.support == 1


def test_statespec_validation():
    with pytest.raises(ValueError):
        StateSpec(())
    with pytest.raises(ValueError):
        StateSpec((0.5, -0.1))
    with pytest.raises(ValueError):
        StateSpec((0.5, math.inf))
    with pytest.raises(ValueError):
        StateSpec((0.5, 0.5), labels=("a",))


def test_statespec_from_string():
    spec = StateSpec.from_string("0.5, 0.4,0.1,")
    assert spec.weights == (0.5, 0.4, 0.1)
    with pytest.raises(ValueError):
        StateSpec.from_string("  ,")


def test_statespec_from_json_obj():
    spec = StateSpec.from_json_obj({"weights": [3, 1], "labels": ["x", "y"]})
    assert spec.weights == (3.0, 1.0)
    assert spec.labels == ("x", "y")
    with pytest.raises(ValueError):
        StateSpec.from_json_obj([3, 1])
    with pytest.raises(ValueError):
        StateSpec.from_json_obj({"wrong": [1]})


def test_probvector_validation():
    with pytest.raises(ValueError):
        ProbVector(())
    with pytest.raises(ValueError):
        ProbVector((0.4, 0.6))
    with pytest.raises(ValueError):
        ProbVector((0.7, 0.4))
    with pytest.raises(ValueError):
        ProbVector((0.6, -0.1))
    p = ProbVector((0.6, 0.4))
    assert p.dim == 2
    assert p.max_entry == 0.6
    assert p.min_entry == 0.4


def test_probvector_support():
    p = ProbVector((0.5, 0.5, 0.0))
    assert p.support == 2
    assert p.min_entry == 0.0


def test_from_weights_shortcut():
    assert ProbVector.from_weights((2, 2, 1)).entries == (0.4, 0.4, 0.2)


def test_tensor_matches_outer_product():
    rng = random.Random(11)
    for _ in range(40):
        a = random_state(rng, rng.randint(1, 5))
        b = random_state(rng, rng.randint(1, 5))
        got = tensor(a, b).entries
        want = np.sort(np.multiply.outer(a.entries, b.entries).ravel())[::-1]
        assert np.allclose(got, want, atol=1e-12)
        assert math.isclose(math.fsum(got), 1.0, abs_tol=1e-9)


def test_tensor_large_uses_same_result():
    # 70 * 70 = 4900 entries exercises the numpy branch
    rng = random.Random(12)
    a = random_state(rng, 70)
    b = random_state(rng, 70)
    got = tensor(a, b).entries
    want = np.sort(np.multiply.outer(a.entries, b.entries).ravel())[::-1]
    assert np.allclose(got, want, atol=1e-12)


def test_perturb_formula():
    p = ProbVector((0.7, 0.3))
    out = perturb(p, 0.1)
    assert math.isclose(out.entries[0], 0.9 * 0.7 + 0.05, abs_tol=1e-12)
    assert math.isclose(out.entries[1], 0.9 * 0.3 + 0.05, abs_tol=1e-12)
    for bad in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(EpsOutOfRangeError):
            perturb(p, bad)


def test_pad():
    p = ProbVector((0.6, 0.4))
    assert pad(p, 4).entries == (0.6, 0.4, 0.0, 0.0)
    assert pad(p, 2) is p
    with pytest.raises(DimTooSmallError):
        pad(p, 1)


def test_uniform():
    u = uniform(4)
    assert u.entries == (0.25, 0.25, 0.25, 0.25)
    with pytest.raises(ValueError):
        uniform(0)
