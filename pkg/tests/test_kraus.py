import math
import random

import numpy as np
import pytest

from cohcat.errors import (
    DimensionMismatchError,
    InvalidChannelError,
    NotMajorizedError,
)
from cohcat.kraus import (
    KrausSet,
    PureState,
    apply,
    compose,
    qutrit_ground_channel,
    realize_deterministic,
    stochastic_subset_probability,
    verify,
)
from cohcat.statevec import ProbVector, tensor, uniform

from randstates import mixed_from, random_state


def state_of(p: ProbVector) -> PureState:
    return PureState.from_diagonal(p)


def test_pure_state_validation():
    s = PureState((1.0, 0.0))
    assert np.allclose(s.vector(), [1.0, 0.0])
    with pytest.raises(ValueError):
        PureState((1.0, 1.0))
    with pytest.raises(ValueError):
        PureState(())


def test_pure_state_from_diagonal():
    s = state_of(ProbVector((0.64, 0.36)))
    assert np.allclose(s.vector(), [0.8, 0.6])


def test_kraus_set_shape_guard():
    with pytest.raises(DimensionMismatchError):
        KrausSet.square((np.eye(2), np.zeros((3, 3))))
    with pytest.raises(DimensionMismatchError):
        KrausSet.square(())


def test_identity_channel():
    ch = KrausSet.square((np.eye(3),))
    rep = verify(ch)
    assert rep.valid
    assert rep.completeness_defect < 1e-15
    assert rep.incoherence_violations == ()
    psi = state_of(ProbVector((0.5, 0.3, 0.2)))
    branches = apply(ch, psi)
    assert len(branches) == 1
    prob, out = branches[0]
    assert abs(prob - 1.0) < 1e-12
    assert np.allclose(out.vector(), psi.vector())


def test_ground_state_channel():
    ch = qutrit_ground_channel()
    rep = verify(ch)
    assert rep.valid
    assert rep.completeness_defect < 1e-12
    assert rep.incoherence_violations == ()

    branches = apply(ch, state_of(uniform(3)))
    probs = [prob for prob, _ in branches]
    assert abs(probs[0] - 0.375) < 1e-12
    assert abs(probs[1] - 0.375) < 1e-12
    for prob in probs[2:]:
        assert abs(prob - 1.0 / 24.0) < 1e-12
    assert abs(math.fsum(probs) - 1.0) < 1e-12
    for _, out in branches:
        vec = out.vector()
        assert abs(abs(vec[0]) - 1.0) < 1e-9
        assert np.allclose(vec[1:], 0.0, atol=1e-9)


def test_incoherence_violation_detected():
    ch = qutrit_ground_channel()
    a = 1.0 / (2.0 * math.sqrt(2.0))
    ops = list(ch.operators)
    # rotate one column-0 amplitude across two rows: completeness survives
    # but the operator now maps |0> to a superposition
    c = a / math.sqrt(2.0)
    ops[4] = np.array([[c, 0, 0], [0, a, -a], [c, 0, 0]], dtype=complex)
    rep = verify(KrausSet.square(tuple(ops)))
    assert not rep.valid
    assert rep.completeness_defect < 1e-12
    assert rep.incoherence_violations == ((4, 0),)


def test_incomplete_set_detected():
    rep = verify(KrausSet.square((np.eye(2) * 0.5,)))
    assert not rep.valid
    assert rep.completeness_defect > 0.7


def test_apply_guards():
    with pytest.raises(InvalidChannelError):
        apply(KrausSet.square((np.eye(2) * 0.5,)), PureState((1.0, 0.0)))
    with pytest.raises(DimensionMismatchError):
        apply(KrausSet.square((np.eye(2),)), PureState((1.0, 0.0, 0.0)))


def test_json_round_trip():
    ch = qutrit_ground_channel()
    blob = ch.to_json_dict()
    back = KrausSet.from_json_dict(blob)
    assert back.in_dim == ch.in_dim and back.out_dim == ch.out_dim
    assert all(np.array_equal(a, b) for a, b in zip(ch.operators, back.operators))
    with pytest.raises(DimensionMismatchError):
        KrausSet.from_json_dict(
            {"in_dim": 2, "out_dim": 2, "operators": [[[[1, 0], [0, 0]]], [[[0, 0]]]]}
        )


def test_realize_rejects_incomparable():
    with pytest.raises(NotMajorizedError):
        realize_deterministic(ProbVector((0.4, 0.4, 0.2)), ProbVector((0.5, 0.25, 0.25)))


def test_realize_identity_when_equal():
    p = ProbVector((0.5, 0.3, 0.2))
    ch = realize_deterministic(p, p)
    assert len(ch.operators) == 1
    assert np.allclose(ch.operators[0], np.eye(3))


def test_realize_collapse_to_ground():
    ch = realize_deterministic(uniform(3), ProbVector((1.0, 0.0, 0.0)))
    assert verify(ch).valid
    for prob, out in apply(ch, state_of(uniform(3))):
        assert abs(abs(out.vector()[0]) - 1.0) < 1e-9
    got = stochastic_subset_probability(ch, state_of(uniform(3)), PureState((1.0, 0.0, 0.0)))
    assert abs(got - 1.0) < 1e-9


def test_realize_known_pair():
    p = ProbVector((0.5, 0.3, 0.2))
    q = ProbVector((0.7, 0.2, 0.1))
    ch = realize_deterministic(p, q)
    rep = verify(ch)
    assert rep.valid
    assert rep.incoherence_violations == ()
    assert len(ch.operators) <= 4
    got = stochastic_subset_probability(ch, state_of(p), state_of(q))
    assert abs(got - 1.0) < 1e-9


def test_realize_catalytic_tensor_pair():
    p = tensor(ProbVector((0.4, 0.4, 0.1, 0.1)), ProbVector((0.6, 0.4)))
    q = tensor(ProbVector((0.5, 0.25, 0.25, 0.0)), ProbVector((0.6, 0.4)))
    assert np.allclose(p.entries, (0.24, 0.24, 0.16, 0.16, 0.06, 0.06, 0.04, 0.04))
    assert np.allclose(q.entries, (0.3, 0.2, 0.15, 0.15, 0.1, 0.1, 0.0, 0.0))
    ch = realize_deterministic(p, q)
    rep = verify(ch)
    assert rep.valid
    assert len(ch.operators) <= 2**7
    got = stochastic_subset_probability(ch, state_of(p), state_of(q))
    assert abs(got - 1.0) < 1e-9


def test_realize_random_pairs():
    rng = random.Random(71)
    for _ in range(20):
        q = random_state(rng, rng.randint(2, 5))
        p = mixed_from(rng, q)
        ch = realize_deterministic(p, q)
        rep = verify(ch)
        assert rep.valid
        assert rep.incoherence_violations == ()
        assert len(ch.operators) <= 2 ** (max(p.dim, q.dim) - 1)
        got = stochastic_subset_probability(ch, state_of(p), state_of(q))
        assert abs(got - 1.0) < 1e-9


def test_diagonal_densities_stay_diagonal():
    rng = random.Random(72)
    for _ in range(10):
        q = random_state(rng, 4)
        p = mixed_from(rng, q)
        ch = realize_deterministic(p, q)
        rho = np.diag([rng.random() for _ in range(4)])
        rho /= np.trace(rho)
        out = sum(op @ rho @ op.conj().T for op in ch.operators)
        off = out - np.diag(np.diag(out))
        assert np.max(np.abs(off)) < 1e-12


def test_compose_chains_conversions():
    rng = random.Random(73)
    r = random_state(rng, 4, min_entry=1e-3)
    q = mixed_from(rng, r)
    p = mixed_from(rng, q)
    first = realize_deterministic(p, q)
    second = realize_deterministic(q, r)
    chained = compose(second, first)
    assert verify(chained).valid
    got = stochastic_subset_probability(chained, state_of(p), state_of(r))
    assert abs(got - 1.0) < 1e-9


def test_compose_dimension_guard():
    two = KrausSet.square((np.eye(2),))
    three = KrausSet.square((np.eye(3),))
    with pytest.raises(DimensionMismatchError):
        compose(two, three)


def test_subset_probability_two_branches():
    ops = (np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 1.0]).astype(complex))
    ch = KrausSet.square(ops)
    psi = PureState((math.sqrt(0.3), math.sqrt(0.7)))
    got = stochastic_subset_probability(ch, psi, PureState((0.0, 1.0)))
    assert abs(got - 0.7) < 1e-12
    got = stochastic_subset_probability(ch, psi, PureState((1.0, 0.0)))
    assert abs(got - 0.3) < 1e-12


def test_subset_probability_no_collinear_branch():
    ch = KrausSet.square((np.eye(2),))
    psi = PureState((math.sqrt(0.3), math.sqrt(0.7)))
    assert stochastic_subset_probability(ch, psi, PureState((0.0, 1.0))) == 0.0
