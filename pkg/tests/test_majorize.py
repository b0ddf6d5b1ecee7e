import math
import random

from cohcat.majorize import (
    Comparison,
    compare,
    interconvertible,
    majorized_by,
    prefix_sums,
)
from cohcat.statevec import ProbVector, pad, tensor, uniform

from randstates import mixed_from, random_state


def test_prefix_sums():
    got = prefix_sums(ProbVector((0.5, 0.3, 0.2)))
    assert got == (0.5, 0.8, 1.0)
    assert math.isclose(got[-1], 1.0, abs_tol=1e-12)


def test_known_pairs():
    p = ProbVector((0.4, 0.4, 0.2))
    q = ProbVector((0.5, 0.3, 0.2))
    assert majorized_by(p, q)
    assert not majorized_by(q, p)
    assert majorized_by(p, p)


def test_uniform_is_bottom_point_mass_is_top():
    rng = random.Random(21)
    for _ in range(30):
        d = rng.randint(2, 6)
        p = random_state(rng, d)
        assert majorized_by(uniform(d), p)
        assert majorized_by(p, pad(ProbVector((1.0,)), d))


def test_incomparable_pair():
    p = ProbVector((0.5, 0.4, 0.1))
    q = ProbVector((0.6, 0.2, 0.2))
    out = compare(p, q)
    assert out.tag is Comparison.INCOMPARABLE
    assert out.pq_violation is not None
    assert out.qp_violation is not None


def test_violation_indices():
    p = ProbVector((0.8, 0.1, 0.1))
    q = ProbVector((0.7, 0.3, 0.0))
    out = compare(p, q)
    # p's first prefix exceeds q's; q's second prefix exceeds p's
    assert out.tag is Comparison.INCOMPARABLE
    assert out.pq_violation == 1
    assert out.qp_violation == 2


def test_compare_tags():
    p = ProbVector((0.4, 0.4, 0.2))
    q = ProbVector((0.5, 0.3, 0.2))
    assert compare(q, p).tag is Comparison.SECOND_MAJORIZED
    assert compare(p, q).tag is Comparison.FIRST_MAJORIZED
    assert compare(p, p).tag is Comparison.EQUAL


def test_padding_makes_equal():
    a = ProbVector((0.5, 0.5))
    b = ProbVector((0.5, 0.5, 0.0))
    assert compare(a, b).tag is Comparison.EQUAL
    assert interconvertible(a, b)
    assert majorized_by(a, b) and majorized_by(b, a)


def test_interconvertible_tolerance():
    a = ProbVector((0.6, 0.4))
    b = ProbVector((0.6 + 1e-12, 0.4 - 1e-12))
    assert interconvertible(a, b)
    assert not interconvertible(a, ProbVector((0.7, 0.3)))


def test_mixing_never_escapes_majorization():
    rng = random.Random(22)
    for _ in range(60):
        q = random_state(rng, rng.randint(2, 7))
        p = mixed_from(rng, q)
        assert majorized_by(p, q)


def test_tensor_preserves_majorization():
    rng = random.Random(23)
    for _ in range(30):
        q = random_state(rng, rng.randint(2, 5))
        p = mixed_from(rng, q)
        c = random_state(rng, rng.randint(2, 4))
        assert majorized_by(tensor(p, c), tensor(q, c))
