from dataclasses import replace
from fractions import Fraction as Q

import pytest

from wsf4.errors import (
    IndexOutOfRange,
    NoMatchingGenerator,
    NotZeroDimensional,
    WeightsNotIntegral,
)
from wsf4.laurent import LaurentPoly
from wsf4.variety import (
    QuotSingularity,
    VarietyBuild,
    cone,
    degree,
    embedding,
    family_ladder,
    is_isolated,
    is_terminal,
    is_wellformed_weights,
    orbifold_point_count,
    section,
)


def build(mu, u):
    return VarietyBuild.from_embedding(embedding(mu, u))


def test_embedding_weights():
    assert embedding((0, 0, 0, 0), 1).weights == (1,) * 26
    assert embedding((0, 0, 0, 0), 2).weights == (2,) * 26
    e = embedding((9, 4, 2, 1), 10)
    assert len(e.weights) == 26
    assert all(w > 0 for w in e.weights)
    assert sum(e.weights) == 260  # sum forced to 26u


def test_embedding_rejects_odd_mu_sum():
    with pytest.raises(WeightsNotIntegral):
        embedding((1, 0, 0, 0), 3)


def test_wellformed_gcd_half():
    assert is_wellformed_weights([1] * 26)
    assert not is_wellformed_weights([2] * 26)
    assert is_wellformed_weights([1, 1, 1] + [2] * 23)
    assert not is_wellformed_weights([1] + [2] * 25)


def test_base_build_invariants():
    b = build((0, 0, 0, 0), 1)
    assert b.dim == 15
    assert b.canonical_weight == -11
    assert degree(b) == 78


def test_cones_then_quasilinear_sections():
    b = build((0, 0, 0, 0), 2)
    for _ in range(3):
        b = cone(b)
    assert b.dim == 18
    assert b.canonical_weight == -25
    assert sorted(b.weights) == [1, 1, 1] + [2] * 26
    for _ in range(15):
        b = section(b, 2, quasilinear=True)
    assert b.dim == 3
    assert b.canonical_weight == 5
    assert sorted(b.weights) == [1, 1, 1] + [2] * 11
    assert degree(b) == 39
    assert 125 * degree(b) == 4875  # (5D)^3


def test_orbifold_points_of_half_weight_model():
    b = build((0, 0, 0, 0), 2)
    for _ in range(3):
        b = cone(b)
    for _ in range(15):
        b = section(b, 2, quasilinear=True)
    assert orbifold_point_count(b) == 78
    s = QuotSingularity(2, (1, 1, 1))
    assert is_isolated(s)
    assert is_terminal(s)


def test_general_type_threefold_from_straight_model():
    b = build((0, 0, 0, 0), 1)
    for _ in range(12):
        b = section(b, 1, quasilinear=True)
    assert b.dim == 3
    assert b.canonical_weight == 1
    assert degree(b) == 78


def test_family_ladder_invariants():
    for k in range(6, 17):
        b = family_ladder(k)
        assert b.dim == 3
        assert b.canonical_weight == k
        assert sorted(b.weights, reverse=True) == [2] * (16 - k) + [1] * (k - 2)
        assert degree(b) == 39 * 2 ** (k - 5)


def test_family_ladder_edge_cases():
    assert degree(family_ladder(6)) == 78
    assert 216 * degree(family_ladder(6)) == 16848  # (6D)^3
    assert degree(family_ladder(16)) == 39 * 2 ** 11
    assert orbifold_point_count(family_ladder(6)) == 0
    with pytest.raises(IndexOutOfRange):
        family_ladder(5)
    with pytest.raises(IndexOutOfRange):
        family_ladder(17)


def test_section_errors():
    b = build((0, 0, 0, 0), 2)
    with pytest.raises(NoMatchingGenerator):
        section(b, 3, quasilinear=True)
    with pytest.raises(ValueError):
        section(b, 0)


def test_nonquasilinear_section_multiplies_numerator():
    b = build((0, 0, 0, 0), 1)
    cut = section(b, 4)
    assert cut.dim == 14
    assert cut.canonical_weight == -7
    assert cut.numerator == b.numerator * LaurentPoly.one_minus(8)
    assert cut.weights == b.weights


def test_orbifold_length_of_zero_dimensional_series():
    b0 = build((0, 0, 0, 0), 1)
    b = replace(b0, weights=(1,), dim=0, numerator=LaurentPoly({0: Q(5)}))
    assert orbifold_point_count(b) == 5


def test_orbifold_rejects_positive_dimensional_locus():
    with pytest.raises(NotZeroDimensional):
        orbifold_point_count(build((0, 0, 0, 0), 1))


def test_quot_singularity_normalisation():
    s = QuotSingularity(5, (7, -1, 3))
    assert s.a == (2, 4, 3)
    with pytest.raises(ValueError):
        QuotSingularity(0, (1,))
    with pytest.raises(ValueError):
        QuotSingularity(3, (3, 1))


def test_terminal_criterion():
    assert not is_terminal(QuotSingularity(2, (1, 1)))  # boundary: 1+1 = 2
    assert is_terminal(QuotSingularity(3, (1, 1, 2)))
    assert not is_isolated(QuotSingularity(4, (2, 1, 1)))
