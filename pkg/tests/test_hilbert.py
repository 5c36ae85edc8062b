import json
from fractions import Fraction as Q

import pytest

from wsf4.errors import NonRegularMu, PositivityViolation
from wsf4 import hilbert
from wsf4.hilbert import (
    HilbertParams,
    compact_numerator,
    embedding_weights2,
    hs_compact,
    hs_general,
    numerator_24form,
    numerator_polys,
    orbit_weights,
)
from wsf4.laurent import LaurentPoly

# straight numerator of the degree-78 model, frozen from the
# Weyl-dimension expansion oracle
STRAIGHT = {
    0: 1, 2: -27, 3: 78, 5: -351, 6: 650, 7: -351,
    8: -351, 9: 650, 10: -351, 12: 78, 13: -27, 15: 1,
}


def straight_poly():
    return LaurentPoly({2 * e: Q(c) for e, c in STRAIGHT.items()})


def test_params_validation():
    HilbertParams((0, 0, 0, 0), 1)
    with pytest.raises(PositivityViolation):
        HilbertParams((1, 0, 0, 0), 1)  # weight <-e1,mu>+1 = 0
    with pytest.raises(PositivityViolation):
        HilbertParams((0, 0, 0, 0), 0)


def test_orbit_weights_shape():
    ws = orbit_weights()
    assert len(ws) == 24
    assert len(set(ws)) == 24


def test_embedding_weights_straight():
    p = HilbertParams((0, 0, 0, 0), 1)
    assert embedding_weights2(p) == [2] * 26


def test_compact_numerator_straight():
    num = compact_numerator(HilbertParams((0, 0, 0, 0), 1))
    assert num == straight_poly()
    assert num.is_palindromic2(30)  # palindromic of degree 15


def test_numerator_polys_at_zero():
    values = [p.eval_one() for p in numerator_polys((0, 0, 0, 0))]
    assert values == [27, 78, 351, 650, 351]


def test_expansion_straight():
    s = hs_compact(HilbertParams((0, 0, 0, 0), 1))
    assert s.expand(4) == [1, 26, 324, 2652]
    assert s.expand(6) == [1, 26, 324, 2652, 16302, 81081]


def test_expansion_u2_interleaves():
    s = hs_compact(HilbertParams((0, 0, 0, 0), 2))
    assert s.expand(5) == [1, 0, 26, 0, 324]


def test_expand_geometric():
    one = LaurentPoly.one()
    from collections import Counter

    s = hilbert.HilbertSeries(one, Counter({2: 1}), dim=0)
    assert s.expand(5) == [1, 1, 1, 1, 1]


def test_general_engine_rejects_non_regular():
    with pytest.raises(NonRegularMu):
        hs_general(HilbertParams((0, 0, 0, 0), 1))


def test_cross_engine_at_witness_point():
    p = HilbertParams((9, 4, 2, 1), 10)
    g = hs_general(p)
    c = hs_compact(p)
    assert g.numerator == c.numerator
    assert g.expand(40) == c.expand(40)


def test_general_denominator_weights():
    p = HilbertParams((9, 4, 2, 1), 10)
    ws = hs_general(p).denominator_weights()
    assert len(ws) == 26
    assert ws.count(10) == 2  # both zero weights contribute t^u


def test_24form_leading_terms():
    p = HilbertParams((0, 0, 0, 0), 1)
    n24 = numerator_24form(p)
    assert n24.coeff(0) == 1
    assert n24.coeff(2) == 2
    assert n24.degree2() == 26  # degree 13u
    assert n24 * LaurentPoly.one_minus(2) * LaurentPoly.one_minus(2) == c_num(p)


def c_num(p):
    return hs_compact(p).numerator


def test_substitution_law():
    base = c_num(HilbertParams((0, 0, 0, 0), 1))
    for u in range(1, 7):
        assert c_num(HilbertParams((0, 0, 0, 0), u)) == base.substituted_power(u)


def test_numerator_palindromic_for_general_mu():
    for mu, u in [((9, 4, 2, 1), 10), ((2, 1, 1, 0), 4), ((-3, 2, 1, 0), 6)]:
        p = HilbertParams(mu, u)
        num = hs_compact(p).numerator
        assert num.is_palindromic2(num.degree2())
        assert num.degree2() == 2 * 15 * u


def test_series_json_roundtrip():
    s = hs_compact(HilbertParams((0, 0, 0, 0), 2))
    doc = json.loads(json.dumps(s.to_json_dict()))
    assert doc["dim"] == 15
    assert sorted(doc["denominator"]) == ["2"] * 26
