"""Exact model of the F4 weight lattice, roots and pairings.

Weights live in the rank-4 lattice spanned by e1..e4 and are stored as
4-tuples of exact rationals.  Coweights live in the dual lattice spanned
by f1..f4 (fi dual to ei) and are stored as 4-tuples of integers.  The
invariant bilinear form is the Euclidean dot product on e-coordinates.
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Sequence, Tuple

WeightVec = Tuple[Q, Q, Q, Q]
Coweight = Tuple[int, int, int, int]


def wv(*coords) -> WeightVec:
    """Build a weight vector from 4 rational-like coordinates."""
    if len(coords) != 4:
        raise ValueError("weight vectors have 4 coordinates")
    return tuple(Q(c) for c in coords)  # type: ignore[return-value]


ZERO: WeightVec = wv(0, 0, 0, 0)
E1, E2, E3, E4 = (wv(*(1 if j == i else 0 for j in range(4))) for i in range(4))

# Simple roots: two long (e2-e3, e3-e4) and two short (e4, half-vector).
ALPHA1: WeightVec = wv(0, 1, -1, 0)
ALPHA2: WeightVec = wv(0, 0, 1, -1)
ALPHA3: WeightVec = wv(0, 0, 0, 1)
ALPHA4: WeightVec = wv(Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2))
SIMPLE_ROOTS: Tuple[WeightVec, ...] = (ALPHA1, ALPHA2, ALPHA3, ALPHA4)

OMEGA1: WeightVec = wv(1, 1, 0, 0)
OMEGA2: WeightVec = wv(2, 1, 1, 0)
OMEGA3: WeightVec = wv(Q(3, 2), Q(1, 2), Q(1, 2), Q(1, 2))
OMEGA4: WeightVec = E1
FUNDAMENTAL_WEIGHTS: Tuple[WeightVec, ...] = (OMEGA1, OMEGA2, OMEGA3, OMEGA4)

WEYL_VECTOR: WeightVec = wv(Q(11, 2), Q(5, 2), Q(3, 2), Q(1, 2))


def add(v: WeightVec, w: WeightVec) -> WeightVec:
    return tuple(a + b for a, b in zip(v, w))  # type: ignore[return-value]


def sub(v: WeightVec, w: WeightVec) -> WeightVec:
    return tuple(a - b for a, b in zip(v, w))  # type: ignore[return-value]


def neg(v: WeightVec) -> WeightVec:
    return tuple(-a for a in v)  # type: ignore[return-value]


def scale(c, v: WeightVec) -> WeightVec:
    c = Q(c)
    return tuple(c * a for a in v)  # type: ignore[return-value]


def killing(v: WeightVec, w: WeightVec) -> Q:
    """Invariant form: Euclidean dot product on e-coordinates."""
    return sum((a * b for a, b in zip(v, w)), Q(0))


def pairing(w: WeightVec, m: Sequence[int]) -> Q:
    """Weight-coweight pairing with fi dual to ei."""
    return sum((c * a for c, a in zip(w, m)), Q(0))


def is_lattice_weight(v: WeightVec) -> bool:
    """All coordinates integral, or all half-odd-integral."""
    dens = {c.denominator for c in v}
    if dens == {1}:
        return True
    return all(c.denominator == 2 for c in v)


@lru_cache(maxsize=1)
def positive_roots() -> Tuple[WeightVec, ...]:
    """The 24 positive roots: ei, ei +- ej (i<j), (e1 +- e2 +- e3 +- e4)/2."""
    roots: List[WeightVec] = [E1, E2, E3, E4]
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                r = [Q(0)] * 4
                r[i] = Q(1)
                r[j] = Q(s)
                roots.append(tuple(r))  # type: ignore[arg-type]
    for signs in product((1, -1), repeat=3):
        roots.append(wv(Q(1, 2), *(Q(s, 2) for s in signs)))
    roots = sorted(set(roots), reverse=True)
    assert len(roots) == 24
    return tuple(roots)


@lru_cache(maxsize=1)
def all_roots() -> Tuple[WeightVec, ...]:
    """All 48 roots, positive ones first, each followed later by its negative."""
    pos = positive_roots()
    return pos + tuple(neg(r) for r in pos)


class RootSystemF4:
    """Immutable bundle of the F4 root and weight data."""

    def __init__(self) -> None:
        self.simple_roots = SIMPLE_ROOTS
        self.positive_roots = positive_roots()
        self.all_roots = all_roots()
        self.fundamental_weights = FUNDAMENTAL_WEIGHTS
        self.weyl_vector = WEYL_VECTOR


@lru_cache(maxsize=1)
def root_system() -> RootSystemF4:
    return RootSystemF4()


def is_regular(m: Coweight) -> bool:
    """True iff no positive root pairs to zero with the coweight."""
    return all(pairing(a, m) != 0 for a in positive_roots())


@lru_cache(maxsize=1)
def weights_of_V26() -> Tuple[WeightVec, ...]:
    """The 26 weights of the minimal representation, zero twice, sorted descending."""
    ws: List[WeightVec] = []
    for signs in product((1, -1), repeat=4):
        ws.append(wv(*(Q(s, 2) for s in signs)))
    for i in range(4):
        for s in (1, -1):
            ws.append(scale(s, (E1, E2, E3, E4)[i]))
    ws.extend([ZERO, ZERO])
    ws.sort(reverse=True)
    assert len(ws) == 26
    return tuple(ws)
