"""Variety builds on top of the weighted F4 embedding.

A build starts from the 26-generator embedding, optionally takes projective
cones (add a weight-1 generator) and hypersurface sections (multiply the
numerator by 1 - t^d, or cancel a generator of weight d when the section is
quasilinear).  Degrees, canonical weights and orbifold point counts are read
off the resulting Hilbert series exactly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction as Q
from typing import List, Sequence, Tuple

from .errors import (
    IndexOutOfRange,
    NoMatchingGenerator,
    NotZeroDimensional,
    PoleOrderMismatch,
    WeightsNotIntegral,
)
from .hilbert import HilbertParams, HilbertSeries, embedding_weights2, hs_compact
from .laurent import LaurentPoly


@dataclass(frozen=True)
class EmbeddingData:
    params: HilbertParams
    weights: Tuple[int, ...]  # 26 positive integers, descending
    dim: int
    series: HilbertSeries


def embedding(mu, u: int) -> EmbeddingData:
    """The 26-generator weighted embedding for (mu, u)."""
    p = HilbertParams(tuple(mu), u)
    w2 = embedding_weights2(p)
    if any(w % 2 for w in w2):
        raise WeightsNotIntegral(
            "coordinate sum of mu is odd; embedding weights are half-integers"
        )
    weights = tuple(w // 2 for w in w2)
    return EmbeddingData(p, weights, dim=15, series=hs_compact(p))


def is_wellformed_weights(weights: Sequence[int]) -> bool:
    """gcd half of well-formedness: no n of the n+1 weights share a factor."""
    ws = list(weights)
    for i in range(len(ws)):
        if math.gcd(*(ws[:i] + ws[i + 1 :])) != 1:
            return False
    return True


@dataclass(frozen=True)
class VarietyBuild:
    base: EmbeddingData
    cones: int
    section_degrees: Tuple[Tuple[int, bool], ...]  # (degree, quasilinear)
    weights: Tuple[int, ...]
    dim: int
    numerator: LaurentPoly
    canonical_weight: int

    @classmethod
    def from_embedding(cls, e: EmbeddingData) -> "VarietyBuild":
        return cls(
            base=e,
            cones=0,
            section_degrees=(),
            weights=e.weights,
            dim=e.dim,
            numerator=e.series.numerator,
            canonical_weight=-11 * e.params.u,
        )

    def series(self) -> HilbertSeries:
        return HilbertSeries(
            self.numerator, Counter(2 * w for w in self.weights), dim=self.dim
        )


def cone(b: VarietyBuild) -> VarietyBuild:
    """Projective cone: one weight-1 generator, dim +1, canonical -1."""
    return replace(
        b,
        cones=b.cones + 1,
        weights=tuple(sorted(b.weights + (1,), reverse=True)),
        dim=b.dim + 1,
        canonical_weight=b.canonical_weight - 1,
    )


def section(b: VarietyBuild, d: int, quasilinear: bool = False) -> VarietyBuild:
    """Hypersurface section of degree d; quasilinear ones cancel a generator."""
    if d <= 0:
        raise ValueError("section degree must be positive")
    if quasilinear:
        if d not in b.weights:
            raise NoMatchingGenerator(f"no generator of weight {d} to cancel")
        ws = list(b.weights)
        ws.remove(d)
        weights = tuple(ws)
        numerator = b.numerator
    else:
        weights = b.weights
        numerator = b.numerator * LaurentPoly.one_minus(2 * d)
    return replace(
        b,
        section_degrees=b.section_degrees + ((d, quasilinear),),
        weights=weights,
        dim=b.dim - 1,
        numerator=numerator,
        canonical_weight=b.canonical_weight + d,
    )


def degree(b: VarietyBuild) -> Q:
    """Self-intersection D^dim of the polarizing divisor.

    Computed as lim_{t->1} (1-t)^(dim+1) P(t) after exact cancellation of
    the pole at t = 1.
    """
    n_factors = len(b.weights)
    order_needed = n_factors - (b.dim + 1)
    if order_needed < 0 or b.numerator.vanishing_order_at_one() != order_needed:
        raise PoleOrderMismatch(
            f"numerator vanishes to order {b.numerator.vanishing_order_at_one()}"
            f", expected {order_needed}"
        )
    reduced = b.numerator.deflated_at_one(order_needed)
    value = reduced.eval_one()
    for w in b.weights:
        value /= w
    return value


def orbifold_point_count(b: VarietyBuild) -> int:
    """Length of the locus where all weight-1 generators vanish.

    Cancelling the weight-1 factors leaves a series whose pole order at t=1
    decides the locus dimension: order <= 0 means empty, order 1 gives a
    finite length after normalising by the weight gcd.
    """
    remaining = [w for w in b.weights if w != 1] or list(b.weights)
    order = b.numerator.vanishing_order_at_one()
    pole = len(remaining) - order
    if pole <= 0:
        return 0
    if pole > 1:
        raise NotZeroDimensional(f"locus has pole order {pole} at t=1")
    reduced = b.numerator.deflated_at_one(order)
    value = reduced.eval_one()
    for w in remaining:
        value /= w
    e = math.gcd(*remaining)
    length = e * value
    if length.denominator != 1:
        raise AssertionError(f"non-integer length {length}")
    return int(length)


def family_ladder(k: int) -> VarietyBuild:
    """Index-k 3-fold: (k-2) cones on the (0,2) embedding, then (k+10)
    quasilinear quadric sections."""
    if not 6 <= k <= 16:
        raise IndexOutOfRange(f"ladder index {k} outside 6..16")
    b = VarietyBuild.from_embedding(embedding((0, 0, 0, 0), 2))
    for _ in range(k - 2):
        b = cone(b)
    for _ in range(k + 10):
        b = section(b, 2, quasilinear=True)
    return b


# -- cyclic quotient singularities ----------------------------------------

@dataclass(frozen=True)
class QuotSingularity:
    r: int
    a: Tuple[int, ...]

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("order r must be positive")
        if any(x % self.r == 0 for x in self.a):
            raise ValueError("weights must be nonzero modulo r")
        object.__setattr__(self, "a", tuple(x % self.r for x in self.a))


def is_isolated(s: QuotSingularity) -> bool:
    return all(math.gcd(s.r, x) == 1 for x in s.a)


def is_terminal(s: QuotSingularity) -> bool:
    """Reid's criterion: every partial residue sum exceeds r."""
    return all(
        sum(k * x % s.r for x in s.a) > s.r for k in range(1, s.r)
    )
