"""Hilbert series of weighted homogeneous F4 varieties.

Two independent engines:

* ``hs_general`` sums the alternating 1152-term Weyl quotient over a common
  denominator and divides out the Weyl denominator exactly.  Needs a regular
  coweight.
* ``hs_compact`` evaluates the closed-form numerator, organised by five
  weight-family polynomials attached to the Koszul degrees of the minimal
  resolution.  Works for every coweight, including zero.

Both produce the same 26-factor denominator; agreement of the two engines is
one of the package's core consistency checks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Tuple

from . import weyl
from .errors import (
    NonIntegralGrading,
    NonRegularMu,
    PositivityViolation,
)
from .laurent import LaurentPoly
from .lattice import (
    Coweight,
    E1,
    WEYL_VECTOR,
    WeightVec,
    is_regular,
    pairing,
    weights_of_V26,
)


def pairing2(w: WeightVec, mu: Coweight) -> int:
    """Doubled pairing <w, mu>, always an exact integer for lattice weights."""
    v = 2 * pairing(w, mu)
    if v.denominator != 1:
        raise AssertionError(f"pairing {v} not half-integral")
    return int(v)


@dataclass(frozen=True)
class HilbertParams:
    mu: Coweight
    u: int

    def __post_init__(self):
        if self.u <= 0:
            raise PositivityViolation(f"u must be positive, got {self.u}")
        bad = [
            w
            for w in orbit_weights()
            if pairing2(w, self.mu) + 2 * self.u <= 0
        ]
        if bad:
            w = bad[0]
            raise PositivityViolation(
                f"weight <{w},mu>+u = {pairing(w, self.mu) + self.u} not positive"
            )


@dataclass
class HilbertSeries:
    """Numerator over a multiset of (1 - t^w) factors.

    ``denominator2`` counts factors by doubled weight; ``dim`` is the pole
    order at t=1 minus one.
    """

    numerator: LaurentPoly
    denominator2: Counter
    dim: int

    def is_integral(self) -> bool:
        return self.numerator.is_integral() and all(
            d % 2 == 0 for d in self.denominator2
        )

    def denominator_weights(self) -> List[Q]:
        out: List[Q] = []
        for d in sorted(self.denominator2):
            out.extend([Q(d, 2)] * self.denominator2[d])
        return out

    def expand(self, n_terms: int) -> List[int]:
        return expand(self, n_terms)

    def to_json_dict(self) -> dict:
        num = [
            [Q(e, 2).numerator, Q(e, 2).denominator, str(self.numerator.terms[e])]
            for e in sorted(self.numerator.terms)
        ]
        return {
            "numerator": num,
            "denominator": [str(w) for w in self.denominator_weights()],
            "dim": self.dim,
        }


@lru_cache(maxsize=1)
def orbit_weights() -> Tuple[WeightVec, ...]:
    """The 24 distinct nonzero weights of the minimal representation."""
    return tuple(w for w in dict.fromkeys(weights_of_V26()) if any(c != 0 for c in w))


def embedding_weights2(p: HilbertParams) -> List[int]:
    """The 26 doubled embedding weights <chi_i, mu> + u, descending u first."""
    return sorted(
        (pairing2(w, p.mu) + 2 * p.u for w in weights_of_V26()), reverse=True
    )


def _denominator(p: HilbertParams) -> Counter:
    return Counter(embedding_weights2(p))


@lru_cache(maxsize=1)
def _group_images() -> Tuple[Tuple[WeightVec, WeightVec, int], ...]:
    """Per Weyl element: (image of rho, image of the highest weight, sign)."""
    return tuple(
        (e.act(WEYL_VECTOR), e.act(E1), e.sign) for e in weyl.generate()
    )


def hs_general(p: HilbertParams) -> HilbertSeries:
    """Alternating Weyl-sum engine; requires a regular coweight."""
    if not is_regular(p.mu):
        raise NonRegularMu(f"mu = {p.mu} pairs to zero with some root")
    u2 = 2 * p.u
    orbit = orbit_weights()
    factors = {w: LaurentPoly.one_minus(pairing2(w, p.mu) + u2) for w in orbit}

    # Group the 1152 terms by the orbit image of the highest weight: the
    # common denominator then has only 24 distinct factors.
    partial: Dict[WeightVec, LaurentPoly] = {w: LaurentPoly.zero() for w in orbit}
    weyl_den = LaurentPoly.zero()
    for srho, schi, sign in _group_images():
        mono = LaurentPoly.monomial(pairing2(srho, p.mu), sign)
        weyl_den = weyl_den + mono
        partial[schi] = partial[schi] + mono
    if weyl_den.is_zero():
        raise NonRegularMu("Weyl denominator vanished")

    full = LaurentPoly.one()
    for w in orbit:
        full = full * factors[w]
    combined = LaurentPoly.zero()
    for w in orbit:
        combined = combined + partial[w] * full.divide_exact(factors[w])

    num24 = combined.divide_exact(weyl_den)
    zero_factor = LaurentPoly.one_minus(u2)
    numerator = num24 * zero_factor * zero_factor
    return HilbertSeries(numerator, _denominator(p), dim=15)


# -- compact closed form ---------------------------------------------------

def _weight_families() -> Dict[str, List[WeightVec]]:
    """The symmetric weight families appearing in the numerator polynomials."""
    fams: Dict[str, List[WeightVec]] = {}
    fams["half16"] = [
        tuple(Q(s, 2) for s in signs) for signs in product((1, -1), repeat=4)
    ]
    fams["unit8"] = [
        tuple(Q(s) if j == i else Q(0) for j in range(4))
        for i in range(4)
        for s in (1, -1)
    ]
    fams["pair24"] = []
    for i, j in combinations(range(4), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Q(0)] * 4
            v[i], v[j] = Q(si), Q(sj)
            fams["pair24"].append(tuple(v))
    fams["triple32"] = []
    for zero in range(4):
        for signs in product((1, -1), repeat=3):
            v = [Q(0)] * 4
            it = iter(signs)
            for i in range(4):
                if i != zero:
                    v[i] = Q(next(it))
            fams["triple32"].append(tuple(v))
    fams["spin64"] = []
    for pos in range(4):
        for big in (3, -3):
            for signs in product((1, -1), repeat=3):
                v = [Q(0)] * 4
                it = iter(signs)
                for i in range(4):
                    v[i] = Q(big, 2) if i == pos else Q(next(it), 2)
                fams["spin64"].append(tuple(v))
    fams["double8"] = [
        tuple(Q(2 * s) if j == i else Q(0) for j in range(4))
        for i in range(4)
        for s in (1, -1)
    ]
    fams["full16"] = [
        tuple(Q(s) for s in signs) for signs in product((1, -1), repeat=4)
    ]
    return fams


# Multiplicity of each family in the five numerator polynomials, plus the
# constant term.  At mu = 0 these collapse to 27, 78, 351, 650, 351.
_P_RECIPES: Tuple[Dict[str, int], ...] = (
    {"unit8": 1, "half16": 1, "const": 3},
    {"pair24": 1, "unit8": 2, "half16": 2, "const": 6},
    {"spin64": 1, "triple32": 1, "pair24": 3, "unit8": 7, "half16": 7, "const": 15},
    {
        "spin64": 2,
        "triple32": 2,
        "pair24": 5,
        "unit8": 12,
        "half16": 12,
        "double8": 1,
        "full16": 1,
        "const": 26,
    },
    {
        "spin64": 1,
        "triple32": 1,
        "pair24": 3,
        "unit8": 6,
        "half16": 6,
        "double8": 1,
        "full16": 1,
        "const": 15,
    },
)

# (polynomial index, Koszul shift k): the k-th band pairs with the (15-k)-th.
_P_BANDS: Tuple[Tuple[int, int, int], ...] = (
    (0, 2, -1),
    (1, 3, 1),
    (2, 5, -1),
    (3, 6, 1),
    (4, 7, -1),
)


def numerator_polys(mu: Coweight) -> List[LaurentPoly]:
    """The five weight-family polynomials evaluated at a coweight."""
    fams = _weight_families()
    out: List[LaurentPoly] = []
    for recipe in _P_RECIPES:
        terms: Dict[int, Q] = {}
        for name, mult in recipe.items():
            if name == "const":
                terms[0] = terms.get(0, Q(0)) + mult
                continue
            for w in fams[name]:
                e = pairing2(w, mu)
                terms[e] = terms.get(e, Q(0)) + mult
        out.append(LaurentPoly(terms))
    return out


def compact_numerator(p: HilbertParams) -> LaurentPoly:
    """Closed-form numerator over the 26-factor denominator."""
    u2 = 2 * p.u
    polys = numerator_polys(p.mu)
    num = LaurentPoly.one() + LaurentPoly.monomial(15 * u2)
    for idx, k, sign in _P_BANDS:
        band = LaurentPoly.monomial(k * u2) + LaurentPoly.monomial((15 - k) * u2)
        num = num + (polys[idx] * band).scaled(sign)
    return num


def hs_compact(p: HilbertParams) -> HilbertSeries:
    """Closed-form engine; valid for every coweight including zero."""
    return HilbertSeries(compact_numerator(p), _denominator(p), dim=15)


def numerator_24form(p: HilbertParams) -> LaurentPoly:
    """Numerator over the 24 nonzero-weight factors only (before the two
    zero-weight factors are folded in)."""
    zf = LaurentPoly.one_minus(2 * p.u)
    return compact_numerator(p).divide_exact(zf * zf)


def expand(series: HilbertSeries, n_terms: int) -> List[int]:
    """First n_terms power-series coefficients of the series."""
    if not series.is_integral():
        raise NonIntegralGrading("series has half-integer exponents")
    coeffs = [Q(0)] * n_terms
    for e2, c in series.numerator.terms.items():
        e = e2 // 2
        if 0 <= e < n_terms:
            coeffs[e] += c
        elif e < 0:
            raise NonIntegralGrading("numerator has negative exponents")
    for d2, mult in series.denominator2.items():
        w = d2 // 2
        if w <= 0:
            raise NonIntegralGrading("nonpositive denominator weight")
        for _ in range(mult):
            for i in range(w, n_terms):
                coeffs[i] += coeffs[i - w]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("non-integer expansion coefficient")
        out.append(int(c))
    return out
