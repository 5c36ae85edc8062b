"""Dimensions, weight multiplicities and symmetric-square decompositions
of irreducible F4 representations.

Dimensions come from the Weyl product formula.  Full weight multiplicities
use the Freudenthal recursion, which is exact and avoids evaluating the
alternating character quotient in formal variables.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction as Q
from functools import lru_cache
from typing import Dict, List, Tuple

from . import weyl
from .errors import DecompositionFailure, DimensionBoundExceeded, NonDominant
from .lattice import (
    SIMPLE_ROOTS,
    WEYL_VECTOR,
    WeightVec,
    ZERO,
    add,
    is_lattice_weight,
    killing,
    neg,
    positive_roots,
    scale,
    sub,
)

CharacterTable = Dict[WeightVec, int]

DEFAULT_DIM_BOUND = 10_000


def is_dominant(hw: WeightVec) -> bool:
    return all(killing(hw, a) >= 0 for a in SIMPLE_ROOTS)


def _require_dominant(hw: WeightVec) -> None:
    if not is_lattice_weight(hw) or not is_dominant(hw):
        raise NonDominant(f"not a dominant lattice weight: {hw}")


def weyl_dim(hw: WeightVec) -> int:
    """Dimension of the irreducible with the given highest weight."""
    _require_dominant(hw)
    num = Q(1)
    rho = WEYL_VECTOR
    for a in positive_roots():
        num *= killing(add(hw, rho), a) / killing(rho, a)
    if num.denominator != 1 or num <= 0:
        raise AssertionError(f"dimension formula gave {num}")
    return int(num)


def dominant_representative(w: WeightVec) -> WeightVec:
    """Image of a weight in the dominant chamber under the Weyl group."""
    while True:
        for a in SIMPLE_ROOTS:
            c = killing(w, a)
            if c < 0:
                w = sub(w, scale(2 * c / killing(a, a), a))
                break
        else:
            return w


def _dominant_candidates(hw: WeightVec) -> List[Tuple[WeightVec, int]]:
    """Dominant weights below hw in the root order, with height of hw - mu.

    Solves hw - mu = sum n_i alpha_i for each dominant mu in the norm ball
    and keeps those with nonnegative integer n_i.
    """
    limit = killing(hw, hw)
    out: List[Tuple[WeightVec, int]] = []
    # enumerate nonnegative integer combinations of fundamental weights
    bound = 16  # coefficients beyond this leave the norm ball for desk-scale hw
    from .lattice import FUNDAMENTAL_WEIGHTS

    for m1 in range(bound):
        w1 = scale(m1, FUNDAMENTAL_WEIGHTS[0])
        if m1 and killing(w1, w1) > limit:
            break
        for m2 in range(bound):
            w2 = add(w1, scale(m2, FUNDAMENTAL_WEIGHTS[1]))
            if m2 and killing(w2, w2) > limit:
                break
            for m3 in range(bound):
                w3 = add(w2, scale(m3, FUNDAMENTAL_WEIGHTS[2]))
                if m3 and killing(w3, w3) > limit:
                    break
                for m4 in range(bound):
                    mu = add(w3, scale(m4, FUNDAMENTAL_WEIGHTS[3]))
                    if killing(mu, mu) > limit:
                        break
                    ht = _height_below(hw, mu)
                    if ht is not None:
                        out.append((mu, ht))
    out.sort(key=lambda p: (p[1], p[0]))
    return out


def _height_below(hw: WeightVec, mu: WeightVec):
    """Height sum n_i if hw - mu is a nonnegative integer combination of
    simple roots, else None."""
    d = sub(hw, mu)
    # invert the simple-root matrix: n = A^{-1} d, hard-coded per column
    # coordinates of d in the alpha basis
    n1 = d[0] + d[1]
    n2 = 2 * d[0] + d[1] + d[2]
    n3 = 3 * d[0] + d[1] + d[2] + d[3]
    n4 = 2 * d[0]
    # verify (guards against arithmetic slips in the closed form)
    chk = add(
        add(scale(n1, SIMPLE_ROOTS[0]), scale(n2, SIMPLE_ROOTS[1])),
        add(scale(n3, SIMPLE_ROOTS[2]), scale(n4, SIMPLE_ROOTS[3])),
    )
    if chk != d:
        raise AssertionError("alpha-basis inversion failed")
    ns = (n1, n2, n3, n4)
    if all(n.denominator == 1 and n >= 0 for n in ns):
        return int(sum(ns))
    return None


def character(hw: WeightVec, dim_bound: int = DEFAULT_DIM_BOUND) -> CharacterTable:
    """Weight multiplicities of the irreducible with highest weight hw.

    Freudenthal recursion over dominant weights, then Weyl-orbit expansion;
    multiplicity is constant on Weyl orbits.
    """
    _require_dominant(hw)
    d = weyl_dim(hw)
    if d > dim_bound:
        raise DimensionBoundExceeded(f"dim {d} exceeds bound {dim_bound}")
    rho = WEYL_VECTOR
    top = killing(add(hw, rho), add(hw, rho))
    limit = killing(hw, hw)
    pos = positive_roots()

    dom_mult: Dict[WeightVec, Q] = {}
    for mu, ht in _dominant_candidates(hw):
        if ht == 0:
            dom_mult[mu] = Q(1)
            continue
        acc = Q(0)
        for a in pos:
            k = 1
            while True:
                w = add(mu, scale(k, a))
                if killing(w, w) > limit:
                    break
                m = dom_mult.get(dominant_representative(w))
                if m:
                    acc += m * killing(w, a)
                k += 1
        mr = add(mu, rho)
        den = top - killing(mr, mr)
        m = 2 * acc / den
        if m.denominator != 1 or m < 0:
            raise AssertionError(f"bad multiplicity {m} at {mu}")
        if m != 0:
            dom_mult[mu] = m

    table: CharacterTable = {}
    for mu, m in dom_mult.items():
        for w in weyl.orbit(mu):
            table[w] = int(m)
    total = sum(table.values())
    if total != d:
        raise AssertionError(f"character total {total} != dim {d}")
    return table


def sym2_weights(hw: WeightVec, dim_bound: int = DEFAULT_DIM_BOUND) -> Counter:
    """Weight multiset of the symmetric square of the irreducible."""
    tab = character(hw, dim_bound)
    flat: List[WeightVec] = []
    for w, m in sorted(tab.items(), reverse=True):
        flat.extend([w] * m)
    out: Counter = Counter()
    for i in range(len(flat)):
        for j in range(i, len(flat)):
            out[add(flat[i], flat[j])] += 1
    return out


def sym2_decompose(
    hw: WeightVec, dim_bound: int = DEFAULT_DIM_BOUND
) -> Dict[WeightVec, int]:
    """Decompose the symmetric square into irreducibles by highest-weight
    stripping, largest dominant weight first."""
    _require_dominant(hw)
    remaining = sym2_weights(hw, dim_bound)
    out: Dict[WeightVec, int] = {}
    while True:
        live = [w for w, m in remaining.items() if m != 0]
        if not live:
            break
        lam = max(live)
        m = remaining[lam]
        if m < 0 or not is_dominant(lam):
            raise DecompositionFailure(f"stripping failed at {lam} (mult {m})")
        for w, k in character(lam, dim_bound=10 * dim_bound).items():
            remaining[w] -= m * k
            if remaining[w] < 0:
                raise DecompositionFailure(f"negative multiplicity at {w}")
        out[lam] = m
    d = weyl_dim(hw)
    total = sum(m * weyl_dim(lam) for lam, m in out.items())
    if total != d * (d + 1) // 2:
        raise DecompositionFailure("summand dimensions do not add up")
    return out


def homogeneous_dims(hw: WeightVec) -> Tuple[int, int, int]:
    """(parabolic_dim, variety_dim, codim) for the orbit variety of hw."""
    _require_dominant(hw)
    if hw == ZERO:
        raise NonDominant("highest weight must be nonzero")
    variety_dim = sum(1 for a in positive_roots() if killing(a, hw) != 0)
    parabolic_dim = 52 - variety_dim
    codim = weyl_dim(hw) - 1 - variety_dim
    return parabolic_dim, variety_dim, codim
