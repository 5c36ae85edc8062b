"""The Weyl group W(F4) of order 1152, generated from simple reflections.

Elements are stored as exact 4x4 rational matrices acting on e-coordinates,
together with their sign (determinant, equal to (-1)^length).  The group is
generated once by breadth-first closure and frozen in a canonical order so
every downstream sum is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .lattice import SIMPLE_ROOTS, WeightVec, killing

Matrix = Tuple[Tuple[Q, ...], ...]

IDENTITY: Matrix = tuple(
    tuple(Q(1) if i == j else Q(0) for j in range(4)) for i in range(4)
)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(4)), Q(0)) for j in range(4))
        for i in range(4)
    )


def mat_vec(a: Matrix, v: WeightVec) -> WeightVec:
    return tuple(
        sum((a[i][k] * v[k] for k in range(4)), Q(0)) for i in range(4)
    )  # type: ignore[return-value]


def reflection_matrix(alpha: WeightVec) -> Matrix:
    """Matrix of the reflection v -> v - 2 (v,a)/(a,a) a."""
    norm = killing(alpha, alpha)
    cols = []
    for j in range(4):
        e = tuple(Q(1) if k == j else Q(0) for k in range(4))
        c = 2 * killing(e, alpha) / norm
        cols.append(tuple(e[i] - c * alpha[i] for i in range(4)))
    # cols[j] is the image of e_j; transpose into row-major form
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int  # determinant, equals (-1)^length

    def act(self, v: WeightVec) -> WeightVec:
        return mat_vec(self.matrix, v)


class WeylGroup:
    """All 1152 elements of W(F4) in a fixed canonical order."""

    def __init__(self, elements: Sequence[WeylElement]):
        self.elements: Tuple[WeylElement, ...] = tuple(elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@lru_cache(maxsize=1)
def generate() -> WeylGroup:
    """Breadth-first closure of the four simple reflections."""
    gens = [reflection_matrix(a) for a in SIMPLE_ROOTS]
    seen: Dict[Matrix, int] = {IDENTITY: 1}
    frontier: List[Matrix] = [IDENTITY]
    while frontier:
        nxt: List[Matrix] = []
        for m in frontier:
            s = seen[m]
            for g in gens:
                prod = mat_mul(g, m)
                if prod not in seen:
                    seen[prod] = -s
                    nxt.append(prod)
        frontier = nxt
    elements = [WeylElement(m, s) for m, s in seen.items()]
    elements.sort(key=lambda e: e.matrix, reverse=True)
    assert len(elements) == 1152
    return WeylGroup(elements)


def orbit(w: WeightVec, group: WeylGroup | None = None) -> Tuple[WeightVec, ...]:
    """Deduplicated orbit of a weight, sorted descending."""
    g = group or generate()
    return tuple(sorted({e.act(w) for e in g}, reverse=True))


def stabilizer_order(w: WeightVec, group: WeylGroup | None = None) -> int:
    g = group or generate()
    return sum(1 for e in g if e.act(w) == w)
