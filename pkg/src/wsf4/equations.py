"""The 27 defining quadrics of the minimal F4 embedding, with exact
evaluation, span-rank, graded-piece and Jacobian-rank checks.

The quadric table is embedded below and also shipped as a data file
(``data/quadrics_f4.dat``); both carry the same checksum so the two copies
can be validated against each other bit-exactly.

Rank computations default to two independent 62-bit primes; pass
``exact=True`` for fraction-free rational elimination.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import (
    DataCorrupt,
    DegreeBoundExceeded,
    PointNotOnVariety,
)

N_VARS = 26

# One term per line: equation index, variable indices i <= j (1-based),
# coefficient as a reduced fraction.
_QUADRIC_TABLE = """\
1 1 25 1
1 1 26 -1/2
1 4 5 -3/2
1 6 7 -3/2
1 8 9 -3/2
1 10 11 3/2
2 1 12 1
2 4 25 -1/3
2 4 26 -1/3
2 6 13 -1
2 8 14 -1
2 10 15 1
3 1 16 1
3 4 17 -1
3 6 25 1/3
3 6 26 -2/3
3 11 14 -1
3 9 15 1
4 1 18 1
4 4 19 -1
4 8 25 1/3
4 8 26 -2/3
4 11 13 1
4 7 15 -1
5 1 20 1
5 4 21 -1
5 10 25 -1/3
5 10 26 2/3
5 9 13 -1
5 7 14 1
6 1 22 1
6 6 19 -1
6 8 17 1
6 11 25 -1/3
6 11 26 -1/3
6 5 15 1
7 1 23 1
7 6 21 -1
7 10 17 -1
7 9 25 1/3
7 9 26 1/3
7 5 14 -1
8 1 24 1
8 8 21 -1
8 10 19 -1
8 7 25 -1/3
8 7 26 -1/3
8 5 13 1
9 1 2 1
9 11 21 -1
9 9 19 -1
9 7 17 -1
9 5 25 -1/3
9 5 26 2/3
10 1 3 1
10 6 24 1
10 8 23 -1
10 10 22 -1
10 15 21 -1
10 14 19 -1
10 5 12 1
10 13 17 -1
10 25 25 -1/3
10 26 26 1/3
11 4 22 1
11 6 18 -1
11 8 16 1
11 11 12 -1
11 15 25 2/3
11 15 26 -1/3
12 4 23 1
12 6 20 -1
12 10 16 -1
12 9 12 1
12 14 25 -2/3
12 14 26 1/3
13 4 24 1
13 8 20 -1
13 10 18 -1
13 7 12 -1
13 13 25 2/3
13 13 26 -1/3
14 2 4 1
14 6 24 -1
14 8 23 1
14 10 22 1
14 11 20 -1
14 9 18 -1
14 7 16 -1
14 5 12 -1
14 25 26 2/3
14 26 26 -1/3
15 3 4 1
15 15 20 -1
15 14 18 -1
15 13 16 -1
15 12 25 -1/3
15 12 26 2/3
16 2 6 1
16 11 23 -1
16 9 22 -1
16 5 16 1
16 17 25 -2/3
16 17 26 1/3
17 3 6 1
17 15 23 -1
17 14 22 -1
17 16 25 1/3
17 16 26 1/3
17 12 17 -1
18 2 8 1
18 11 24 -1
18 7 22 1
18 5 18 1
18 19 25 -2/3
18 19 26 1/3
19 3 8 1
19 15 24 -1
19 13 22 1
19 18 25 1/3
19 18 26 1/3
19 12 19 -1
20 2 10 1
20 9 24 -1
20 7 23 -1
20 5 20 -1
20 21 25 2/3
20 21 26 -1/3
21 3 10 1
21 14 24 -1
21 13 23 -1
21 20 25 -1/3
21 20 26 -1/3
21 12 21 1
22 3 11 1
22 2 15 -1
22 22 25 -1/3
22 22 26 2/3
22 17 18 1
22 16 19 -1
23 3 9 1
23 2 14 -1
23 23 25 1/3
23 23 26 -2/3
23 17 20 -1
23 16 21 1
24 3 7 1
24 2 13 -1
24 24 25 -1/3
24 24 26 2/3
24 19 20 1
24 18 21 -1
25 3 5 1
25 2 25 -1/3
25 2 26 -1/3
25 17 24 1
25 19 23 -1
25 21 22 1
26 3 25 1
26 3 26 -1/2
26 2 12 -3/2
26 16 24 3/2
26 18 23 -3/2
26 20 22 3/2
27 1 3 1
27 2 4 -1
27 6 24 -1
27 8 23 1
27 10 22 1
27 11 20 1
27 9 18 1
27 15 21 -1
27 7 16 1
27 14 19 -1
27 5 12 -1
27 13 17 -1
27 25 25 1/3
27 25 26 -1/3
27 26 26 1/3
"""

TABLE_SHA256 = "bbd57781b5227c45e77150b878a6643573d20be7e531a1f1692a1dca5ef35f83"

# Two independent 62-bit primes for modular rank computations.
PRIMES = (4611686018427387847, 4611686018427387817)


@dataclass(frozen=True)
class Quadric:
    """Sparse degree-2 form: (i, j) with i <= j mapped to a rational."""

    terms: Tuple[Tuple[Tuple[int, int], Q], ...]

    def coeff(self, i: int, j: int) -> Q:
        key = (min(i, j), max(i, j))
        for k, c in self.terms:
            if k == key:
                return c
        return Q(0)

    def evaluate(self, point: Sequence[Q]) -> Q:
        total = Q(0)
        for (i, j), c in self.terms:
            total += c * point[i - 1] * point[j - 1]
        return total

    def gradient(self, point: Sequence[Q]) -> List[Q]:
        g = [Q(0)] * N_VARS
        for (i, j), c in self.terms:
            g[i - 1] += c * point[j - 1]
            g[j - 1] += c * point[i - 1]
        return g


class QuadricSet:
    def __init__(self, quadrics: Sequence[Quadric]):
        self.quadrics: Tuple[Quadric, ...] = tuple(quadrics)

    def __len__(self) -> int:
        return len(self.quadrics)

    def __iter__(self):
        return iter(self.quadrics)

    def __getitem__(self, k: int) -> Quadric:
        return self.quadrics[k]


def _parse_table(text: str) -> List[Quadric]:
    by_eq: Dict[int, List[Tuple[Tuple[int, int], Q]]] = {}
    for line in text.strip().splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        eq_s, i_s, j_s, c_s = line.split()
        eq, i, j = int(eq_s), int(i_s), int(j_s)
        if not (1 <= i <= j <= N_VARS):
            raise DataCorrupt(f"bad index pair {i},{j}")
        by_eq.setdefault(eq, []).append(((i, j), Q(c_s)))
    return [Quadric(tuple(by_eq[k])) for k in sorted(by_eq)]


@lru_cache(maxsize=1)
def load() -> QuadricSet:
    """The 27 quadrics, validated against the embedded checksum."""
    digest = hashlib.sha256(_QUADRIC_TABLE.encode()).hexdigest()
    if digest != TABLE_SHA256:
        raise DataCorrupt(f"quadric table checksum mismatch: {digest}")
    qs = _parse_table(_QUADRIC_TABLE)
    if len(qs) != 27:
        raise DataCorrupt(f"expected 27 quadrics, parsed {len(qs)}")
    return QuadricSet(qs)


def data_file_text() -> str:
    """Contents of the shipped data file (should equal the embedded table)."""
    return (
        resources.files("wsf4").joinpath("data/quadrics_f4.dat").read_text()
    )


def evaluate(qs: QuadricSet, point: Sequence) -> List[Q]:
    pt = [Q(c) for c in point]
    if len(pt) != N_VARS:
        raise ValueError(f"point must have {N_VARS} coordinates")
    return [q.evaluate(pt) for q in qs]


# -- linear algebra kernels ------------------------------------------------

def _rank_mod_p(rows: List[Dict[int, int]], p: int) -> int:
    """Sparse Gaussian elimination over GF(p); consumes its input."""
    pivots: Dict[int, Dict[int, int]] = {}  # pivot column -> normalised row
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                row = {cc: (vv * inv) % p for cc, vv in row.items()}
                pivots[c] = row
                rank += 1
                break
            f = row[c]
            new = {}
            for cc, vv in row.items():
                w = (vv - f * piv.get(cc, 0)) % p
                if w:
                    new[cc] = w
            for cc, vv in piv.items():
                if cc not in row:
                    w = (-f * vv) % p
                    if w:
                        new[cc] = w
            row = new
    return rank


def _rank_exact(rows: List[Dict[int, Q]]) -> int:
    pivots: Dict[int, Dict[int, Q]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivots[c] = {cc: vv * inv for cc, vv in row.items()}
                rank += 1
                break
            f = row[c]
            new = {}
            for cc in set(row) | set(piv):
                w = row.get(cc, Q(0)) - f * piv.get(cc, Q(0))
                if w != 0:
                    new[cc] = w
            row = new
    return rank


def _sparse_rank(rows_q: List[Dict[int, Q]], exact: bool = False) -> int:
    """Rank of a sparse rational matrix; modular with confirmation by default."""
    if exact:
        return _rank_exact(rows_q)
    ranks = set()
    for p in PRIMES:
        rows = []
        for row in rows_q:
            r = {}
            for c, v in row.items():
                r[c] = (v.numerator * pow(v.denominator, -1, p)) % p
            rows.append(r)
        ranks.add(_rank_mod_p(rows, p))
    if len(ranks) != 1:
        # a prime divided a pivot minor; fall back to the exact path
        return _rank_exact(rows_q)
    return ranks.pop()


@lru_cache(maxsize=4)
def _monomial_index(d: int) -> Dict[Tuple[int, ...], int]:
    """Degree-d monomials in 26 variables, as sorted index tuples."""
    monos = list(combinations_with_replacement(range(1, N_VARS + 1), d))
    return {m: k for k, m in enumerate(monos)}


def _quadric_row(q: Quadric, extra: Tuple[int, ...], index: Dict) -> Dict[int, Q]:
    row: Dict[int, Q] = {}
    for (i, j), c in q.terms:
        m = tuple(sorted((i, j) + extra))
        k = index[m]
        row[k] = row.get(k, Q(0)) + c
    return row


def span_rank(qs: QuadricSet, exact: bool = False) -> int:
    """Rank of the 27 quadrics inside the 351-dimensional degree-2 space."""
    index = _monomial_index(2)
    rows = [_quadric_row(q, (), index) for q in qs]
    return _sparse_rank(rows, exact)


def graded_piece_dim(qs: QuadricSet, d: int, exact: bool = False) -> int:
    """Dimension of (polynomial ring / ideal) in degree d, for d = 2..4."""
    if not 2 <= d <= 4:
        raise DegreeBoundExceeded(f"degree {d} outside supported range 2..4")
    index = _monomial_index(d)
    extras = list(combinations_with_replacement(range(1, N_VARS + 1), d - 2))
    rows = [_quadric_row(q, e, index) for q in qs for e in extras]
    return len(index) - _sparse_rank(rows, exact)


def jacobian_rank_at(qs: QuadricSet, point: Sequence, exact: bool = True) -> int:
    """Rank of the 27 x 26 Jacobian at a point of the affine cone."""
    pt = [Q(c) for c in point]
    if all(c == 0 for c in pt):
        raise PointNotOnVariety("the origin is excluded")
    if any(v != 0 for v in evaluate(qs, pt)):
        raise PointNotOnVariety("point does not satisfy all quadrics")
    rows = []
    for q in qs:
        g = q.gradient(pt)
        rows.append({c: v for c, v in enumerate(g) if v != 0})
    return _sparse_rank(rows, exact)
