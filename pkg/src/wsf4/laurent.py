"""Exact sparse Laurent polynomials in one variable.

Exponents are stored in half-grading units: the stored integer is twice the
true exponent, so half-integer powers of t (which arise from pairings with
the Weyl vector and the spinor-type weights) stay exact integers internally.
Coefficients are exact rationals; zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Dict, Iterable, Tuple

from .errors import NonExactDivision


class LaurentPoly:
    """Sparse exact Laurent polynomial, exponents in half-grading units."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Q] | None = None):
        self.terms: Dict[int, Q] = {}
        if terms:
            for e, c in terms.items():
                c = Q(c)
                if c != 0:
                    self.terms[int(e)] = c

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: Q(1)})

    @classmethod
    def monomial(cls, exp2: int, coeff=1) -> "LaurentPoly":
        return cls({exp2: Q(coeff)})

    @classmethod
    def one_minus(cls, exp2: int) -> "LaurentPoly":
        """The factor 1 - t^(exp2/2)."""
        return cls({0: Q(1), exp2: Q(-1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        """All exponents are true integers (even in half-grading units)."""
        return all(e % 2 == 0 for e in self.terms)

    def degree2(self) -> int:
        """Largest stored exponent (half-grading units)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def valuation2(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def coeff(self, exp2: int) -> Q:
        return self.terms.get(exp2, Q(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            ex = Q(e, 2)
            bits.append(f"{c}*t^{ex}")
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Q(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        r = LaurentPoly()
        r.terms = out
        return r

    def __neg__(self) -> "LaurentPoly":
        r = LaurentPoly()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: Dict[int, Q] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, Q(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        r = LaurentPoly()
        r.terms = out
        return r

    def scaled(self, c) -> "LaurentPoly":
        c = Q(c)
        r = LaurentPoly()
        if c != 0:
            r.terms = {e: c * v for e, v in self.terms.items()}
        return r

    def shifted(self, exp2: int) -> "LaurentPoly":
        r = LaurentPoly()
        r.terms = {e + exp2: c for e, c in self.terms.items()}
        return r

    def substituted_power(self, k: int) -> "LaurentPoly":
        """t -> t^k."""
        r = LaurentPoly()
        r.terms = {e * k: c for e, c in self.terms.items()}
        return r

    def reversed(self) -> "LaurentPoly":
        """t -> 1/t."""
        r = LaurentPoly()
        r.terms = {-e: c for e, c in self.terms.items()}
        return r

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises NonExactDivision on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = dict(self.terms)
        dd = divisor.degree2()
        dlead = divisor.terms[dd]
        min_oe = self.valuation2() - divisor.valuation2()
        out: Dict[int, Q] = {}
        # long division from the top exponent down
        while rem:
            e = max(rem)
            oe = e - dd
            if oe < min_oe:
                raise NonExactDivision("nonzero remainder in exact division")
            q = rem[e] / dlead
            out[oe] = q
            for de, dc in divisor.terms.items():
                te = de + oe
                s = rem.get(te, Q(0)) - q * dc
                if s == 0:
                    rem.pop(te, None)
                else:
                    rem[te] = s
        r = LaurentPoly()
        r.terms = {e: c for e, c in out.items() if c != 0}
        return r

    def eval_one(self) -> Q:
        """Value at t = 1."""
        return sum(self.terms.values(), Q(0))

    def vanishing_order_at_one(self) -> int:
        """Order of vanishing at t = 1 (0 if the value is nonzero)."""
        p = self
        order = 0
        while not p.is_zero() and p.eval_one() == 0:
            p = p.divide_exact(LaurentPoly.one_minus(2))
            order += 1
        return order

    def deflated_at_one(self, order: int) -> "LaurentPoly":
        """Divide by (1 - t)^order exactly."""
        p = self
        for _ in range(order):
            p = p.divide_exact(LaurentPoly.one_minus(2))
        return p

    def is_palindromic2(self, degree2: int) -> bool:
        """N(t) == t^(degree2/2) * N(1/t)."""
        return self == self.reversed().shifted(degree2)


def prod(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.one()
    for f in factors:
        out = out * f
    return out
