"""Rational functions in tableau variables, kept in reduced canonical form.

Canonical form: gcd(num, den) = 1, denominator monic under the graded-lex
order, and num = 0 stored as 0/1.  Structural equality then coincides with
equality of rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import Polynomial, Var, divexact, poly_gcd

_ONE = Fraction(1)


class PoleError(ArithmeticError):
    """Evaluation hit a zero of the denominator."""


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = Polynomial.zero()
            self.den = Polynomial.one()
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = divexact(num, g)
                den = divexact(den, g)
            lc = den.leading_coeff()
            if lc != 1:
                inv = _ONE / lc
                num = num.scale(inv)
                den = den.scale(inv)
            self.num = num
            self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        # internal: caller guarantees the pair is already canonical
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        f._hash = None
        return f

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls._raw(p, Polynomial.one())

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._raw(Polynomial.constant(c), Polynomial.one())

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._raw(Polynomial.zero(), Polynomial.one())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._raw(Polynomial.one(), Polynomial.one())

    @classmethod
    def variable(cls, k: int, i: int) -> "RationalFunction":
        return cls._raw(Polynomial.variable(k, i), Polynomial.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == Polynomial.one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den == Polynomial.one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.num, self.den))
        return h

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            num = self.num + other.num
            common = d1
            a = b = Polynomial.one()
        else:
            g = poly_gcd(d1, d2)
            if g.is_constant():
                num = self.num * d2 + other.num * d1
                return RationalFunction._monic(num, d1 * d2)
            a = divexact(d1, g)
            b = divexact(d2, g)
            num = self.num * b + other.num * a
            common = g
        if num.is_zero():
            return RationalFunction.zero()
        # num is coprime to a and b; only the shared factor can cancel
        g2 = poly_gcd(num, common)
        if not g2.is_constant():
            num = divexact(num, g2)
            common = divexact(common, g2)
        return RationalFunction._monic(num, common * a * b)

    @classmethod
    def _monic(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        if num.is_zero():
            return cls.zero()
        lc = den.leading_coeff()
        if lc != 1:
            inv = _ONE / lc
            num = num.scale(inv)
            den = den.scale(inv)
        return cls._raw(num, den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero()
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        g1 = poly_gcd(n1, d2)
        if not g1.is_constant():
            n1 = divexact(n1, g1)
            d2 = divexact(d2, g1)
        g2 = poly_gcd(n2, d1)
        if not g2.is_constant():
            n2 = divexact(n2, g2)
            d1 = divexact(d1, g2)
        return RationalFunction._monic(n1 * n2, d1 * d2)

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction._monic(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.reciprocal() ** (-e)
        # num and den stay coprime under powers
        return RationalFunction._monic(self.num**e, self.den**e)

    def scale(self, c) -> "RationalFunction":
        c = Fraction(c)
        if not c:
            return RationalFunction.zero()
        return RationalFunction._raw(self.num.scale(c), self.den)

    def evaluate(self, coords: Mapping[Var, Fraction]) -> Fraction:
        dv = self.den.evaluate(coords)
        if dv == 0:
            raise PoleError("denominator vanishes at the given point")
        return self.num.evaluate(coords) / dv

    def derivative(self, var: Var) -> "RationalFunction":
        if self.is_polynomial():
            return RationalFunction.from_poly(self.num.derivative(var))
        n, d = self.num, self.den
        return RationalFunction(n.derivative(var) * d - n * d.derivative(var), d * d)

    def subs_offsets(self, offsets: Mapping[Var, Fraction]) -> "RationalFunction":
        # affine substitution is a ring automorphism fixing leading terms,
        # so reducedness and the monic denominator survive untouched
        return RationalFunction._raw(
            self.num.subs_offsets(offsets), self.den.subs_offsets(offsets)
        )

    def swap_vars(self, a: Var, b: Var) -> "RationalFunction":
        # an automorphism again, but the leading term may move
        return RationalFunction._monic(
            self.num.swap_vars(a, b), self.den.swap_vars(a, b)
        )

    def variables(self) -> list[Var]:
        return sorted(set(self.num.variables()) | set(self.den.variables()))

    def __repr__(self) -> str:
        from .textform import rf_text

        return rf_text(self)


def linear_valuation(p: Polynomial, lin: Polynomial) -> tuple[int, Polynomial]:
    """Multiplicity of the linear factor lin in p, plus the cofactor.

    Returns (0, p) when lin does not divide p; valuation of the zero
    polynomial is reported as 0 with cofactor 0.
    """
    if p.is_zero():
        return 0, p
    val = 0
    while True:
        q = divexact(p, lin)
        if q is None:
            return val, p
        val += 1
        p = q


def divide_by_linear(f: RationalFunction, lin: Polynomial) -> RationalFunction:
    """f / lin for a monic linear (hence irreducible) polynomial lin."""
    if f.is_zero():
        return f
    q = divexact(f.num, lin)
    if q is not None:
        return RationalFunction._raw(q, f.den)
    return RationalFunction._raw(f.num, f.den * lin)


def multiply_by_linear(f: RationalFunction, lin: Polynomial) -> RationalFunction:
    """f * lin for a monic linear polynomial lin."""
    if f.is_zero():
        return f
    q = divexact(f.den, lin)
    if q is not None:
        return RationalFunction._raw(f.num, q)
    return RationalFunction._raw(f.num * lin, f.den)
