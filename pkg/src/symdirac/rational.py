"""Exact arithmetic over the Gaussian rationals Q(i).

Every coefficient in the engine lives here: arbitrary-precision rational
real and imaginary parts, canonical on construction, no floating point.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd

__all__ = ["GaussianRational", "gq", "ZERO", "ONE", "I", "UNITS"]


class GaussianRational:
    """An exact complex number a + b*i with rational a and b.

    Stored as a normalized integer triple (an, bn, den) meaning
    (an + bn*i)/den with den > 0 and gcd(an, bn, den) == 1, so equality is
    structural.  Instances are immutable and hashable.
    """

    __slots__ = ("an", "bn", "den")

    def __init__(self, re=0, im=0):
        re = Fraction(re) if not isinstance(re, Fraction) else re
        im = Fraction(im) if not isinstance(im, Fraction) else im
        den = re.denominator * im.denominator
        an = re.numerator * im.denominator
        bn = im.numerator * re.denominator
        g = gcd(gcd(an, bn), den)
        if g > 1:
            an //= g
            bn //= g
            den //= g
        object.__setattr__(self, "an", an)
        object.__setattr__(self, "bn", bn)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- raw constructors used on hot paths -------------------------------

    @classmethod
    def _raw(cls, an, bn, den):
        """Build from an already-normalized triple (no gcd work)."""
        self = object.__new__(cls)
        object.__setattr__(self, "an", an)
        object.__setattr__(self, "bn", bn)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def from_triple(cls, triple):
        an, bn, den = triple
        if den < 0:
            an, bn, den = -an, -bn, -den
        g = gcd(gcd(an, bn), den)
        if g > 1:
            an //= g
            bn //= g
            den //= g
        return cls._raw(an, bn, den)

    def triple(self):
        """The normalized (an, bn, den) triple; the core-kernel wire format."""
        return (self.an, self.bn, self.den)

    # -- field structure ---------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self.an, self.den)

    @property
    def im(self) -> Fraction:
        return Fraction(self.bn, self.den)

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    def is_zero(self):
        return self.an == 0 and self.bn == 0

    def is_real(self):
        return self.bn == 0

    def is_unit(self):
        """True for 1, -1, i, -i (the Gaussian-integer units)."""
        return self.den == 1 and (
            (abs(self.an) == 1 and self.bn == 0) or (self.an == 0 and abs(self.bn) == 1)
        )

    def __add__(self, other):
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational.from_triple(
            (
                self.an * other.den + other.an * self.den,
                self.bn * other.den + other.bn * self.den,
                self.den * other.den,
            )
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational.from_triple(
            (
                self.an * other.den - other.an * self.den,
                self.bn * other.den - other.bn * self.den,
                self.den * other.den,
            )
        )

    def __rsub__(self, other):
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational._raw(-self.an, -self.bn, self.den)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational.from_triple(
                (
                    self.an * other.an - self.bn * other.bn,
                    self.an * other.bn + self.bn * other.an,
                    self.den * other.den,
                )
            )
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational._raw(self.an, -self.bn, self.den)

    def inverse(self):
        """The exact multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse in Q(i)")
        # 1/((a+bi)/d) = d*(a-bi)/(a^2+b^2)
        nrm = self.an * self.an + self.bn * self.bn
        return GaussianRational.from_triple((self.den * self.an, -self.den * self.bn, nrm))

    def __truediv__(self, other):
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = gq(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.an == other.an and self.bn == other.bn and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.bn == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.an, self.bn, self.den))

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if im == 1:
            imtxt = "i"
        elif im == -1:
            imtxt = "-i"
        else:
            imtxt = f"{im} i"
        if re == 0:
            return imtxt
        sign = "-" if im < 0 else "+"
        mag = -im if im < 0 else im
        imtxt = "i" if mag == 1 else f"{mag} i"
        return f"{re} {sign} {imtxt}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    _PURE_IM = _re.compile(r"^\s*([+-])?\s*(\d+(?:/\d+)?)?\s*i\s*$")
    _PURE_RE = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*$")
    _BOTH = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)?\s*i\s*$")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Round-trip of str(): 'a/b', 'c/d i', 'a/b + c/d i', 'i', '-i'."""
        m = cls._PURE_IM.match(text)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            return cls(0, sign * mag)
        m = cls._PURE_RE.match(text)
        if m:
            return cls(Fraction(m.group(1)))
        m = cls._BOTH.match(text)
        if m:
            re_part = Fraction(m.group(1))
            sign = -1 if m.group(2) == "-" else 1
            mag = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            return cls(re_part, sign * mag)
        raise ValueError(f"cannot parse Gaussian rational: {text!r}")


def gq(value) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational; NotImplemented otherwise."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
UNITS = (ONE, I, -ONE, -I)
