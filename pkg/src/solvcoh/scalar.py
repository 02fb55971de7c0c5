"""Exact Gaussian rationals, the coefficient field of every complex."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

ScalarLike = Union["Scalar", int, Fraction]

_LITERAL = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?"
    r"\s*(?:(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*(?P<i>[iI]))?\s*$"
)


class Scalar:
    """An element ``re + im*i`` of Q(i), stored as two reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse literals such as ``3``, ``-1/2``, ``i``, ``1/2-3i``."""
        m = _LITERAL.match(text)
        if not m or (m.group("re") is None and m.group("i") is None):
            raise ValueError(f"bad scalar literal {text!r}")
        re_part = Fraction(m.group("re") or 0)
        im_part = Fraction(0)
        if m.group("i"):
            im_part = Fraction(m.group("im") or 1)
            if m.group("sign") == "-":
                im_part = -im_part
            elif m.group("sign") is None and m.group("re") is not None:
                # "3i" parses as re=3 with a bare i suffix
                im_part, re_part = re_part, Fraction(0)
        return cls(re_part, im_part)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __pos__(self) -> Scalar:
        return self

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        o = _try(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    # comparison/hash ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = _try(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.im:
            return _frac(self.re)
        if not self.re:
            return _imag(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{_frac(self.re)}{sign}{_imag(abs(self.im))}"


def _frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _imag(f: Fraction) -> str:
    if f == 1:
        return "i"
    if f == -1:
        return "-i"
    return f"{_frac(f)}i"


def _try(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Rational)):
        return Scalar(Fraction(value))
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
