"""Exact arithmetic in Q(i), the Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "as_gaussian",
    "classify_scalar",
    "conj",
    "is_power_of_two",
    "parse_gaussian",
]


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


class GaussianRational:
    """An element ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # Arithmetic.  Plain ints and Fractions are accepted on either side; any
    # other operand returns NotImplemented so richer rings can take over.

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return to_text(self)

    def conj(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """z * conj(z), returned as a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def is_real(self) -> bool:
        return self.im == 0

    def to_json(self) -> dict:
        return {"re": [self.re.numerator, self.re.denominator],
                "im": [self.im.numerator, self.im.denominator]}

    @classmethod
    def from_json(cls, data) -> GaussianRational:
        try:
            re_n, re_d = data["re"]
            im_n, im_d = data["im"]
            return cls(Fraction(int(re_n), int(re_d)), Fraction(int(im_n), int(im_d)))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad Gaussian rational JSON: {data!r}") from exc


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational(x)
    return None


def as_gaussian(x) -> GaussianRational:
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")
    return o


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def conj(z) -> GaussianRational:
    return as_gaussian(z).conj()


def classify_scalar(z) -> dict:
    """Report membership of ``z`` in Z[1/2,i], its unit group, and Z[1/2]."""
    z = as_gaussian(z)
    dyadic = is_power_of_two(z.re.denominator) and is_power_of_two(z.im.denominator)
    # Units of Z[1/2,i] are i^k (1+i)^m.  Since (1+i)^2 = 2i, this is
    # i^k 2^j or i^k 2^j (1+i), i.e. the norm is a power of two.
    n = z.norm()
    unit = dyadic and n != 0 and is_power_of_two(n.numerator) and is_power_of_two(n.denominator)
    return {
        "in_dyadic_gaussian": dyadic,
        "is_unit_of_dyadic_gaussian": unit,
        "in_dyadic_rational": dyadic and z.im == 0,
    }


def _frac_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_text(z: GaussianRational) -> str:
    if z.im == 0:
        return _frac_text(z.re)
    imag = "i" if abs(z.im) == 1 else _frac_text(abs(z.im)) + "*i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + imag
    return _frac_text(z.re) + ("-" if z.im < 0 else "+") + imag


_NUM = r"\d+(?:/\d+)?"
_TEXT_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM}(?![\d/]|\s*\*?\s*i))?"
    rf"(?:\s*(?P<isign>[+-])?\s*(?P<imag>{_NUM})?\s*\*?\s*i)?$"
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the textual form, e.g. ``"1/2-3/4*i"``, ``"-i"``, ``"7"``."""
    s = text.strip()
    m = _TEXT_RE.match(s)
    if not s or m is None or (m.group("re") is None and "i" not in s):
        raise ParseError(f"cannot parse Gaussian rational {text!r}")
    try:
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_part = Fraction(0)
        if s.endswith("i"):
            if m.group("re") is not None and m.group("isign") is None:
                raise ParseError(f"missing sign before imaginary part in {text!r}")
            im_part = Fraction(m.group("imag")) if m.group("imag") else Fraction(1)
            if m.group("isign") == "-":
                im_part = -im_part
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {text!r}") from exc
    return GaussianRational(re_part, im_part)
