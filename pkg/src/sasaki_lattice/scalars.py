"""Exact scalars: ``Fraction`` for Q and a small Gaussian-rational type for Q(i)."""
from __future__ import annotations

from fractions import Fraction

__all__ = ["GaussianRational", "normalize", "parse_scalar", "conj", "format_scalar"]


class GaussianRational:
    """``re + im*i`` with Fraction parts.  Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re_, im=0):
        object.__setattr__(self, "re", Fraction(re_))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def normalize(x):
    """Canonical representative: real values become ``Fraction``."""
    if isinstance(x, GaussianRational):
        return x.re if x.im == 0 else x
    return Fraction(x)


def conj(x):
    return x.conjugate()


def parse_scalar(tok):
    """Parse ``p``, ``p/q`` or ``a+bi`` (with rational ``a``, ``b``)."""
    tok = tok.strip()
    if not tok:
        raise ValueError("empty scalar")
    if not tok.endswith("i"):
        try:
            return Fraction(tok)
        except ValueError as exc:
            raise ValueError(f"bad scalar {tok!r}") from exc
    body = tok[:-1]
    # split at the last sign that is not the leading one
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut > 0:
        re_part, im_part = body[:cut], body[cut:]
    else:
        re_part, im_part = "0", body
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    try:
        return normalize(GaussianRational(Fraction(re_part), Fraction(im_part)))
    except ValueError as exc:
        raise ValueError(f"bad scalar {tok!r}") from exc


def format_scalar(x):
    if isinstance(x, GaussianRational) and x.im != 0:
        sign = "+" if x.im > 0 else "-"
        im = abs(x.im)
        im_s = "" if im == 1 else str(im)
        if x.re == 0:
            return f"{'-' if x.im < 0 else ''}{im_s}i"
        return f"{x.re}{sign}{im_s}i"
    return str(normalize(x))
