"""Exact extended-real values: rationals plus signed infinities.

All set-function arithmetic in this package is exact.  A value is either a
``fractions.Fraction`` or one of the two infinities.  Adding opposite
infinities is an error, never a silent NaN.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class ValueError_(Exception):
    """Base class for value errors."""


class InfinityConflictError(ValueError_):
    """Raised when arithmetic would combine +inf with -inf."""


class Ext:
    """An exact rational or one of +inf / -inf.

    Instances are immutable.  ``finite`` holds the Fraction when the value
    is finite, otherwise ``sign`` is +1 or -1 and ``finite`` is None.
    """

    __slots__ = ("finite", "sign")

    def __init__(self, finite: Fraction | None, sign: int = 0):
        if finite is None and sign not in (+1, -1):
            raise ValueError_("infinite Ext needs sign +1 or -1")
        if finite is not None and sign != 0:
            raise ValueError_("finite Ext must have sign 0")
        object.__setattr__(self, "finite", finite)
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Ext is immutable")

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    def __add__(self, other: "Ext") -> "Ext":
        if self.is_finite and other.is_finite:
            return Ext(self.finite + other.finite)
        if self.is_finite:
            return other
        if other.is_finite:
            return self
        if self.sign != other.sign:
            raise InfinityConflictError("inf + (-inf)")
        return self

    def __neg__(self) -> "Ext":
        if self.is_finite:
            return Ext(-self.finite)
        return POS_INF if self.sign < 0 else NEG_INF

    def __sub__(self, other: "Ext") -> "Ext":
        return self + (-other)

    def scale(self, c: Fraction) -> "Ext":
        """Multiply by a nonzero-or-zero rational; 0 * inf is 0 by convention
        (linear combinations drop zero-coefficient terms before scaling)."""
        if self.is_finite:
            return Ext(self.finite * c)
        if c == 0:
            return Ext(Fraction(0))
        return self if c > 0 else -self

    def __abs__(self) -> "Ext":
        if self.is_finite:
            return Ext(abs(self.finite))
        return POS_INF

    def _cmp_key(self):
        if self.is_finite:
            return (0, self.finite)
        return (self.sign, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ext):
            return NotImplemented
        return self.finite == other.finite and self.sign == other.sign

    def __hash__(self):
        return hash((self.finite, self.sign))

    def __lt__(self, other: "Ext") -> bool:
        return self._cmp_key() < other._cmp_key()

    def __le__(self, other: "Ext") -> bool:
        return self._cmp_key() <= other._cmp_key()

    def __gt__(self, other: "Ext") -> bool:
        return self._cmp_key() > other._cmp_key()

    def __ge__(self, other: "Ext") -> bool:
        return self._cmp_key() >= other._cmp_key()

    def __repr__(self):
        return f"Ext({format_ext(self)!r})"


POS_INF = Ext(None, +1)
NEG_INF = Ext(None, -1)
ZERO = Ext(Fraction(0))


def ext(x: RationalLike) -> Ext:
    """Wrap a rational-like value as a finite Ext."""
    return Ext(as_fraction(x))


def as_fraction(x: RationalLike) -> Fraction:
    """Parse a rational given as Fraction, int, 'p/q' / 'p' string, or [p, q] pair."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValueError_("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError_(f"bad rational {x!r}: {e}") from None
    if isinstance(x, (list, tuple)) and len(x) == 2:
        num, den = x
        if not isinstance(num, int) or not isinstance(den, int):
            raise ValueError_(f"bad rational pair {x!r}")
        if den == 0:
            raise ValueError_(f"bad rational {x!r}: zero denominator")
        return Fraction(num, den)
    raise ValueError_(f"bad rational {x!r}")


def format_ext(v: Ext) -> str:
    """Serialize as 'p/q', 'inf', or '-inf'.  Finite values always carry
    an explicit denominator so reports stay unambiguous."""
    if not v.is_finite:
        return "inf" if v.sign > 0 else "-inf"
    f = v.finite
    return f"{f.numerator}/{f.denominator}"


def parse_ext(s: str) -> Ext:
    if s == "inf":
        return POS_INF
    if s == "-inf":
        return NEG_INF
    return ext(s)


def ext_sum(values) -> Ext:
    total = ZERO
    for v in values:
        total = total + v
    return total
