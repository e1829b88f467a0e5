"""Exact scalars: rationals and real quadratic extensions Q(sqrt(d)).

Rationals are plain ``fractions.Fraction``.  Irrational values arising from
square roots of positive rationals are held as :class:`QuadExt` instances
``a + b*sqrt(d)`` with a fixed square-free radicand ``d > 1``.  All arithmetic
is exact; a computation whose result happens to be rational collapses back to
``Fraction`` automatically, so ``ExactScalar`` values can be compared with
``==`` without worrying about representation.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

ExactScalar = Union[Fraction, "QuadExt"]


class RadicandMismatchError(ValueError):
    """Arithmetic attempted between extensions with different radicands."""


def squarefree_reduce(m: int) -> tuple[int, int]:
    """Write ``m = s**2 * f`` with ``f`` square-free; return ``(s, f)``.

    Trial division; the radicands in this library stay tiny.
    """
    if m < 1:
        raise ValueError(f"squarefree_reduce requires m >= 1, got {m}")
    s, f = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    f *= m
    return s, f


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial (a)_k = a*(a+1)*...*(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def odd_double_factorial(n: int) -> int:
    """(2n+1)!! = 1*3*5*...*(2n+1)."""
    out = 1
    for k in range(1, 2 * n + 2, 2):
        out *= k
    return out


def quadext(a, b, d: int) -> ExactScalar:
    """Canonical ``a + b*sqrt(d)``: reduces d square-free, collapses rationals."""
    a, b = Fraction(a), Fraction(b)
    if b == 0 or d == 0:
        return a
    if d < 0:
        raise ValueError("radicand must be positive (real extensions only)")
    s, f = squarefree_reduce(d)
    b *= s
    if f == 1:
        return a + b
    return QuadExt(a, b, f)


def sqrt_exact(q) -> ExactScalar:
    """Exact square root of a nonnegative rational, as an ExactScalar."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt_exact requires a nonnegative rational")
    if q == 0:
        return Fraction(0)
    # sqrt(p/r) = sqrt(p*r)/r
    s, f = squarefree_reduce(q.numerator * q.denominator)
    return quadext(0, Fraction(s, q.denominator), f)


class QuadExt:
    """Element ``a + b*sqrt(d)`` of Q(sqrt(d)), d square-free, d > 1, b != 0.

    Construct through :func:`quadext`; the raw constructor does not
    canonicalize.  Arithmetic mixes freely with int/Fraction and raises
    :class:`RadicandMismatchError` for a different radicand.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Fraction, b: Fraction, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    # -- helpers -------------------------------------------------------

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise RadicandMismatchError(
                    f"cannot mix sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return None

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quadext(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quadext(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quadext(o.a - self.a, o.b - self.b, self.d)

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quadext(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "QuadExt":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self._inverse() ** (-k)
        out: ExactScalar = Fraction(1)
        base: ExactScalar = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons ---------------------------------------------------

    def _sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        big_is_a = lhs > rhs
        return (1 if a > 0 else -1) if big_is_a else (1 if b > 0 else -1)

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return -1 if diff < 0 else (0 if diff == 0 else 1)
        return diff._sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __abs__(self):
        return -self if self._sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return scalar_str(self)


def as_exact(x) -> ExactScalar:
    """Coerce an int/Fraction/QuadExt into an ExactScalar."""
    if isinstance(x, QuadExt):
        return x
    return Fraction(x)


def is_rational(x) -> bool:
    """True when x lies in Q (extension degree 1)."""
    return isinstance(x, (int, Fraction)) or (isinstance(x, QuadExt) and x.b == 0)


def to_float(x) -> float:
    return float(x)


def scalar_str(x) -> str:
    """Canonical rendering: "p/q" (or "p"), QuadExt as "p/q + r/s*sqrt(d)"."""
    if isinstance(x, QuadExt):
        return f"{scalar_str(x.a)} + {scalar_str(x.b)}*sqrt({x.d})"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s: str) -> ExactScalar:
    """Inverse of :func:`scalar_str`."""
    s = s.strip()
    if "sqrt" in s:
        rat, _, rad = s.partition(" + ")
        coeff, _, root = rad.partition("*sqrt(")
        d = int(root.rstrip(")"))
        return quadext(Fraction(rat), Fraction(coeff), d)
    return Fraction(s)


def isqrt_exact(n: int) -> int | None:
    """Integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
