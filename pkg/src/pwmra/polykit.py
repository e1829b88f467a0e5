"""Exact univariate and piecewise polynomials.

``Poly`` is a dense coefficient vector over ExactScalar (index = degree).
``PiecewisePoly`` is a compactly supported piecewise polynomial with rational
breakpoints, identically zero outside its support.  Everything is immutable
and every operation is exact, so piecewise identities can be asserted with
plain ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactScalar, as_exact, parse_scalar, scalar_str


class SupportError(ValueError):
    """Operand support violates an operation's precondition."""


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial with exact coefficients, ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([as_exact(c) for c in coeffs])

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = as_exact(c)
        return Poly([c * a for a in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        out = Poly.one()
        for _ in range(k):
            out = out * self
        return out

    def compose_affine(self, u, v) -> "Poly":
        """Substitute t <- u*t + v (u != 0) by Horner over Poly."""
        u, v = as_exact(u), as_exact(v)
        if u == 0:
            raise ValueError("affine substitution requires u != 0")
        arg = Poly((v, u))
        out = Poly.zero()
        for c in reversed(self.coeffs):
            out = out * arg + Poly((c,))
        return out

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        return Poly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        out: ExactScalar = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_float(self, x: float) -> float:
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * x + float(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class SymmetryType:
    """Reflection symmetry about a rational axis: f(2*axis - t) = +/- f(t)."""

    axis: Fraction
    parity: str  # 'even' | 'odd' | 'none'


class PiecewisePoly:
    """Compactly supported piecewise polynomial with rational breakpoints.

    ``pieces[i]`` is the polynomial (in the global variable t) valid on
    ``[breakpoints[i], breakpoints[i+1]]``; the value is 0 outside the
    support.  Instances are canonicalized on construction: zero-width
    intervals dropped, equal neighbours merged, zero tails stripped.
    """

    __slots__ = ("breakpoints", "pieces")

    def __init__(self, breakpoints, pieces):
        bps = [Fraction(b) for b in breakpoints]
        ps = [p if isinstance(p, Poly) else Poly(p) for p in pieces]
        if len(bps) != len(ps) + 1 and not (len(bps) == 0 and len(ps) == 0):
            raise ValueError("need exactly one piece per breakpoint interval")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        # canonicalize: merge equal neighbours, strip zero tails
        merged_b: list[Fraction] = []
        merged_p: list[Poly] = []
        for i, p in enumerate(ps):
            if merged_p and merged_p[-1] == p:
                continue
            merged_b.append(bps[i])
            merged_p.append(p)
        if ps:
            merged_b.append(bps[-1])
        while merged_p and merged_p[0].is_zero():
            merged_p.pop(0)
            merged_b.pop(0)
        while merged_p and merged_p[-1].is_zero():
            merged_p.pop()
            merged_b.pop()
        if not merged_p:
            merged_b = []
        object.__setattr__(self, "breakpoints", tuple(merged_b))
        object.__setattr__(self, "pieces", tuple(merged_p))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("PiecewisePoly is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "PiecewisePoly":
        return PiecewisePoly((), ())

    @staticmethod
    def from_poly(p: Poly, a, b) -> "PiecewisePoly":
        return PiecewisePoly((Fraction(a), Fraction(b)), (p,))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.pieces

    @property
    def support(self) -> tuple[Fraction, Fraction] | None:
        if self.is_zero():
            return None
        return self.breakpoints[0], self.breakpoints[-1]

    def degree(self) -> int:
        return max((p.degree for p in self.pieces), default=-1)

    def piece_at(self, x: Fraction) -> Poly:
        """Piece polynomial on the interval containing x (0 outside)."""
        if self.is_zero() or x < self.breakpoints[0] or x >= self.breakpoints[-1]:
            if not self.is_zero() and x == self.breakpoints[-1]:
                return self.pieces[-1]
            return Poly.zero()
        lo, hi = 0, len(self.pieces) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.breakpoints[mid] <= x:
                lo = mid
            else:
                hi = mid - 1
        return self.pieces[lo]

    def __call__(self, x) -> ExactScalar:
        return self.piece_at(Fraction(x))(Fraction(x))

    def eval_float(self, x: float) -> float:
        if self.is_zero():
            return 0.0
        bps = self.breakpoints
        if x < bps[0] or x > bps[-1]:
            return 0.0
        for i in range(len(self.pieces)):
            if x <= bps[i + 1]:
                return self.pieces[i].eval_float(x)
        return 0.0

    # -- pointwise algebra -------------------------------------------------

    def _merged_grid(self, other: "PiecewisePoly") -> list[Fraction]:
        pts = sorted(set(self.breakpoints) | set(other.breakpoints))
        return pts

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        grid = self._merged_grid(other)
        pieces = []
        for i in range(len(grid) - 1):
            mid = (grid[i] + grid[i + 1]) / 2
            pieces.append(self.piece_at(mid) + other.piece_at(mid))
        return PiecewisePoly(grid, pieces)

    def __sub__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return self + other.scale(-1)

    def __neg__(self) -> "PiecewisePoly":
        return self.scale(-1)

    def scale(self, c) -> "PiecewisePoly":
        if self.is_zero():
            return self
        return PiecewisePoly(self.breakpoints, [p.scale(c) for p in self.pieces])

    def __mul__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if self.is_zero() or other.is_zero():
            return PiecewisePoly.zero()
        a0, a1 = self.support
        b0, b1 = other.support
        lo, hi = max(a0, b0), min(a1, b1)
        if lo >= hi:
            return PiecewisePoly.zero()
        grid = [p for p in self._merged_grid(other) if lo <= p <= hi]
        pieces = []
        for i in range(len(grid) - 1):
            mid = (grid[i] + grid[i + 1]) / 2
            pieces.append(self.piece_at(mid) * other.piece_at(mid))
        return PiecewisePoly(grid, pieces)

    def mul_poly(self, q: Poly) -> "PiecewisePoly":
        if self.is_zero():
            return self
        return PiecewisePoly(self.breakpoints, [p * q for p in self.pieces])

    # -- affine substitution ----------------------------------------------

    def compose_arg(self, u, v) -> "PiecewisePoly":
        """Return g(t) = f(u*t + v) for exact u != 0."""
        if self.is_zero():
            return self
        u, v = Fraction(u), Fraction(v)
        bps = [(b - v) / u for b in self.breakpoints]
        pieces = [p.compose_affine(u, v) for p in self.pieces]
        if u < 0:
            bps.reverse()
            pieces.reverse()
        return PiecewisePoly(bps, pieces)

    def dilate_translate(self, j: int, i: int) -> "PiecewisePoly":
        """Return f(2**j * t - i) with exactly transformed breakpoints."""
        u = Fraction(2) ** j
        return self.compose_arg(u, -i)

    def shift(self, k) -> "PiecewisePoly":
        """Return f(t - k)."""
        return self.compose_arg(1, -k)

    def reflect(self) -> "PiecewisePoly":
        """Return f(-t)."""
        return self.compose_arg(-1, 0)

    def restrict(self, a, b) -> "PiecewisePoly":
        """Truncate to [a, b] (zero outside)."""
        a, b = Fraction(a), Fraction(b)
        if self.is_zero() or a >= b:
            return PiecewisePoly.zero()
        s0, s1 = self.support
        lo, hi = max(a, s0), min(b, s1)
        if lo >= hi:
            return PiecewisePoly.zero()
        grid = sorted({lo, hi} | {p for p in self.breakpoints if lo < p < hi})
        pieces = [self.piece_at((grid[i] + grid[i + 1]) / 2) for i in range(len(grid) - 1)]
        return PiecewisePoly(grid, pieces)

    # -- integration -------------------------------------------------------

    def integrate(self, a, b) -> ExactScalar:
        """Exact integral over [a, b] via per-piece antiderivatives."""
        a, b = Fraction(a), Fraction(b)
        if a > b:
            raise ValueError("integrate requires a <= b")
        if self.is_zero():
            return Fraction(0)
        s0, s1 = self.support
        lo, hi = max(a, s0), min(b, s1)
        total: ExactScalar = Fraction(0)
        if lo >= hi:
            return total
        for i, p in enumerate(self.pieces):
            x0, x1 = self.breakpoints[i], self.breakpoints[i + 1]
            c0, c1 = max(x0, lo), min(x1, hi)
            if c0 >= c1:
                continue
            anti = p.antiderivative()
            total = total + anti(c1) - anti(c0)
        return total

    def integral(self) -> ExactScalar:
        """Exact integral over the whole line."""
        if self.is_zero():
            return Fraction(0)
        return self.integrate(*self.support)

    def inner(self, other: "PiecewisePoly") -> ExactScalar:
        """Exact L2 inner product <f, g> over the support intersection."""
        return (self * other).integral()

    def norm_sq(self) -> ExactScalar:
        return self.inner(self)

    def moment(self, k: int) -> ExactScalar:
        """Exact integral of t**k * f(t) over the support."""
        return self.mul_poly(Poly([0] * k + [1]) if k else Poly.one()).integral()

    def mellin_integer_moment(self, z: int) -> ExactScalar:
        """Exact Mellin moment: integral of t**(z-1) f(t) over [0, 1].

        Requires z >= 1 and support inside [0, 1].
        """
        if z < 1:
            raise ValueError("mellin moment needs an integer z >= 1")
        if not self.is_zero():
            s0, s1 = self.support
            if s0 < 0 or s1 > 1:
                raise SupportError("mellin moment requires support inside [0, 1]")
        return self.moment(z - 1)

    # -- symmetry ----------------------------------------------------------

    def reflect_about(self, axis) -> "PiecewisePoly":
        """Return f(2*axis - t)."""
        return self.compose_arg(-1, 2 * Fraction(axis))

    def check_symmetry(self, sym: SymmetryType) -> bool:
        if sym.parity == "none":
            return True
        reflected = self.reflect_about(sym.axis)
        return reflected == (self if sym.parity == "even" else -self)

    # -- misc ---------------------------------------------------------------

    def l1_bound(self) -> float:
        """Cheap upper bound on the integral of |f| (float)."""
        total = 0.0
        for i, p in enumerate(self.pieces):
            x0, x1 = self.breakpoints[i], self.breakpoints[i + 1]
            m = max(abs(float(x0)), abs(float(x1)))
            bound = sum(abs(float(c)) * m**k for k, c in enumerate(p.coeffs))
            total += float(x1 - x0) * bound
        return total

    def __eq__(self, other):
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.breakpoints, self.pieces))

    def __repr__(self):
        return f"PiecewisePoly({list(self.breakpoints)!r}, {list(self.pieces)!r})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "breakpoints": [scalar_str(b) for b in self.breakpoints],
            "pieces": [[scalar_str(c) for c in p.coeffs] for p in self.pieces],
        }

    @staticmethod
    def from_json(obj: dict) -> "PiecewisePoly":
        bps = [Fraction(parse_scalar(s)) for s in obj["breakpoints"]]
        pieces = [Poly([parse_scalar(c) for c in cs]) for cs in obj["pieces"]]
        return PiecewisePoly(bps, pieces)
