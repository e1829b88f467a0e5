"""Terminating hypergeometric series, summation theorems, and the Jacobi /
ultraspherical polynomial constructors built on them.

A terminating pFq is a finite sum

    sum_{i=0}^{N} (a_1)_i ... (a_p)_i / ((b_1)_i ... (b_q)_i (1)_i) * z^i

where some numerator parameter is a nonpositive integer -N.  Everything here
is evaluated exactly over the rationals (or a quadratic extension when z is
one), which is what lets the contiguous relations and summation formulas be
asserted as identities rather than approximations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import InvalidParameterError
from .exactnum import ExactScalar, as_exact, pochhammer
from .polykit import PiecewisePoly, Poly


def _is_nonpos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator <= 0


@dataclass(frozen=True)
class HyperSpec:
    """Parameter list of a terminating pFq.

    At least one upper parameter must be a nonpositive integer; the series
    length is fixed by the smallest such -n.  No lower parameter may be a
    nonpositive integer >= -terminating_index (that would put a zero in a
    denominator inside the finite sum).
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    terminating_index: int = field(init=False)

    def __post_init__(self):
        upper = tuple(Fraction(a) for a in self.upper)
        lower = tuple(Fraction(b) for b in self.lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        terms = [-a.numerator for a in upper if _is_nonpos_int(a)]
        if not terms:
            raise InvalidParameterError(
                "series does not terminate: no nonpositive-integer upper parameter"
            )
        n = min(terms)
        object.__setattr__(self, "terminating_index", n)
        for b in lower:
            if _is_nonpos_int(b) and -b.numerator <= n:
                raise InvalidParameterError(
                    f"lower parameter {b} hits zero inside the finite sum"
                )


def pfq_eval(spec: HyperSpec, z) -> ExactScalar:
    """Exact finite sum of the terminating series at argument z."""
    z = as_exact(z)
    total: ExactScalar = Fraction(1)
    term: ExactScalar = Fraction(1)
    for i in range(spec.terminating_index):
        ratio = Fraction(1, i + 1)
        for a in spec.upper:
            ratio *= a + i
        for b in spec.lower:
            ratio /= b + i
        term = term * ratio * z
        total = total + term
    return total


def pfq(upper, lower, z) -> ExactScalar:
    """Convenience wrapper: validate and evaluate a terminating pFq."""
    return pfq_eval(HyperSpec(tuple(upper), tuple(lower)), z)


def chu_vandermonde(n: int, a, b) -> Fraction:
    """Closed form (b-a)_n / (b)_n of 2F1(-n, a; b; 1)."""
    a, b = Fraction(a), Fraction(b)
    if _is_nonpos_int(b) and -b.numerator < n:
        raise InvalidParameterError(f"b = {b} gives a zero denominator")
    den = pochhammer(b, n)
    if den == 0:
        raise InvalidParameterError(f"(b)_n vanishes for b = {b}, n = {n}")
    return pochhammer(b - a, n) / den


def pfaff_saalschutz(n: int, a, b, c) -> Fraction:
    """Closed form of the balanced 3F2(-n, a, b; c, -n+a+b-c+1; 1)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    for low in (c, -n + a + b - c + 1):
        if _is_nonpos_int(low) and -low.numerator < n:
            raise InvalidParameterError(f"lower parameter {low} gives a zero denominator")
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if den == 0:
        raise InvalidParameterError("closed-form denominator vanishes")
    return pochhammer(c - a, n) * pochhammer(c - b, n) / den


# ---------------------------------------------------------------------------
# Contiguous relations: each returns LHS - RHS, which must vanish exactly.

def contiguous_residual(relation: str, params, z) -> ExactScalar:
    """Exact residual of one of the five contiguous relations (rec1..rec5).

    ``params`` is (a,b,c,d,e,f,g) for the 4F3 relations rec1/rec2/rec4 and
    (a,b,c,d,e) for the 3F2 relations rec3/rec5.  Every series instance in
    the chosen relation must terminate.
    """
    z = Fraction(z)
    p = tuple(Fraction(v) for v in params)
    if relation == "rec1":
        a, b, c, d, e, f, g = p
        lhs = b * pfq((a, b + 1, c, d), (e, f, g), z)
        rhs = c * pfq((a, b, c + 1, d), (e, f, g), z) + (b - c) * pfq(
            (a, b, c, d), (e, f, g), z
        )
    elif relation == "rec2":
        a, b, c, d, e, f, g = p
        lhs = (b - a) * c * d * z * pfq(
            (a + 1, b + 1, c + 1, d + 1), (e + 1, f + 1, g + 1), z
        )
        rhs = e * f * g * (
            pfq((a + 1, b, c, d), (e, f, g), z) - pfq((a, b + 1, c, d), (e, f, g), z)
        )
    elif relation == "rec3":
        a, b, c, d, e = p
        lhs = b * c * z * pfq((a + 1, b + 1, c + 1), (d + 1, e + 1), z)
        rhs = d * e * (pfq((a + 1, b, c), (d, e), z) - pfq((a, b, c), (d, e), z))
    elif relation == "rec4":
        a, b, c, d, e, f, g = p
        lhs = f * pfq((a, b, c, d), (e + 1, f, g), z)
        rhs = e * pfq((a, b, c, d), (e, f + 1, g), z) - (e - f) * pfq(
            (a, b, c, d), (e + 1, f + 1, g), z
        )
    elif relation == "rec5":
        a, b, c, d, e = p
        lhs = d * pfq((a, b, c), (d, e), z)
        rhs = a * pfq((a + 1, b, c), (d + 1, e), z) - (a - d) * pfq(
            (a, b, c), (d + 1, e), z
        )
    else:
        raise InvalidParameterError(f"unknown relation {relation!r}")
    return lhs - rhs


def hyp1_closed(variant: str, n: int, a, b) -> Fraction:
    """Closed forms for 3F2(-n+1, a+1, b+1; d+1, b+2 or b+3; 1).

    variant 'hyp2' takes d = -n+a, variant 'hyp3' takes d = -n+a-1.  Raises
    when a Pochhammer denominator of the closed form vanishes.
    """
    if n < 1:
        raise InvalidParameterError("hyp1 closed forms need n >= 1")
    a, b = Fraction(a), Fraction(b)
    if variant == "hyp2":
        d = -n + a
        den = pochhammer(d + 1, n)
        den2 = pochhammer(b + 1, n)
        if den == 0 or den2 == 0:
            raise InvalidParameterError("degenerate hyp2 parameters")
        sign = Fraction((-1) ** (n + 1))
        return sign * factorial(n - 1) * (b + 1) / den * (
            1 + sign * pochhammer(d - b, n) / den2
        )
    if variant == "hyp3":
        d = -n + a - 1
        for bad in (a, a - 1):
            if bad == 0:
                raise InvalidParameterError("degenerate hyp3 parameters (a in {0,1})")
        dens = (
            pochhammer(d - 1, n + 1),
            pochhammer(d - a - b, n + 1),
            pochhammer(d, n),
            pochhammer(d - a - b, n),
        )
        if any(x == 0 for x in dens):
            raise InvalidParameterError("degenerate hyp3 parameters")
        lead = d * (b + 2) / (a * n)
        part1 = lead * (d - 1) * (b + 1) / ((n + 1) * (a - 1)) * (
            pochhammer(d - a, n + 1) / dens[0]
            - pochhammer(d - a, n + 1) * pochhammer(d - b - 1, n + 1) / (dens[0] * dens[1])
        )
        part2 = lead * pochhammer(d - a, n) * pochhammer(d - b, n) / (dens[2] * dens[3])
        return part1 + part2
    raise InvalidParameterError(f"unknown hyp1 variant {variant!r}")


# ---------------------------------------------------------------------------
# Orthogonal polynomials (monic normalization throughout).

@lru_cache(maxsize=None)
def jacobi_monic(n: int, alpha, beta) -> Poly:
    """Monic Jacobi polynomial for the weight (1-t)**alpha (1+t)**beta.

    p_n(t) = 2**n (alpha+1)_n / (n+alpha+beta+1)_n
             * 2F1(-n, n+alpha+beta+1; alpha+1; (1-t)/2).
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise InvalidParameterError("jacobi_monic needs alpha, beta > -1")
    pre = Fraction(2) ** n * pochhammer(alpha + 1, n) / pochhammer(n + alpha + beta + 1, n)
    # series coefficients in u = (1-t)/2, then expand u^i binomially
    coeffs = [Fraction(0)] * (n + 1)
    term = Fraction(1)
    for i in range(n + 1):
        if i > 0:
            term *= Fraction((-n + i - 1)) * (n + alpha + beta + i)
            term /= (alpha + i) * i
        half = term / Fraction(2) ** i
        for j in range(i + 1):
            coeffs[j] += half * comb(i, j) * (-1) ** j
    p = Poly([pre * c for c in coeffs])
    assert p.degree == n and p.coeffs[-1] == 1, "monic normalization failed"
    return p


@lru_cache(maxsize=None)
def ultraspherical_monic(n: int, lam, route: str = "jacobi") -> Poly:
    """Monic ultraspherical p_n for weight (1-t**2)**(lambda-1/2).

    route='jacobi' goes through the Jacobi representation with
    alpha = beta = lambda - 1/2; route='parity' uses the even/odd form

        p_{2k+eps}(t) = (-1)^k (1/2+eps)_k / (k+lambda+eps)_k
                        * t^eps 2F1(-k, k+lambda+eps; 1/2+eps; t**2).

    Both routes produce the identical polynomial.
    """
    lam = Fraction(lam)
    if lam <= Fraction(-1, 2):
        raise InvalidParameterError("ultraspherical_monic needs lambda > -1/2")
    if route == "jacobi":
        return jacobi_monic(n, lam - Fraction(1, 2), lam - Fraction(1, 2))
    if route != "parity":
        raise InvalidParameterError(f"unknown route {route!r}")
    k, eps = divmod(n, 2)
    pre = Fraction((-1) ** k) * pochhammer(Fraction(1, 2) + eps, k) / pochhammer(
        k + lam + eps, k
    )
    coeffs = [Fraction(0)] * (n + 1)
    term = Fraction(1)
    for i in range(k + 1):
        if i > 0:
            term *= Fraction(-k + i - 1) * (k + lam + eps + i - 1)
            term /= (Fraction(1, 2) + eps + i - 1) * i
        coeffs[2 * i + eps] = pre * term
    return Poly(coeffs)


def phi_basis(n: int, k: int, i: int) -> PiecewisePoly:
    """Interior basis function (1-t**2)**(k+1) * p_{i-2k-2}^{(2k+5/2)}(t) on [-1,1].

    Zero for i < 2k+2 by convention; for i = 2k+2..n these are pairwise
    orthogonal and span the degree-n splines supported in [-1,1] that vanish
    to order k+1 at both endpoints.
    """
    if i > n:
        raise InvalidParameterError(f"index i = {i} exceeds n = {n}")
    if i < 2 * k + 2:
        return PiecewisePoly.zero()
    bracket = Poly((1, 0, -1)) ** (k + 1)
    p = ultraspherical_monic(i - 2 * k - 2, Fraction(4 * k + 5, 2))
    return PiecewisePoly.from_poly(bracket * p, -1, 1)


@dataclass(frozen=True)
class RampPair:
    """Boundary 'ramp' pair: l(t) = r(-t) exactly, biorthogonal across i."""

    r: PiecewisePoly
    l: PiecewisePoly
    n: int
    k: int
    i: int


def ramp_pair(n: int, k: int, i: int) -> RampPair:
    """Right/left ramp pair r, l with r = (1-t)^i (1+t)^(k+1) p_{n-k-i-1}^{(i+k+1, i+k+2)}."""
    if not (0 <= i <= k and n >= 2 * k + 2):
        raise InvalidParameterError(f"need 0 <= i <= k and n >= 2k+2; got n={n}, k={k}, i={i}")
    factor = Poly((1, -1)) ** i * Poly((1, 1)) ** (k + 1)
    p = jacobi_monic(n - k - i - 1, i + k + 1, i + k + 2)
    r = PiecewisePoly.from_poly(factor * p, -1, 1)
    return RampPair(r=r, l=r.reflect(), n=n, k=k, i=i)


def ramp_diag_product(n: int, k: int, i: int) -> Fraction:
    """Closed form of <r_i, l_i>: 2^(2n+1) (n!)^2 (-n+k+i+1)_(n-k-i-1)
    / ((n+k+i+3)_(n-k-i-1) (2n+1)!)."""
    q = n - k - i - 1
    return (
        Fraction(2) ** (2 * n + 1)
        * Fraction(factorial(n)) ** 2
        * pochhammer(-n + k + i + 1, q)
        / (pochhammer(n + k + i + 3, q) * factorial(2 * n + 1))
    )


def reflected_pair_integral(n: int, alpha: int, beta: int) -> Fraction:
    """Closed form of the reflected-pair integral

        int_{-1}^{1} (1-t)^alpha (1+t)^beta p(t) p(-t) dt,
        p = p_{n-alpha}^{(alpha, beta+1)},

    valid for integer 0 <= alpha <= n and integer beta >= 0 (the range on
    which the exact-integration oracle applies).
    """
    if not (0 <= alpha <= n) or beta < 0:
        raise InvalidParameterError("need integer 0 <= alpha <= n and beta >= 0")
    q = n - alpha
    return (
        Fraction(2) ** (2 * n + beta - alpha + 1)
        * pochhammer(alpha + 1, q)
        * factorial(beta)
        * factorial(n)
        * pochhammer(-n + alpha, q)
        / (pochhammer(n + beta + 2, q) * factorial(2 * n - alpha + beta + 1))
    )
