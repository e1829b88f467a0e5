"""Construction of the C0 orthogonal scaling vectors.

The pipeline, all in exact arithmetic:

  1. interior basis: phi_i(t) = (1-t^2) p_{i-2}^{(5/2)}(t), i = 2..n, an
     orthogonal basis of the polynomials on [-1,1] vanishing at +-1 up to
     degree n;
  2. boundary ramp r = (I-P)(1+t) and its mirror l(t) = r(-t), where P is
     the orthogonal projection onto the interior basis;
  3. u functions: (I-P) applied to the kink functions ubar_m, with closed
     hypergeometric forms cross-checked against the projection route;
  4. w = alpha*u + u' chosen so that the projected ramps become orthogonal
     (alpha solves an exact quadratic; for two index families the root is
     rational, making every generator coefficient rational);
  5. q = (I-P_w) r and the scaling vector (phi_0, ..., phi_n) assembled from
     half-scale copies of q, w and the interior basis.

Every constructor verifies its exact identities and raises
:class:`ConstructionError` on any miss, so objects that exist are certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConstructionError, InvalidParameterError
from .exactnum import (
    ExactScalar,
    is_rational,
    odd_double_factorial,
    pochhammer,
    sqrt_exact,
)
from .hyperjacobi import phi_basis, ramp_pair, ultraspherical_monic
from .polykit import PiecewisePoly, Poly, SymmetryType

FAMILIES = ("generic", "rational-4n", "rational-4n1")

HALF = Fraction(1, 2)


class NoRealRootError(ValueError):
    """The orthogonality quadratic has no real root."""


class DegenerateQuadraticError(ValueError):
    """The orthogonality quadratic has a vanishing leading coefficient."""


def _require(cond: bool, identity: str, detail: str = ""):
    if not cond:
        raise ConstructionError(identity, detail)


# ---------------------------------------------------------------------------
# Interior space and projections

@lru_cache(maxsize=None)
def interior_basis(n: int) -> tuple[PiecewisePoly, ...]:
    """Orthogonal interior basis (phi_2, ..., phi_n) on [-1, 1]."""
    if n < 2:
        return ()
    return tuple(phi_basis(n, 0, i) for i in range(2, n + 1))


@lru_cache(maxsize=None)
def _interior_norms(n: int) -> tuple[Fraction, ...]:
    return tuple(b.norm_sq() for b in interior_basis(n))


def project_off_interior(f: PiecewisePoly, n: int) -> PiecewisePoly:
    """Orthogonal complement projection: f minus its interior-basis component."""
    out = f
    for b, nb in zip(interior_basis(n), _interior_norms(n)):
        c = f.inner(b) / nb
        if c != 0:
            out = out - b.scale(c)
    return out


def ubar(m: int) -> PiecewisePoly:
    """Kink function: 1 - |t| t^(m-1) for odd m, t - |t| t^(m-1) for even m,
    supported on [-1, 1] with the single break at 0."""
    if m < 1:
        raise InvalidParameterError("ubar needs m >= 1")
    mono = Poly([0] * m + [1])
    base = Poly.one() if m % 2 else Poly.x()
    return PiecewisePoly((-1, 0, 1), (base + mono, base - mono))


@lru_cache(maxsize=None)
def r0(n: int) -> PiecewisePoly:
    """Right boundary ramp r = (I-P)(1+t) on [-1, 1].

    Certified against the scaled Jacobi form
    2 (2n+1)!! / (n+2)! * (1+t) p_{n-1}^{(1,2)}(t) and against the
    ultraspherical two-term form before being returned.
    """
    if n < 2:
        raise InvalidParameterError("r0 needs n >= 2")
    r = project_off_interior(PiecewisePoly.from_poly(Poly((1, 1)), -1, 1), n)
    k = Fraction(2 * odd_double_factorial(n), factorial(n + 2))
    _require(r == ramp_pair(n, 0, 0).r.scale(k), "rhr", f"n={n}")
    pn = ultraspherical_monic(n, Fraction(3, 2))
    pn1 = ultraspherical_monic(n - 1, Fraction(3, 2))
    det_form = PiecewisePoly.from_poly(
        (pn.scale(Fraction(1) / pn(-1)) - pn1.scale(Fraction(1) / pn1(-1))).scale(
            (-1) ** n
        ),
        -1,
        1,
    )
    _require(r == det_form, "rhatr", f"n={n}")
    return r


def l0(n: int) -> PiecewisePoly:
    """Left boundary ramp l(t) = r(-t)."""
    return r0(n).reflect()


# ---------------------------------------------------------------------------
# The u functions and their closed forms

def _f_series_poly(eps: int, m: int, n: int, upper, lower, pre: Fraction) -> Poly:
    """t^eps * pre * (terminating series in t^2) as a Poly."""
    coeffs = [Fraction(0)] * (2 * n + 1 + eps)
    term = Fraction(1)
    for i in range(n + 1):
        if i > 0:
            for a in upper:
                term *= a + i - 1
            for b in lower:
                term /= b + i - 1
            term /= i
        coeffs[2 * i + eps] = pre * term
    return Poly(coeffs)


def f_closed_poly(eps: int, m: int, n: int) -> Poly:
    """Degree-(2n+eps) polynomial part of the u-function closed form:

        t^eps (1/2+eps)_n (n^2+(3/2+eps)n+m+1+eps) (-m+1/2)_n
        / ((m+1+eps)_{n+1} (n+1)!)
        * 4F3(-n, -n^2-(3/2+eps)n-m-eps, -m-1/2, n+3/2+eps;
              1/2+eps, -n^2-(3/2+eps)n-m-1-eps, -m+1/2; t^2).
    """
    if eps not in (0, 1) or n < 1 or m < 0:
        raise InvalidParameterError("f_closed needs eps in {0,1}, n >= 1, m >= 0")
    big = Fraction(n * n) + (Fraction(3, 2) + eps) * n + m + eps
    pre = (
        pochhammer(HALF + eps, n)
        * (big + 1)
        * pochhammer(-m + HALF, n)
        / (pochhammer(m + 1 + eps, n + 1) * factorial(n + 1))
    )
    upper = (Fraction(-n), -big, -m - HALF, n + Fraction(3, 2) + eps)
    lower = (HALF + eps, -big - 1, -m + HALF)
    return _f_series_poly(eps, m, n, upper, lower, pre)


def f_split(eps: int, m: int, n: int) -> tuple[Poly, Poly]:
    """Two-term split of the closed-form polynomial.

    The second part is proportional to the degree-(2n+eps) monic
    ultraspherical polynomial for weight (1-t^2); that identity is asserted.
    """
    pre1 = (
        pochhammer(HALF + eps, n + 1)
        * pochhammer(-m + HALF, n)
        / (pochhammer(m + 1 + eps, n + 1) * factorial(n))
    )
    f1 = _f_series_poly(
        eps, m, n,
        (Fraction(-n), -m - HALF, n + Fraction(3, 2) + eps),
        (HALF + eps, -m + HALF),
        pre1,
    )
    pre2 = -(
        pochhammer(HALF + eps, n)
        * pochhammer(-m - HALF, n + 1)
        / (pochhammer(m + 1 + eps, n + 1) * factorial(n + 1))
    )
    f2 = _f_series_poly(
        eps, m, n,
        (Fraction(-n), n + Fraction(3, 2) + eps),
        (HALF + eps,),
        pre2,
    )
    p = ultraspherical_monic(2 * n + eps, Fraction(3, 2))
    ultra_form = p.scale(
        Fraction((-1) ** (n + 1))
        * pochhammer(-m - HALF, n + 1)
        / (pochhammer(m + 1 + eps, n + 1) * p(1))
    )
    _require(f2 == ultra_form, "fefo", f"eps={eps}, m={m}, n={n}")
    return f1, f2


def f_closed(eps: int, m: int, n: int) -> PiecewisePoly:
    """Closed-form polynomial on [-1, 1], certified against its split."""
    fp = f_closed_poly(eps, m, n)
    f1, f2 = f_split(eps, m, n)
    _require(fp == f1 + f2, "fefo", f"eps={eps}, m={m}, n={n}")
    _require(fp(1) == 1, "fe-endpoint", f"eps={eps}, m={m}, n={n}")
    return PiecewisePoly.from_poly(fp, -1, 1)


@dataclass(frozen=True)
class UFunction:
    """A u function, known equal along two routes:

    projection route (I-P) ubar and closed route -|t| t^(2m+eps) + f.
    ``value`` is the certified piecewise polynomial, ``f_part`` the smooth
    polynomial part of the closed route.
    """

    n: int
    j: int
    eps: int
    m: int
    value: PiecewisePoly
    f_part: PiecewisePoly


@lru_cache(maxsize=None)
def u_function(n: int, j: int) -> UFunction:
    """u_{n,j} = (I-P)(ubar_{n-j}), certified against the closed form."""
    if not (0 <= j <= n - 1):
        raise InvalidParameterError(f"u_function needs 0 <= j <= n-1, got n={n}, j={j}")
    mbar = n - j
    eps = 0 if mbar % 2 else 1
    m = (mbar - 1 - eps) // 2
    nhat = (n - eps) // 2
    from_projection = project_off_interior(ubar(mbar), n)
    if nhat >= 1:
        fp = f_closed_poly(eps, m, nhat)
        f1, f2 = f_split(eps, m, nhat)
        _require(fp == f1 + f2, "fefo", f"n={n}, j={j}")
    else:
        fp = Poly([0] * eps + [1])  # n = 1 or 2 with empty interior basis
    mono = Poly([0] * mbar + [1])
    from_closed = PiecewisePoly((-1, 0, 1), (fp + mono, fp - mono))
    _require(from_projection == from_closed, "rep1", f"n={n}, j={j}")
    u = from_projection
    _require(u(-1) == 0 and u(1) == 0, "rep1-endpoints", f"n={n}, j={j}")
    _require(
        u.reflect() == (u if eps == 0 else -u), "rep1-parity", f"n={n}, j={j}"
    )
    for b in interior_basis(n):
        _require(u.inner(b) == 0, "rep1-orthogonality", f"n={n}, j={j}")
    return UFunction(n=n, j=j, eps=eps, m=m, value=u,
                     f_part=PiecewisePoly.from_poly(fp, -1, 1))


def _poch_float(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def mellin_f_closed(eps: int, m: int, n: int, z):
    """Mellin moment of the closed-form polynomial over [0, 1]:

        int_0^1 t^(z-1) f(t) dt

    in three closed terms.  For integer z >= 1 the value is exact and is
    asserted equal to the direct moment of f; for real z > 0 it is a float.
    """
    if isinstance(z, int) or (isinstance(z, Fraction) and z.denominator == 1):
        z = int(z)
        if z <= 0:
            raise InvalidParameterError("mellin closed form needs z > 0")
        zf = Fraction(z)
        t1 = 1 / (zf + 2 * m + 1 + eps)
        t2 = (
            Fraction((-1) ** (n + 1))
            * pochhammer(-m - HALF, n + 1)
            / (pochhammer(m + 1 + eps, n + 1) * (n + 1) * (2 * n + 1 + 2 * eps))
        )
        half_z = (zf + eps) / 2 + m + HALF
        t3 = (
            Fraction((-1) ** n)
            * (half_z + (n + 1) * (n + HALF + eps))
            / (half_z * (n + 1) * (2 * n + 1 + 2 * eps))
            * pochhammer(-m - HALF, n + 1)
            * pochhammer(-(zf - eps) / 2 + HALF, n + 1)
            / (pochhammer(m + 1 + eps, n + 1) * pochhammer(-n - (zf + eps) / 2, n + 1))
        )
        value = t1 + t2 + t3
        direct = f_closed(eps, m, n).restrict(0, 1).mellin_integer_moment(z)
        _require(value == direct, "mtfe", f"eps={eps}, m={m}, n={n}, z={z}")
        return value
    z = float(z)
    if z <= 0:
        raise InvalidParameterError("mellin closed form needs z > 0")
    t1 = 1.0 / (z + 2 * m + 1 + eps)
    t2 = (
        (-1.0) ** (n + 1)
        * float(pochhammer(-m - HALF, n + 1))
        / (float(pochhammer(m + 1 + eps, n + 1)) * (n + 1) * (2 * n + 1 + 2 * eps))
    )
    half_z = (z + eps) / 2 + m + 0.5
    t3 = (
        (-1.0) ** n
        * (half_z + (n + 1) * (n + 0.5 + eps))
        / (half_z * (n + 1) * (2 * n + 1 + 2 * eps))
        * float(pochhammer(-m - HALF, n + 1))
        * _poch_float(-(z - eps) / 2 + 0.5, n + 1)
        / (float(pochhammer(m + 1 + eps, n + 1)) * _poch_float(-n - (z + eps) / 2, n + 1))
    )
    return t1 + t2 + t3


# ---------------------------------------------------------------------------
# Closed inner products

def closed_inner_products(n: int, m: int, m1: int | None = None, eps: int = 0,
                          which: str = "ru") -> Fraction:
    """Closed forms of the boundary inner products, certified against exact
    integration of the constructed functions.

    which='ru'     <r, u_{2n+1+eps, 2n-2m}>          (series index n >= m)
    which='uu'     <u_{.., 2n-2m}, u_{.., 2n-2m1}>   (series index n)
    which='rn0un0' <r_n, u_{n, 2m}>                  (vector index n > 2m)
    which='umum1'  <u_{n,2m}, u_{n,2m1}>             (n >= 2 max(m,m1) + 1)
    """
    if which == "ru":
        if not 0 <= m <= n or 2 * n + 1 + eps < 2:
            raise InvalidParameterError("ru needs 0 <= m <= n and vector index >= 2")
        N = 2 * n + 1 + eps
        value = (
            Fraction((-1) ** (n + 1))
            * pochhammer(-m - HALF, n + 1)
            / (pochhammer(m + 1 + eps, n + 1) * (n + HALF + eps) * (n + 1))
        )
        direct = r0(N).inner(u_function(N, 2 * n - 2 * m).value)
        _require(value == direct, "rue", f"n={n}, m={m}, eps={eps}")
        return value
    if which == "uu":
        if m1 is None or not (0 <= m <= n and 0 <= m1 <= n):
            raise InvalidParameterError("uu needs 0 <= m, m1 <= n")
        N = 2 * n + 1 + eps
        value = (
            pochhammer(-m1 - HALF, n + 1)
            * pochhammer(-m - HALF, n + 1)
            * (m1 + m + Fraction(3, 2) + eps + (n + 1) * (n + HALF + eps))
            / (
                pochhammer(m1 + 1 + eps, n + 1)
                * pochhammer(m + 1 + eps, n + 1)
                * (m1 + m + Fraction(3, 2) + eps)
                * (n + 1)
                * (n + HALF + eps)
            )
        )
        direct = u_function(N, 2 * n - 2 * m).value.inner(
            u_function(N, 2 * n - 2 * m1).value
        )
        _require(value == direct, "uuev", f"n={n}, m={m}, m1={m1}, eps={eps}")
        return value
    if which == "rn0un0":
        if not n > 2 * m >= 0:
            raise InvalidParameterError("rn0un0 needs n > 2m >= 0")
        value = Fraction(
            (-1) ** m * factorial(n - 1) * factorial(n - 2 * m) * factorial(2 * m),
            2 ** (n - 2) * factorial(n + 1) * factorial(n - m) * factorial(m),
        )
        u = u_function(n, 2 * m).value
        direct = r0(n).inner(u)
        _require(value == direct, "rn0un0", f"n={n}, m={m}")
        _require(
            l0(n).inner(u) == Fraction((-1) ** (n + 1)) * value,
            "rn0un0-mirror",
            f"n={n}, m={m}",
        )
        return value
    if which == "umum1":
        if m1 is None or n < 2 * max(m, m1) + 1:
            raise InvalidParameterError("umum1 needs n >= 2 max(m, m1) + 1")
        s = m + m1
        value = Fraction(
            (-1) ** s
            * factorial(n - 2 * m)
            * factorial(n - 2 * m1)
            * factorial(2 * m)
            * factorial(2 * m1)
            * factorial(n - 1)
            * (n * n + 5 * n + 2 - 4 * s),
            2 ** (2 * n - 1)
            * factorial(m)
            * factorial(m1)
            * factorial(n - m)
            * factorial(n - m1)
            * factorial(n + 1)
            * (2 * n + 1 - 2 * s),
        )
        direct = u_function(n, 2 * m).value.inner(u_function(n, 2 * m1).value)
        _require(value == direct, "umum1", f"n={n}, m={m}, m1={m1}")
        return value
    raise InvalidParameterError(f"unknown inner product {which!r}")


# ---------------------------------------------------------------------------
# The orthogonality quadratic and its roots

def _quadratic_coeffs(n: int, m: int, m1: int) -> tuple[Fraction, Fraction, Fraction]:
    """Exact coefficients (a_m, b, a_m1) of a_m x^2 + 2 b x + a_m1 = 0, the
    condition for w = x*u_{n,2m} + u_{n,2m1} to make the projected ramps
    orthogonal."""
    r = r0(n)
    um = u_function(n, 2 * m).value
    um1 = u_function(n, 2 * m1).value
    rl = abs(r.inner(l0(n)))
    rm, rm1 = r.inner(um), r.inner(um1)
    a_m = um.norm_sq() * rl - rm * rm
    b = um.inner(um1) * rl - rm * rm1
    a_m1 = um1.norm_sq() * rl - rm1 * rm1
    return a_m, b, a_m1


def alpha_coeff(n: int, m: int, m1: int) -> list[ExactScalar]:
    """Both real roots of the orthogonality quadratic, exactly.

    Rational when the discriminant is a rational square, else elements of
    Q(sqrt(d)) with canonical square-free d.  Returned in the order
    [(-b - sqrt(disc))/a_m, (-b + sqrt(disc))/a_m]; which branch matches
    :func:`alpha_generic` depends on the sign of a_m.
    """
    a_m, b, a_m1 = _quadratic_coeffs(n, m, m1)
    if a_m == 0:
        raise DegenerateQuadraticError(f"leading coefficient vanishes for n={n}, m={m}")
    disc = b * b - a_m * a_m1
    if disc < 0:
        raise NoRealRootError(f"negative discriminant for n={n}, m={m}, m1={m1}")
    s = sqrt_exact(disc)
    return [(-b - s) / a_m, (-b + s) / a_m]


def alpha_generic(n: int) -> ExactScalar:
    """The closed-form symmetric-construction coefficient

        alpha(n) = 2 ((n-2)(2n+1)/(n-1)
                   - 2 sqrt(3) sqrt((2n+1)(n+1)/((2n-3)(n-1)))) / (n(2n-1))

    as an exact scalar (rational exactly when the radicand is a square)."""
    if n < 3:
        raise InvalidParameterError("alpha_generic needs n >= 3")
    rad = 3 * (2 * n + 1) * (n + 1) * (2 * n - 3) * (n - 1)
    root = sqrt_exact(rad)  # sqrt(3)*sqrt(...) rationalized over (2n-3)(n-1)
    inner = Fraction((n - 2) * (2 * n + 1), n - 1) - 2 * root / ((2 * n - 3) * (n - 1))
    return 2 * inner / (n * (2 * n - 1))


def alpha_rational_4n1(nu: int) -> Fraction:
    """Closed-form rational root for the (4 nu + 1)-family:

        (-1)^nu (4nu-1) (4nu)! (nu+1)! (3nu)!
        / (3 (2nu)! (2nu+1)! (2nu+2)! (2nu-1)!).
    """
    if nu < 2:
        raise InvalidParameterError("rational-4n1 family needs nu >= 2")
    return Fraction(
        (-1) ** nu
        * (4 * nu - 1)
        * factorial(4 * nu)
        * factorial(nu + 1)
        * factorial(3 * nu),
        3
        * factorial(2 * nu)
        * factorial(2 * nu + 1)
        * factorial(2 * nu + 2)
        * factorial(2 * nu - 1),
    )


# ---------------------------------------------------------------------------
# w, q and the assembled scaling vector

@dataclass(frozen=True)
class WFunction:
    """w = alpha * u_{n,2m} + u_{n,2m1}, satisfying the ramp-orthogonality
    condition <r,l><w,w> = <r,w><w,l> exactly."""

    n: int
    m: int
    m1: int
    alpha: ExactScalar
    value: PiecewisePoly


def _family_indices(n: int, family: str) -> tuple[int, int]:
    if family == "generic":
        if n < 3:
            raise InvalidParameterError(f"generic family needs n >= 3, got {n}")
        return 0, 1
    if family == "rational-4n":
        if n < 4 or n % 4:
            raise InvalidParameterError(f"rational-4n family needs n = 4, 8, ..., got {n}")
        return 0, n // 4
    if family == "rational-4n1":
        if n < 9 or n % 4 != 1:
            raise InvalidParameterError(f"rational-4n1 family needs n = 9, 13, ..., got {n}")
        nu = (n - 1) // 4
        return nu + 1, 2 * nu
    raise InvalidParameterError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def w_function(n: int, family: str = "generic") -> WFunction:
    """Construct and certify the w function for the given family."""
    m, m1 = _family_indices(n, family)
    a_m, b, a_m1 = _quadratic_coeffs(n, m, m1)
    if family == "generic":
        alpha = alpha_generic(n)
        _require(a_m * alpha * alpha + 2 * b * alpha + a_m1 == 0, "rmra", f"n={n}")
    elif family == "rational-4n":
        _require(a_m1 == 0, "al0", f"n={n}")
        alpha = Fraction(0)
    else:
        nu = (n - 1) // 4
        alpha = alpha_rational_4n1(nu)
        _require(b * b - a_m * a_m1 == 0, "rmra-discriminant", f"n={n}")
        _require(alpha == -b / a_m, "rmra-root", f"n={n}")
    if alpha == 0:
        w = u_function(n, 2 * m1).value
    else:
        w = u_function(n, 2 * m).value.scale(alpha) + u_function(n, 2 * m1).value
    r, l = r0(n), l0(n)
    _require(
        r.inner(l) * w.norm_sq() == r.inner(w) * w.inner(l),
        "newint",
        f"n={n}, family={family}",
    )
    if family != "generic":
        _require(
            all(is_rational(c) for p in w.pieces for c in p.coeffs),
            "rational-coefficients",
            f"n={n}, family={family}",
        )
    return WFunction(n=n, m=m, m1=m1, alpha=alpha, value=w)


def q_projection_constant(n: int, family: str = "generic") -> ExactScalar:
    """The exact ratio <w, r>/<w, w> used to build q."""
    w = w_function(n, family).value
    return w.inner(r0(n)) / w.norm_sq()


def _printed_projection_constant(n: int, family: str) -> ExactScalar:
    if family == "generic":
        root = sqrt_exact(3 * (2 * n + 1) * (2 * n - 3) * (n - 1) * (n + 1))
        return (
            Fraction(2) ** (n - 2)
            * (n - 1)
            * ((n + 1) * (2 * n - 3) - root)
            / ((n + 1) * (n + 2))
        )
    if family == "rational-4n":
        nu = n // 4
        return Fraction(
            (-1) ** nu * 2 ** (4 * nu) * factorial(nu) * factorial(3 * nu),
            factorial(2 * nu + 1) * factorial(2 * nu),
        )
    nu = (n - 1) // 4
    return -Fraction(
        3 * 16**nu * factorial(2 * nu) * factorial(2 * nu + 1),
        (4 * nu + 3) * (nu - 1) * factorial(4 * nu),
    )


@lru_cache(maxsize=None)
def q_ramp(n: int, family: str = "generic") -> tuple[PiecewisePoly, PiecewisePoly]:
    """q_r = (I - P_w) r and its mirror q_l(t) = q_r(-t), certified to satisfy
    <q_r, q_l> = 0 (the orthogonal-MRA condition) and the closed-form
    projection constant."""
    w = w_function(n, family)
    r = r0(n)
    c = q_projection_constant(n, family)
    _require(c == _printed_projection_constant(n, family), "ortoramp-constant",
             f"n={n}, family={family}")
    q_r = r - w.value.scale(c)
    q_l = q_r.reflect()
    _require(q_r.inner(w.value) == 0, "ortoramp-projection", f"n={n}")
    _require(q_r.inner(q_l) == 0, "ortoramp", f"n={n}, family={family}")
    return q_r, q_l


@dataclass(frozen=True)
class ScalingVector:
    """The certified scaling vector (phi_0, ..., phi_n).

    ``entries[0]`` is supported on [-1, 1] and even about 0; the others are
    supported on [0, 1] and symmetric/antisymmetric about 1/2.  Entries are
    unnormalized; exact squared norms ride alongside so rational families
    stay rational.
    """

    n: int
    family: str
    entries: tuple[PiecewisePoly, ...]
    norms_sq: tuple[ExactScalar, ...]
    symmetry: tuple[SymmetryType, ...]


def _verify_scaling_vector(sv: ScalingVector):
    n = sv.n
    for e, sym in zip(sv.entries, sv.symmetry):
        _require(e.check_symmetry(sym), "smyphi", f"n={n}, axis={sym.axis}")
    s0, s1 = sv.entries[0].support
    _require(s0 >= -1 and s1 <= 1, "support", "entry 0")
    for j in range(1, n + 1):
        a, b = sv.entries[j].support
        _require(a >= 0 and b <= 1, "support", f"entry {j}")
    for i in range(n + 1):
        for j in range(i, n + 1):
            ip = sv.entries[i].inner(sv.entries[j])
            if i == j:
                _require(ip == sv.norms_sq[i], "norm", f"entry {i}")
            else:
                _require(ip == 0, "orthogonality", f"entries {i},{j}")
    for i in range(n + 1):
        for j in range(n + 1):
            _require(
                sv.entries[i].inner(sv.entries[j].shift(1)) == 0,
                "shift-orthogonality",
                f"entries {i},{j} shift 1",
            )
    if sv.family != "generic":
        _require(
            all(
                is_rational(c)
                for e in sv.entries
                for p in e.pieces
                for c in p.coeffs
            ),
            "rational-coefficients",
            f"n={n}, family={sv.family}",
        )


@lru_cache(maxsize=None)
def assemble_phi(n: int, family: str = "generic") -> ScalingVector:
    """Assemble and fully verify the scaling vector for (n, family)."""
    _family_indices(n, family)  # validates family/n
    w = w_function(n, family)
    q_r, q_l = q_ramp(n, family)
    entries = [q_r.compose_arg(2, 1) + q_l.compose_arg(2, -1)]
    entries.append(w.value.compose_arg(2, -1))
    for j in range(2, n + 1):
        entries.append(phi_basis(n, 0, j).compose_arg(2, -1))
    symmetry = [SymmetryType(Fraction(0), "even")]
    symmetry.append(SymmetryType(HALF, "even" if (n + 1) % 2 == 0 else "odd"))
    for j in range(2, n + 1):
        symmetry.append(SymmetryType(HALF, "even" if j % 2 == 0 else "odd"))
    norms = tuple(e.norm_sq() for e in entries)
    sv = ScalingVector(
        n=n,
        family=family,
        entries=tuple(entries),
        norms_sq=norms,
        symmetry=tuple(symmetry),
    )
    _verify_scaling_vector(sv)
    return sv


def default_family(n: int) -> str:
    """The natural family for a given n: rational when available."""
    if n >= 4 and n % 4 == 0:
        return "rational-4n"
    if n >= 9 and n % 4 == 1:
        return "rational-4n1"
    return "generic"
