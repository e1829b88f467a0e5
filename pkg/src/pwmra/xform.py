"""Closed-form Fourier transforms (convention f^(w) = int f(t) e^{-iwt} dt)
of the interior basis functions, the left boundary ramp, and the u functions,
plus an independent oracle.

The hypergeometric series here are entire with factorially decaying terms,
but evaluated naively in doubles they can lose all significant digits to
cancellation (the 2F2 at argument 2iw is the worst offender).  Partial sums
are therefore accumulated in exact rational arithmetic, with the float
argument promoted to the rational it exactly represents; only the final
value is rounded.  The truncation cutoff is the first omitted term with a
safety factor of 10 and an iteration cap.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameterError
from .exactnum import pochhammer
from .polykit import PiecewisePoly

HALF = Fraction(1, 2)

_MAX_TERMS = 10_000


class ConvergenceError(RuntimeError):
    """Series did not meet the tolerance within the iteration cap."""


@dataclass(frozen=True)
class FTResult:
    """A transform value with the series bookkeeping behind it."""

    value: complex
    terms_used: int
    est_truncation_error: float


def _series_exact(upper, lower, zre: Fraction, zim: Fraction, tol: float
                  ) -> tuple[complex, int, float]:
    """Sum_{k} prod(upper)_k / (prod(lower)_k k!) z^k with exact partial sums.

    Stops once the next term magnitude is below tol/10 and past the term
    hump.  Returns (value, terms, bound on the omitted tail).
    """
    upper = [Fraction(u) for u in upper]
    lower = [Fraction(l) for l in lower]
    tre, tim = Fraction(1), Fraction(0)
    sre, sim = tre, tim
    zmag = math.hypot(float(zre), float(zim))
    cutoff = tol / 10.0
    for k in range(_MAX_TERMS):
        ratio_num = Fraction(1)
        for u in upper:
            ratio_num *= u + k
        ratio_den = Fraction(k + 1)
        for l in lower:
            ratio_den *= l + k
        if ratio_den == 0:
            raise InvalidParameterError("lower parameter hit a nonpositive integer")
        scale = ratio_num / ratio_den
        tre, tim = scale * (tre * zre - tim * zim), scale * (tre * zim + tim * zre)
        if tre == 0 and tim == 0:
            return complex(float(sre), float(sim)), k + 1, 0.0
        sre += tre
        sim += tim
        tmag = math.hypot(float(tre), float(tim))
        if tmag < cutoff and k + 1 > zmag:
            return complex(float(sre), float(sim)), k + 2, tmag * 10.0
    raise ConvergenceError("series cap exceeded")


_KINDS = {"0F1": (0, 1), "1F2": (1, 2), "2F2": (2, 2)}


def series_hyper(kind: str, upper, lower, z: complex, tol: float = 1e-14) -> complex:
    """Evaluate 0F1 / 1F2 / 2F2 at a complex argument to the given tolerance."""
    if kind not in _KINDS:
        raise InvalidParameterError(f"unknown series kind {kind!r}")
    nu, nl = _KINDS[kind]
    if len(upper) != nu or len(lower) != nl:
        raise InvalidParameterError(f"{kind} takes {nu} upper and {nl} lower parameters")
    if tol <= 0:
        raise InvalidParameterError("tolerance must be positive")
    z = complex(z)
    value, _, _ = _series_exact(upper, lower, Fraction(z.real), Fraction(z.imag), tol)
    return value


def _minus_w_half_sq(w: float) -> tuple[Fraction, Fraction]:
    wf = Fraction(w)
    return -(wf * wf) / 4, Fraction(0)


def fourier_phi(n: int, eps: int, w: float, tol: float = 1e-12) -> FTResult:
    """Transform of the interior basis function of degree 2n+eps,
    (1-t^2) p_{2(n-1)+eps}^{(5/2)}(t):

        (-i)^eps (n-1)!/(n-1/2+eps)_{n+1} * [ cos(w - eps pi/2)
          + (-1)^n (w/2)^{2n+2+eps}/(1/2)_{2n+2+eps} 0F1(; 2n+5/2+eps; -(w/2)^2)
          - (-1)^n (n+1)(n+1/2+eps) (w/2)^{2n+eps}/(1/2)_{2n+1+eps}
            * 0F1(; 2n+3/2+eps; -(w/2)^2) ].
    """
    if n < 1:
        raise InvalidParameterError("fourier_phi needs n >= 1")
    if eps not in (0, 1):
        raise InvalidParameterError("eps must be 0 or 1")
    zre, zim = _minus_w_half_sq(w)
    base = (-1j) ** eps * math.factorial(n - 1) / float(
        pochhammer(n - HALF + eps, n + 1)
    )
    half_w = w / 2.0
    pre2 = (-1.0) ** n * half_w ** (2 * n + 2 + eps) / float(
        pochhammer(HALF, 2 * n + 2 + eps)
    )
    pre3 = (
        (-1.0) ** (n - 1)
        * (n + 1)
        * float(n + HALF + eps)
        * half_w ** (2 * n + eps)
        / float(pochhammer(HALF, 2 * n + 1 + eps))
    )
    s1, k1, e1 = _series_exact(
        [], [2 * n + HALF * 5 + eps], zre, zim, tol / max(1.0, abs(pre2))
    )
    s2, k2, e2 = _series_exact(
        [], [2 * n + HALF * 3 + eps], zre, zim, tol / max(1.0, abs(pre3))
    )
    term1 = math.cos(w - eps * math.pi / 2)
    value = base * (term1 + pre2 * s1 + pre3 * s2)
    return FTResult(value, k1 + k2, max(e1 * abs(pre2), e2 * abs(pre3)))


def fourier_l0(n: int, w: float, tol: float = 1e-12) -> FTResult:
    """Transform of the left boundary ramp:

        4/(n(n+2)) e^{iw} - 4(-1)^n e^{-iw}/(n(n+1)(n+2))
          - 4 (n-1)! (2iw)^{n+1} e^{-iw} / (2n+2)!
            * 2F2(n+1, n+3; n+2, 2n+3; 2iw).
    """
    if n < 2:
        raise InvalidParameterError("fourier_l0 needs n >= 2")
    pre = (
        -4.0
        * math.factorial(n - 1)
        * (2j * w) ** (n + 1)
        * cmath.exp(-1j * w)
        / math.factorial(2 * n + 2)
    )
    s, k, e = _series_exact(
        [Fraction(n + 1), Fraction(n + 3)],
        [Fraction(n + 2), Fraction(2 * n + 3)],
        Fraction(0),
        2 * Fraction(w),
        tol / max(1.0, abs(pre)),
    )
    value = (
        4.0 / (n * (n + 2)) * cmath.exp(1j * w)
        - 4.0 * (-1.0) ** n / (n * (n + 1) * (n + 2)) * cmath.exp(-1j * w)
        + pre * s
    )
    return FTResult(value, k, e * abs(pre))


def fourier_u(eps: int, m: int, n: int, w: float, tol: float = 1e-12) -> FTResult:
    """Transform of the u function with vector index 2n+1+eps and second
    subscript 2n-2m:

        -(-iw)^eps [ (-m-1/2)_{n+1} (w/2)^{2n+2}
                       / ((m+eps+1)_{n+2} (1/2+eps)_{2n+2})
                     * 1F2(n+m+eps+2; n+m+eps+3, 2n+5/2+eps; -(w/2)^2)
                   + (-1)^n (-m-1/2)_{n+1}
                       / ((m+1+eps)_{n+1} (n+1)(n+1/2+eps))
                     * 0F1(; 1/2+eps; -(w/2)^2)
                   + (-m-1/2)_{n+1} (w/2)^{2n+2}
                       / ((n+1)(n+1/2+eps)(m+1+eps)_{n+1}(1/2+eps)_{2n+2})
                     * 0F1(; 2n+5/2+eps; -(w/2)^2) ].
    """
    if eps not in (0, 1):
        raise InvalidParameterError("eps must be 0 or 1")
    if not 0 <= m <= n:
        raise InvalidParameterError("fourier_u needs 0 <= m <= n")
    zre, zim = _minus_w_half_sq(w)
    poch_top = float(pochhammer(-m - HALF, n + 1))
    half_w = w / 2.0
    pre1 = (
        poch_top
        * half_w ** (2 * n + 2)
        / (float(pochhammer(m + eps + 1, n + 2)) * float(pochhammer(HALF + eps, 2 * n + 2)))
    )
    pre2 = (
        (-1.0) ** n
        * poch_top
        / (float(pochhammer(m + 1 + eps, n + 1)) * (n + 1) * float(n + HALF + eps))
    )
    pre3 = (
        poch_top
        * half_w ** (2 * n + 2)
        / (
            (n + 1)
            * float(n + HALF + eps)
            * float(pochhammer(m + 1 + eps, n + 1))
            * float(pochhammer(HALF + eps, 2 * n + 2))
        )
    )
    s1, k1, e1 = _series_exact(
        [Fraction(n + m + eps + 2)],
        [Fraction(n + m + eps + 3), 2 * n + HALF * 5 + eps],
        zre, zim, tol / max(1.0, abs(pre1)),
    )
    s2, k2, e2 = _series_exact([], [HALF + eps], zre, zim, tol / max(1.0, abs(pre2)))
    s3, k3, e3 = _series_exact(
        [], [2 * n + HALF * 5 + eps], zre, zim, tol / max(1.0, abs(pre3))
    )
    value = -((-1j * w) ** eps) * (pre1 * s1 + pre2 * s2 + pre3 * s3)
    return FTResult(
        value, k1 + k2 + k3, max(e1 * abs(pre1), e2 * abs(pre2), e3 * abs(pre3))
    )


def quadrature_oracle(f: PiecewisePoly, w: float, tol: float = 1e-12) -> complex:
    """Independent value of int f(t) e^{-iwt} dt.

    Expands e^{-iwt} and pairs it with the exact moments of f; the partial
    sum is exact (w is promoted to the rational it represents) so the only
    error is the rigorously bounded truncated tail.
    """
    if tol <= 0:
        raise InvalidParameterError("tolerance must be positive")
    if f.is_zero():
        return 0j
    wf = Fraction(w)
    abs_w = abs(float(w))
    l1 = f.l1_bound()
    # incremental per-piece endpoint powers: apow[j] = a^(k+j+1) at step k
    pieces = []
    for idx, p in enumerate(f.pieces):
        a, b = f.breakpoints[idx], f.breakpoints[idx + 1]
        apow = [a ** (j + 1) for j in range(len(p.coeffs))]
        bpow = [b ** (j + 1) for j in range(len(p.coeffs))]
        pieces.append((p.coeffs, a, b, apow, bpow))
    re, im = Fraction(0), Fraction(0)
    wpow = Fraction(1)
    kfact = 1
    for k in range(_MAX_TERMS):
        if k > 0:
            wpow *= wf
            kfact *= k
            for coeffs, a, b, apow, bpow in pieces:
                for j in range(len(coeffs)):
                    apow[j] *= a
                    bpow[j] *= b
        moment = Fraction(0)
        for coeffs, a, b, apow, bpow in pieces:
            for j, c in enumerate(coeffs):
                if c != 0:
                    moment += c * (bpow[j] - apow[j]) / (k + j + 1)
        contrib = wpow * moment / kfact
        # (-i)^k cycles 1, -i, -1, i
        quarter = k % 4
        if quarter == 0:
            re += contrib
        elif quarter == 1:
            im -= contrib
        elif quarter == 2:
            re -= contrib
        else:
            im += contrib
        # rigorous tail: l1(f) * sum_{j>k} |w|^j/j!
        if k + 2 > abs_w:
            tail = l1 * abs_w ** (k + 1) / math.factorial(k + 1)
            tail /= max(1e-12, 1.0 - abs_w / (k + 2))
            if tail < tol / 10.0:
                return complex(float(re), float(im))
    raise ConvergenceError("oracle series cap exceeded")
