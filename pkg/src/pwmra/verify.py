"""Named identity suites behind the `verify` command.

Each check runs one family of exact identities (or float oracle comparisons
for the transform suite) and reports a :class:`CheckResult` keyed by the
identity's short name, so failures point at the guarantee that broke.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import hyperjacobi as hj
from . import mrabuild as mb
from . import refine as rf
from . import xform
from .errors import ConstructionError

W_GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0)

SUITES = ("hyper", "exact", "mra", "fourier", "all")


@dataclass
class CheckResult:
    identity: str
    params: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def record(self, identity: str, params: str, fn):
        try:
            detail = fn()
            self.checks.append(CheckResult(identity, params, True, detail or ""))
        except (ConstructionError, AssertionError, ValueError) as exc:
            self.checks.append(CheckResult(identity, params, False, str(exc)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _rand_fraction(rng: random.Random, small: bool = False) -> Fraction:
    num = rng.randint(-8, 8)
    den = rng.choice([1, 2, 3, 4, 5, 7])
    f = Fraction(num, den)
    if small:
        return f
    return f if f != 0 else Fraction(1, 2)


def _rand_nonint(rng: random.Random) -> Fraction:
    num = rng.randint(-15, 15)
    den = rng.choice([2, 3, 4, 5, 7])
    f = Fraction(num, den)
    if f.denominator == 1:
        f += Fraction(1, den if den > 1 else 2)
    return f


def suite_hyper(seed: int = 0, trials: int = 100) -> Report:
    """Randomized exact trials of the summation theorems, the five
    contiguous relations, and the two lemma closed forms."""
    rep = Report()
    rng = random.Random(seed)

    def chu():
        for _ in range(trials):
            n = rng.randint(0, 12)
            a, b = _rand_fraction(rng, small=True), _rand_nonint(rng)
            assert hj.chu_vandermonde(n, a, b) == hj.pfq((Fraction(-n), a), (b,), 1)
        return f"{trials} trials"

    rep.record("chu-vandermonde", f"trials={trials}", chu)

    def saalschutz():
        done = 0
        while done < trials:
            n = rng.randint(0, 10)
            a, b = _rand_fraction(rng, small=True), _rand_fraction(rng, small=True)
            c = _rand_nonint(rng)
            low2 = -n + a + b - c + 1
            if low2.denominator == 1 and -low2.numerator < n:
                continue
            if hj.pochhammer(c - a - b, n) == 0:
                continue
            assert hj.pfaff_saalschutz(n, a, b, c) == hj.pfq(
                (Fraction(-n), a, b), (c, low2), 1
            )
            done += 1
        return f"{trials} trials"

    rep.record("pfaff-saalschutz", f"trials={trials}", saalschutz)

    for rel in ("rec1", "rec2", "rec3", "rec4", "rec5"):

        def run(rel=rel):
            for _ in range(trials):
                nterm = rng.randint(1, 8)
                z = _rand_fraction(rng, small=True)
                if rel in ("rec3", "rec5"):
                    params = [
                        _rand_nonint(rng),
                        Fraction(-nterm),
                        _rand_nonint(rng),
                        _rand_nonint(rng),
                        _rand_nonint(rng),
                    ]
                else:
                    params = [Fraction(-nterm)] + [_rand_nonint(rng) for _ in range(6)]
                assert hj.contiguous_residual(rel, params, z) == 0
            return f"{trials} trials"

        rep.record(rel, f"trials={trials}", run)

    def hyp(variant):
        def run():
            done = 0
            while done < trials:
                n = rng.randint(1, 9)
                a, b = _rand_nonint(rng), _rand_nonint(rng)
                d = -n + a if variant == "hyp2" else -n + a - 1
                lhs = hj.pfq((Fraction(-n + 1), a + 1, b + 1),
                             (d + 1, b + (2 if variant == "hyp2" else 3)), 1)
                assert hj.hyp1_closed(variant, n, a, b) == lhs
                done += 1
            return f"{trials} trials"

        return run

    rep.record("hyp2", f"trials={trials}", hyp("hyp2"))
    rep.record("hyp3", f"trials={trials}", hyp("hyp3"))
    return rep


def suite_exact(n_lo: int = 3, n_hi: int = 6, seed: int = 0) -> Report:
    """Exact identities of the boundary machinery for n in [n_lo, n_hi]:
    ramp norms, u-function routes, Mellin moments, the closed inner
    products, and the quadratic's structure."""
    rep = Report()
    rng = random.Random(seed)
    for n in range(max(2, n_lo), n_hi + 1):
        rep.record(
            "roro",
            f"n={n}",
            lambda n=n: _check_roro(n),
        )
        rep.record("ppnk", f"n={n}", lambda n=n: _check_ramp(n))
        rep.record("rep1", f"n={n}", lambda n=n: _check_rep1(n))
        rep.record("mtfe", f"n={n}", lambda n=n: _check_mellin(n))
        rep.record("rue/uuev", f"n={n}", lambda n=n: _check_series_products(n))
        rep.record("rn0un0/umum1", f"n={n}", lambda n=n: _check_vector_products(n))
        rep.record("u00", f"n={n}", lambda n=n: _check_u00(n))
        rep.record(
            "discriminant",
            f"n={n}",
            lambda n=n: _check_discriminant(n, rng),
        )
    return rep


def _check_roro(n: int) -> str:
    closed = Fraction((-1) ** (n + 1) * 8, (n + 2) * (n + 1) * n)
    assert mb.r0(n).inner(mb.l0(n)) == closed
    return ""


def _check_ramp(n: int) -> str:
    count = 0
    for k in range((n - 2) // 2 + 1):
        pairs = [hj.ramp_pair(n, k, i) for i in range(k + 1)]
        for i, pi in enumerate(pairs):
            for j, pj in enumerate(pairs):
                expect = hj.ramp_diag_product(n, k, i) if i == j else Fraction(0)
                assert pi.r.inner(pj.l) == expect
                count += 1
            for jj in range(2 * k + 2, n + 1):
                assert pi.r.inner(hj.phi_basis(n, k, jj)) == 0
                count += 1
    return f"{count} inner products"


def _check_rep1(n: int) -> str:
    for j in range(n):
        mb.u_function(n, j)  # raises on any route mismatch
    return f"{n} index pairs"


def _check_mellin(n: int) -> str:
    count = 0
    for eps in (0, 1):
        for m in range(n + 1):
            for z in range(1, 7):
                mb.mellin_f_closed(eps, m, n, z)  # asserts vs direct moment
                count += 1
    return f"{count} moments"


def _check_series_products(n: int) -> str:
    count = 0
    for eps in (0, 1):
        for m in range(n + 1):
            mb.closed_inner_products(n, m, eps=eps, which="ru")
            count += 1
            for m1 in range(m, n + 1):
                mb.closed_inner_products(n, m, m1, eps=eps, which="uu")
                count += 1
    return f"{count} products"


def _check_vector_products(n: int) -> str:
    count = 0
    for m in range((n - 1) // 2 + 1):
        mb.closed_inner_products(n, m, which="rn0un0")
        count += 1
        for m1 in range(m, (n - 1) // 2 + 1):
            mb.closed_inner_products(n, m, m1, which="umum1")
            count += 1
    return f"{count} products"


def _check_u00(n: int) -> str:
    r = mb.r0(n)
    rl = abs(r.inner(mb.l0(n)))
    count = 0
    for m1 in range((n - 1) // 2 + 1):
        u = mb.u_function(n, 2 * m1).value
        ru = r.inner(u)
        lhs = u.norm_sq() * rl - ru * ru
        rhs = -ru * ru * Fraction(n * (n - 4 * m1), (n + 2) * (2 * n + 1 - 4 * m1))
        assert lhs == rhs
        count += 1
    return f"{count} indices"


def _check_discriminant(n: int, rng: random.Random) -> str:
    valid = [
        (m, m1)
        for m in range((n - 1) // 2 + 1)
        for m1 in range((n - 1) // 2 + 1)
        if m != m1
    ]
    if not valid:
        return "no valid index pairs"
    count = 0
    for m, m1 in rng.sample(valid, min(4, len(valid))):
        a_m, b, a_m1 = mb._quadratic_coeffs(n, m, m1)
        rm = mb.closed_inner_products(n, m, which="rn0un0")
        rm1 = mb.closed_inner_products(n, m1, which="rn0un0")
        bt = b / (rm * rm1)
        at_m = a_m / (rm * rm)
        at_m1 = a_m1 / (rm1 * rm1)
        s = m + m1
        printed = Fraction(
            4 * (m - m1) ** 2 * n * n * (n + 1) * (3 * n + 1 - 4 * s),
            (n + 2) ** 2
            * (2 * n + 1 - 2 * s) ** 2
            * (2 * n + 1 - 4 * m)
            * (2 * n + 1 - 4 * m1),
        )
        assert bt * bt - at_m * at_m1 == printed
        count += 1
    return f"{count} index pairs"


def suite_mra(n_lo: int = 3, n_hi: int = 6, family: str | None = None) -> Report:
    """Scaling-vector and refinement identities: orthogonality with shifts,
    the dilation identity, matrix sign laws, structural zeros, and the
    wavelet completion."""
    rep = Report()
    for n in range(max(3, n_lo), n_hi + 1):
        fam = family or "generic"
        try:
            mb._family_indices(n, fam)
        except ValueError:
            continue  # family not defined at this n
        rep.record("tv", f"n={n}, family={fam}", lambda n=n, f=fam: _check_build(n, f))
        rep.record(
            "refl/crefine/zeroco",
            f"n={n}, family={fam}",
            lambda n=n, f=fam: _check_refinement(n, f),
        )
    return rep


def _check_build(n: int, family: str) -> str:
    sv = mb.assemble_phi(n, family)
    return f"{len(sv.entries)} generators certified"


def _check_refinement(n: int, family: str) -> str:
    rs = rf.build_refinement(n, family)
    return f"{len(rs.psi)} wavelets certified"


def suite_fourier(n_lo: int = 1, n_hi: int = 4, tol: float = 1e-9) -> Report:
    """Closed-form transforms against the exact-moment oracle on the w grid,
    plus exact zero-frequency moments."""
    rep = Report()
    for n in range(max(1, n_lo), n_hi + 1):
        for eps in (0, 1):
            rep.record(
                "ftpn1",
                f"n={n}, eps={eps}",
                lambda n=n, e=eps: _check_ftphi(n, e, tol),
            )
    for n in range(max(2, n_lo), n_hi + 1):
        rep.record("ftln2", f"n={n}", lambda n=n: _check_ftl0(n, tol))
    for n in range(max(1, n_lo), n_hi + 1):
        for eps in (0, 1):
            for m in range(n + 1):
                rep.record(
                    "ftuf",
                    f"n={n}, m={m}, eps={eps}",
                    lambda n=n, m=m, e=eps: _check_ftu(e, m, n, tol),
                )
    return rep


def _check_ftphi(n: int, eps: int, tol: float) -> str:
    f = hj.phi_basis(2 * n + eps, 0, 2 * n + eps)
    worst = 0.0
    for w in W_GRID:
        diff = abs(xform.fourier_phi(n, eps, w).value - xform.quadrature_oracle(f, w))
        worst = max(worst, diff)
        assert diff <= tol, f"w={w}: diff {diff:.3e} > {tol}"
    moment = float(f.integral())
    zero = xform.fourier_phi(n, eps, 0.0).value
    assert abs(zero.real - moment) <= 1e-14 * max(1.0, abs(moment)) and abs(zero.imag) <= 1e-14
    return f"worst {worst:.2e}"


def _check_ftl0(n: int, tol: float) -> str:
    f = mb.l0(n)
    worst = 0.0
    for w in W_GRID:
        diff = abs(xform.fourier_l0(n, w).value - xform.quadrature_oracle(f, w))
        worst = max(worst, diff)
        assert diff <= tol, f"w={w}: diff {diff:.3e} > {tol}"
    moment = float(f.integral())
    zero = xform.fourier_l0(n, 0.0).value
    assert abs(zero.real - moment) <= 1e-14 * max(1.0, abs(moment)) and abs(zero.imag) <= 1e-14
    return f"worst {worst:.2e}"


def _check_ftu(eps: int, m: int, n: int, tol: float) -> str:
    f = mb.u_function(2 * n + 1 + eps, 2 * n - 2 * m).value
    worst = 0.0
    for w in W_GRID:
        diff = abs(xform.fourier_u(eps, m, n, w).value - xform.quadrature_oracle(f, w))
        worst = max(worst, diff)
        assert diff <= tol, f"w={w}: diff {diff:.3e} > {tol}"
    moment = float(f.integral())
    zero = xform.fourier_u(eps, m, n, 0.0).value
    assert abs(zero.real - moment) <= 1e-14 * max(1.0, abs(moment)) and abs(zero.imag) <= 1e-14
    return f"worst {worst:.2e}"


def run_suite(name: str, n_lo: int, n_hi: int, tol: float = 1e-9,
              seed: int = 0, family: str | None = None) -> Report:
    if name == "hyper":
        return suite_hyper(seed=seed)
    if name == "exact":
        return suite_exact(n_lo, n_hi, seed=seed)
    if name == "mra":
        return suite_mra(n_lo, n_hi, family=family)
    if name == "fourier":
        # transform series indices only go up to 6 in the certified range
        return suite_fourier(max(1, min(n_lo, 6)), min(n_hi, 6), tol)
    if name == "all":
        rep = Report()
        for sub in ("hyper", "exact", "mra", "fourier"):
            rep.checks.extend(run_suite(sub, n_lo, n_hi, tol, seed, family).checks)
        return rep
    raise ValueError(f"unknown suite {name!r}")
