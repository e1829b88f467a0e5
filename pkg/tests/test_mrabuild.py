from fractions import Fraction
from math import factorial

import pytest

from pwmra.errors import InvalidParameterError
from pwmra.exactnum import QuadExt, is_rational, quadext
from pwmra.mrabuild import (
    DegenerateQuadraticError,
    NoRealRootError,
    alpha_coeff,
    alpha_generic,
    alpha_rational_4n1,
    assemble_phi,
    closed_inner_products,
    f_closed,
    interior_basis,
    l0,
    mellin_f_closed,
    project_off_interior,
    q_projection_constant,
    q_ramp,
    r0,
    u_function,
    ubar,
    w_function,
)
from pwmra.polykit import PiecewisePoly, Poly

F = Fraction


def test_ubar_examples():
    assert ubar(1) == PiecewisePoly((-1, 0, 1), (Poly((1, 1)), Poly((1, -1))))
    assert ubar(2) == PiecewisePoly((-1, 0, 1), (Poly((0, 1, 1)), Poly((0, 1, -1))))
    u3 = ubar(3)
    assert u3(1) == 0 and u3(-1) == 0
    with pytest.raises(InvalidParameterError):
        ubar(0)


def test_projection_examples():
    phi2 = interior_basis(4)[0]
    assert project_off_interior(phi2, 4).is_zero()
    # ubar_2 is already orthogonal to the interior space at n = 2
    assert project_off_interior(ubar(2), 2) == ubar(2)
    assert project_off_interior(ubar(3), 5) == u_function(5, 2).value


def test_r0_examples():
    for n in range(2, 9):
        r = r0(n)
        assert r(1) == 2
        for b in interior_basis(n):
            assert r.inner(b) == 0
    for n in range(3, 11):
        assert r0(n).inner(l0(n)) == F((-1) ** (n + 1) * 8, (n + 2) * (n + 1) * n)


def test_f_closed_examples():
    for eps, m, n in [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 2, 3)]:
        f = f_closed(eps, m, n)
        assert f(1) == 1
        assert f.reflect() == (f if eps == 0 else -f)
    # n-hat = 2, m = 1, eps = 0 matches the projection route plus the kink
    kink = PiecewisePoly((-1, 0, 1), (Poly((0, 0, 0, -1)), Poly((0, 0, 0, 1))))
    assert f_closed(0, 1, 2) == u_function(5, 2).value + kink


def test_u_function_examples():
    u = u_function(5, 2)
    assert u.value(1) == 0 and u.value(-1) == 0
    bracket = Poly((1, 0, -1))
    for i in range(4):
        mono = Poly([0] * i + [1])
        probe = PiecewisePoly.from_poly(mono * bracket, -1, 1)
        assert u.value.inner(probe) == 0
    # same function appears under two consecutive vector indices
    assert u_function(4, 1).value == u_function(5, 2).value
    with pytest.raises(InvalidParameterError):
        u_function(5, 5)


def test_mellin_examples():
    # exact equality against the direct moment is asserted inside the call
    v = mellin_f_closed(0, 1, 2, 1)
    direct = f_closed(0, 1, 2).restrict(0, 1).mellin_integer_moment(1)
    assert v == direct
    # the third closed-form term carries a factor that kills it at
    # z = eps+1, eps+3, ..., eps+2n+1
    from pwmra.exactnum import pochhammer
    for eps in (0, 1):
        for z in range(eps + 1, eps + 2 * 3 + 2, 2):
            assert pochhammer(-(F(z) - eps) / 2 + F(1, 2), 3 + 1) == 0
            mellin_f_closed(eps, 1, 3, z)
    assert isinstance(mellin_f_closed(0, 1, 2, 2.5), float)
    # float path agrees with the exact path at integer arguments
    for z in (1, 4, 7):
        exact = mellin_f_closed(1, 2, 3, z)
        assert abs(mellin_f_closed(1, 2, 3, float(z)) - float(exact)) <= 1e-13
    with pytest.raises(InvalidParameterError):
        mellin_f_closed(0, 1, 2, -1)


def test_mellin_assembles_boundary_products():
    # <r, u> = -1/(m+1+eps) + 2 * mellin(z = 1+eps)
    for eps, m, n in [(0, 0, 2), (0, 2, 3), (1, 1, 2)]:
        lhs = closed_inner_products(n, m, eps=eps, which="ru")
        assert lhs == -F(1, m + 1 + eps) + 2 * mellin_f_closed(eps, m, n, 1 + eps)
    # <u_m, u_m1> uses z = 1+eps and z = 2m+2+eps
    for eps, m, m1, n in [(0, 1, 2, 3), (1, 0, 1, 2)]:
        lhs = closed_inner_products(n, m, m1, eps=eps, which="uu")
        rhs = (
            -F(1, m1 + 1 + eps)
            + F(2, 2 * m1 + 2 * m + 3 + 2 * eps)
            + 2 * (mellin_f_closed(eps, m1, n, 1 + eps)
                   - mellin_f_closed(eps, m1, n, 2 * m + 2 + eps))
        )
        assert lhs == rhs


def test_closed_inner_products_examples():
    assert closed_inner_products(2, 1, eps=0, which="ru") == F(-1, 480)
    assert closed_inner_products(5, 1, 2, which="umum1") == F(-1, 1920)
    # mirror identity is asserted inside rn0un0
    v = closed_inner_products(6, 1, which="rn0un0")
    assert l0(6).inner(u_function(6, 2).value) == -v
    with pytest.raises(InvalidParameterError):
        closed_inner_products(4, 2, which="rn0un0")


def test_alpha_examples():
    assert alpha_generic(4) == 0
    for nu in (1, 2):
        a_m, b, a_m1 = __import__("pwmra.mrabuild", fromlist=["x"])._quadratic_coeffs(
            4 * nu, 0, nu
        )
        assert a_m1 == 0
    roots = alpha_coeff(5, 0, 1)
    assert alpha_generic(5) in roots
    assert alpha_generic(5) == quadext(F(11, 30), F(-2, 105), 154)
    printed = alpha_rational_4n1(2)
    assert printed == F(98, 3)
    assert alpha_coeff(9, 3, 4) == [printed, printed]
    with pytest.raises(DegenerateQuadraticError):
        alpha_coeff(4, 1, 0)
    with pytest.raises(NoRealRootError):
        alpha_coeff(13, 5, 6)


def test_w_function_examples():
    w4 = w_function(4, "rational-4n")
    assert w4.alpha == 0
    assert w4.value == u_function(4, 2).value
    assert all(is_rational(c) for p in w4.value.pieces for c in p.coeffs)
    w5 = w_function(5, "generic")
    assert isinstance(w5.alpha, QuadExt)
    # printed squared norm of the rational-4n1 combination at nu = 2
    w9 = w_function(9, "rational-4n1")
    assert w9.value.norm_sq() == F(2) ** (3 - 16) * F(factorial(8)) ** 3 * 11 / (
        9 * F(factorial(4)) ** 2 * F(factorial(5)) ** 2 * factorial(10)
    )
    assert r0(9).inner(w9.value) == -F(2) ** (3 - 8) * F(factorial(8)) ** 2 / (
        3 * factorial(4) * factorial(5) * factorial(10)
    )
    with pytest.raises(InvalidParameterError):
        w_function(5, "rational-4n")
    with pytest.raises(InvalidParameterError):
        w_function(5, "rational-4n1")


def test_q_ramp_examples():
    q_r, q_l = q_ramp(5, "generic")
    assert q_r.inner(q_l) == 0
    assert q_r.inner(w_function(5, "generic").value) == 0
    assert q_projection_constant(4, "rational-4n") == F(
        (-1) * 2**4 * factorial(1) * factorial(3), factorial(3) * factorial(2)
    )
    assert q_projection_constant(4, "rational-4n") == -8


def test_assemble_phi_examples():
    sv = assemble_phi(3, "generic")
    assert len(sv.entries) == 4
    assert sv.entries[0].support == (F(-1), F(1))
    for j in range(1, 4):
        assert sv.entries[j].support == (F(0), F(1))
    sv4 = assemble_phi(4, "rational-4n")
    assert all(
        is_rational(c) for e in sv4.entries for p in e.pieces for c in p.coeffs
    )
    for n in range(3, 7):
        sv = assemble_phi(n, "generic")
        assert sv.symmetry[0].parity == "even" and sv.symmetry[0].axis == 0
        assert sv.symmetry[1].parity == ("even" if n % 2 else "odd")
        for j in range(2, n + 1):
            assert sv.symmetry[j].parity == ("even" if j % 2 == 0 else "odd")
    with pytest.raises(InvalidParameterError):
        assemble_phi(2, "generic")


def test_u00_and_discriminant_displays():
    for n in range(2, 13):
        r = r0(n)
        rl = abs(r.inner(l0(n)))
        for m1 in range((n - 1) // 2 + 1):
            u = u_function(n, 2 * m1).value
            ru = r.inner(u)
            assert u.norm_sq() * rl - ru * ru == -ru * ru * F(
                n * (n - 4 * m1), (n + 2) * (2 * n + 1 - 4 * m1)
            )
    from pwmra.mrabuild import _quadratic_coeffs

    for n, m, m1 in [(5, 0, 1), (8, 1, 3), (12, 2, 5), (9, 0, 4)]:
        a_m, b, a_m1 = _quadratic_coeffs(n, m, m1)
        rm = closed_inner_products(n, m, which="rn0un0")
        rm1 = closed_inner_products(n, m1, which="rn0un0")
        bt = b / (rm * rm1)
        s = m + m1
        assert bt == -F(n * (n - 2 * s), (n + 2) * (2 * n + 1 - 2 * s))
        lhs = bt * bt - (a_m / (rm * rm)) * (a_m1 / (rm1 * rm1))
        assert lhs == F(
            4 * (m - m1) ** 2 * n * n * (n + 1) * (3 * n + 1 - 4 * s),
            (n + 2) ** 2 * (2 * n + 1 - 2 * s) ** 2 * (2 * n + 1 - 4 * m) * (2 * n + 1 - 4 * m1),
        )
