import math
from fractions import Fraction

import pytest

from pwmra.errors import InvalidParameterError
from pwmra.hyperjacobi import phi_basis
from pwmra.mrabuild import l0, u_function
from pwmra.polykit import PiecewisePoly, Poly
from pwmra.xform import (
    fourier_l0,
    fourier_phi,
    fourier_u,
    quadrature_oracle,
    series_hyper,
)

F = Fraction


def test_series_hyper_examples():
    assert series_hyper("0F1", [], [F(5, 2)], 0j) == 1
    # 0F1(; 3/2; -(w/2)^2) = sin(w)/w, which vanishes at w = pi
    v = series_hyper("0F1", [], [F(3, 2)], complex(-((math.pi / 2) ** 2)))
    assert abs(v) <= 1e-12
    assert series_hyper("2F2", [F(3), F(5)], [F(4), F(9)], 0j) == 1
    with pytest.raises(InvalidParameterError):
        series_hyper("3F2", [1, 2, 3], [4, 5], 1j)
    with pytest.raises(InvalidParameterError):
        series_hyper("0F1", [], [F(3, 2)], 1j, tol=-1.0)


def test_fourier_phi_examples():
    assert abs(fourier_phi(1, 0, 0.0).value - 4.0 / 3.0) <= 1e-15
    assert abs(fourier_phi(1, 1, 0.0).value) <= 1e-14
    f = phi_basis(2, 0, 2)
    diff = abs(fourier_phi(1, 0, 1.0).value - quadrature_oracle(f, 1.0))
    assert diff <= 1e-10


def test_fourier_phi_parity_law():
    # even function: real transform; odd function: purely imaginary
    for w in (0.5, 2.0, 11.0):
        v = fourier_phi(2, 0, w).value
        assert abs(v.imag) <= 1e-14
        v = fourier_phi(2, 1, w).value
        assert abs(v.real) <= 1e-14


def test_fourier_l0_examples():
    for n in (2, 3, 5):
        f = l0(n)
        zero = fourier_l0(n, 0.0).value
        assert abs(zero - float(f.integral())) <= 1e-15
        d = abs(fourier_l0(n, 1.0).value - quadrature_oracle(f, 1.0))
        assert d <= 1e-10
    v = fourier_l0(3, 2.5).value
    assert abs(fourier_l0(3, -2.5).value - v.conjugate()) <= 1e-13


def test_fourier_u_examples():
    u = u_function(5, 2).value  # eps=0, m=1, n=2
    assert fourier_u(0, 1, 2, 0.0).value == complex(float(u.integral()), 0.0)
    for w in (0.5, 5.0):
        assert abs(fourier_u(0, 1, 2, w).value - quadrature_oracle(u, w)) <= 1e-9
    # eps = 1 transforms vanish linearly at w = 0
    assert fourier_u(1, 0, 2, 0.0).value == 0
    assert abs(fourier_u(1, 0, 2, 1e-4).value) <= 1e-3
    with pytest.raises(InvalidParameterError):
        fourier_u(2, 0, 2, 1.0)


def test_quadrature_oracle_examples():
    box = PiecewisePoly.from_poly(Poly.one(), -1, 1)
    assert abs(quadrature_oracle(box, math.pi)) <= 1e-12
    ramp = PiecewisePoly.from_poly(Poly.x(), 0, 1)
    assert quadrature_oracle(ramp, 0.0) == 0.5
    f = phi_basis(2, 0, 2)
    assert abs(quadrature_oracle(f, 2.0) - fourier_phi(1, 0, 2.0).value) <= 1e-10
    assert quadrature_oracle(PiecewisePoly.zero(), 3.0) == 0


def test_small_grid_against_oracle():
    for n in (1, 2):
        for eps in (0, 1):
            f = phi_basis(2 * n + eps, 0, 2 * n + eps)
            for w in (0.1, 1.0, 10.0):
                d = abs(fourier_phi(n, eps, w).value - quadrature_oracle(f, w))
                assert d <= 1e-9
