"""Difference-operator algebra and the factorized C-series operator."""

import pytest

from qchar.ring import AlgebraSpec, CartanData, Y, ONE
from qchar.diffop import (DiffOp, EpsilonChoice, build_L_C, build_Lj_C,
                          extract_e, prod, L_FORMS)
from qchar.characters import fundamental_poly


def test_mul_shifts_right_factor():
    a = DiffOp({1: ONE})              # D
    b = DiffOp({0: Y(1, 0)})          # Y_1(u)
    assert (a * b).coeff(1) == Y(1, 2)
    assert (b * a).coeff(1) == Y(1, 0)


def test_mul_is_associative_on_factors():
    f = [DiffOp({0: ONE, 1: Y(1, 2 * i)}) for i in range(3)]
    assert (f[0] * f[1]) * f[2] == f[0] * (f[1] * f[2])
    assert prod(f) == f[0] * f[1] * f[2]


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("sign", [1, -1])
def test_four_forms_agree_up_to_sign(n, sign):
    cartan = CartanData(AlgebraSpec("C", n))
    eps = EpsilonChoice(sign)
    x = build_L_C(n, "xFactored", eps)
    for form in ("zFactored", "zReversed"):
        z = build_L_C(n, form, eps).map_coeffs(lambda c: c.to_q(cartan))
        assert z == -x
    assert build_L_C(n, "xReversed", eps) == -x


def test_operator_degree_and_constant_term():
    L = build_L_C(2)
    N = 6
    assert L.degree == N
    assert L.coeff(0) == -ONE


@pytest.mark.parametrize("n", [2, 3])
def test_coefficients_are_fundamentals(n):
    cartan = CartanData(AlgebraSpec("C", n))
    Lz = build_L_C(n, "zFactored")          # equals -L, Y-representation
    Lx = build_L_C(n, "xFactored")          # equals +L, Q-representation
    N = 2 * n + 2
    for a in range(0, N + 1):
        fund = fundamental_poly(n, a)
        assert Lz.coeff(a) == ((-1) ** a) * fund.shift(a)
        assert extract_e(Lx, a) == fund.to_q(cartan)


def test_full_partial_product_recovers_operator():
    n = 2
    N = 2 * n + 2
    L = build_L_C(n)
    assert build_Lj_C(n, N) == L


def test_inverse_series_two_sided():
    L = build_L_C(2)
    inv = L.inverse_series(6)
    assert L * inv == DiffOp.unit(6)
    assert inv * L == DiffOp.unit(6)


def test_inverse_requires_unit_constant():
    with pytest.raises(ValueError):
        DiffOp({0: Y(1, 0)}).inverse_series(4)


def test_truncation_is_enforced():
    t = DiffOp({0: ONE, 1: Y(1, 0)}, order=3)
    sq = t * t * t * t * t
    assert sq.degree <= 3


def test_epsilon_choice_validation():
    with pytest.raises(ValueError):
        EpsilonChoice(0)
    e = EpsilonChoice(-1)
    n = 3
    assert e.eps(n + 1, n) == -1 and e.eps(n + 2, n) == -1
    assert e.eps(1, n) == 1 and e.eps(2 * n + 2, n) == 1


def test_unknown_form_rejected():
    with pytest.raises(ValueError):
        build_L_C(2, "diagonal")
    assert set(L_FORMS) == {"zFactored", "zReversed", "xFactored",
                            "xReversed"}
