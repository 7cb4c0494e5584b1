"""Classical specialization: symplectic characters at exact points."""

import random
from fractions import Fraction

import pytest

from qchar.ring import Y
from qchar.classical import (ClassicalPoint, beta_eval, det_frac,
                             sp_character, hook_char_value, hook_dimension,
                             verify_pieri, verify_hook_decomposition,
                             verify_fundamental_images, hook_decomposition)


def test_det_frac_known():
    m = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert det_frac(m) == Fraction(-2)
    assert det_frac([[Fraction(1), Fraction(2)],
                     [Fraction(2), Fraction(4)]]) == 0


def test_beta_forgets_spectral_parameter():
    pt = ClassicalPoint((Fraction(2), Fraction(3)))
    assert beta_eval(Y(1, 0), pt) == beta_eval(Y(1, 7), pt) == Fraction(2)
    assert beta_eval(Y(2, 3), pt) == Fraction(6)
    with pytest.raises(ValueError):
        from qchar.ring import Qv
        beta_eval(Qv(1, 0), pt)


def test_character_at_unit_point_is_dimension():
    # near-unit evaluation is ill-conditioned for the alternant, so the
    # dimension comes from the product formula instead
    assert hook_dimension(2, 0, 0) == 4          # defining rep of C_2
    assert hook_dimension(2, 0, 1) == 5          # Lambda_2 fundamental
    assert hook_dimension(2, 1, 0) == 10         # adjoint
    assert hook_dimension(2, -1, 0) == 1
    assert hook_dimension(2, 1, -1) == 0


def test_character_weyl_vs_dimension_consistency():
    rng = random.Random(5)
    pt = ClassicalPoint.random(2, rng)
    # chi values are symmetric under inverting any coordinate
    inv = ClassicalPoint(tuple(1 / v for v in pt.values))
    for lam in ([1], [1, 1], [2], [2, 1]):
        assert sp_character(lam, pt) == sp_character(lam, inv)


def test_hook_boundary_rules():
    pt = ClassicalPoint((Fraction(2), Fraction(3)))
    assert hook_char_value(2, -1, 0, pt) == 1
    assert hook_char_value(2, -1, 1, pt) == 0
    assert hook_char_value(2, 3, -1, pt) == 0
    assert hook_char_value(2, 3, 2, pt) == 0
    assert hook_char_value(2, -2, 0, pt) == 0


@pytest.mark.parametrize("n", [2, 3])
def test_pieri(n):
    rep = verify_pieri(n, 3, seed=11)
    assert rep.ok, [c for c in rep.checks if not c["ok"]]


@pytest.mark.parametrize("n", [2, 3])
def test_hook_decomposition(n):
    N = 2 * n + 2
    rep = verify_hook_decomposition(n, N + 1, N + 2, seed=11, n_points=3)
    assert rep.ok, [c for c in rep.checks if not c["ok"]]


@pytest.mark.parametrize("n", [2, 3])
def test_fundamental_images(n):
    rep = verify_fundamental_images(n, seed=11)
    assert rep.ok, [c for c in rep.checks if not c["ok"]]


def test_dimension_instance_16():
    # the product of the two 4-dimensional representations at rank 2:
    # 4 x 4 = 10 + 5 + 1 via the four-hook sum at p = a = 1
    dims = [hook_dimension(2, al, g) for _, al, g in
            [(1, 1, 0), (1, 0, 1), (1, 0, -1), (1, -1, 0)]]
    assert dims == [10, 5, 0, 1]
    assert hook_dimension(2, 0, 0) ** 2 == sum(dims)


def test_decomposition_signs():
    terms = hook_decomposition(2, 5, 7)
    assert all(s == -1 for s, _, _ in terms)
    terms = hook_decomposition(2, 1, 7)
    assert all(s == 1 for s, _, _ in terms)
