"""Column/row tableau generation, the descent map, and cancellation."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qchar.ring import AlgebraSpec, VariableTable, bar
from qchar.tableaux import (pair_ok, gen_column_tableaux, gen_row_tableaux,
                            gen_x_tableaux, tableau_weight, tau_b, sigma_b,
                            gen_V, gen_W, in_V, in_W, in_V_b, tau_full,
                            sigma_full, descent_chain, maximal_breaking_pair,
                            verify_cancellation, tableau_text)


@pytest.mark.parametrize("n,a", [(2, 1), (2, 2), (3, 2), (3, 3), (4, 3)])
def test_column_count(n, a):
    cols = gen_column_tableaux(n, a)
    lower = comb(2 * n, a - 2) if a >= 2 else 0
    assert len(cols) == comb(2 * n, a) - lower
    assert all(len(t) == a and all(1 <= c <= 2 * n for c in t) for t in cols)
    assert all(pair_ok(t, n) for t in cols)


def test_column_condition_rejects_close_pairs():
    # (q, qbar) with too few letters in between breaks admissibility
    n = 2
    assert not pair_ok((2, bar(2, 2)), n)
    assert pair_ok((1, bar(1, 2)), n)


def test_row_block_structure():
    n, m = 2, 3
    rows = gen_row_tableaux(n, m)
    nb = bar(n, n)
    for t in rows:
        # plains, then (nbar, n) pairs, then bars, each weakly increasing
        i = 0
        while i < len(t) and t[i] <= n and (i == 0 or t[i - 1] <= t[i]):
            i += 1
        j = i
        while j + 1 < len(t) and (t[j], t[j + 1]) == (nb, n):
            j += 2
        rest = t[j:]
        assert all(c >= nb for c in rest)
        assert all(rest[k] <= rest[k + 1] for k in range(len(rest) - 1))
    assert len(rows) == len(set(rows))


def test_row_count_matches_operator_inverse():
    # the m-th inverse coefficient of the factorized operator counts
    # exactly the admitted words (n=2, m=3: 24, not the 26 that a purely
    # local adjacency condition would give)
    assert len(gen_row_tableaux(2, 3)) == 24


def test_x_tableaux_are_strict_words():
    xs = gen_x_tableaux(2, 2)
    assert all(len(t) == 2 for t in xs)
    assert len(xs) == len(set(xs))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(1, 4))
def test_weight_is_monomial(n, a):
    a = min(a, n)
    table = VariableTable(AlgebraSpec("C", n))
    for t in gen_column_tableaux(n, a)[:10]:
        w = tableau_weight(t, table, "Z")
        assert w.n_terms == 1


def test_tau_sigma_single_step_inverse():
    n = 3
    for a in range(3, n + 1):
        for t in gen_V(n, a):
            img, p = tau_full(t, n)
            assert in_W(img, n)
            assert sigma_full(img, n) == t


def test_descent_chain_reproduces_known_case():
    # n = a = 9 worked example: five nontrivial steps, stop at p = 4
    start = (3, 5, 7, 9, 9, 10, 11, 12, 16)
    chain, p = descent_chain(start, 9)
    assert p == 4
    assert chain == [
        (3, 5, 7, 9, 9, 10, 11, 12, 16),
        (3, 5, 7, 8, 9, 11, 11, 12, 16),
        (3, 5, 7, 7, 9, 11, 12, 12, 16),
        (3, 5, 6, 6, 9, 11, 13, 13, 16),
        (3, 5, 5, 6, 9, 11, 13, 14, 16),
        (3, 4, 5, 6, 9, 11, 13, 15, 16),
    ]
    q, gap = maximal_breaking_pair(chain[-1], 9)
    assert (q, gap) == (4, 9 - 4)


def test_breaking_pair_gap_rule():
    # the maximal breaking pair (q, qbar) always has exactly n-q letters
    # in between
    n = 4
    for a in range(3, n + 1):
        for s in gen_W(n, a):
            q, gap = maximal_breaking_pair(s, n)
            assert gap == n - q


def test_v_w_membership_predicates():
    n = 3
    V = set(gen_V(n, 3))
    W = set(gen_W(n, 3))
    assert all(in_V(t, n) for t in V)
    assert all(in_W(t, n) for t in W)
    assert not (V & W) or all(in_V_b(t, n, n) for t in V)


@pytest.mark.parametrize("n", [2, 3])
def test_cancellation_small_ranks(n):
    for a in range(1, n + 1):
        rep = verify_cancellation(n, a)
        assert rep.ok, rep.failures
        assert rep.x_equals_admissible and rep.mixed_groups_cancel


def test_report_serialization():
    rep = verify_cancellation(2, 2)
    js = rep.to_json()
    assert js["ok"] and js["n"] == 2 and js["a"] == 2


def test_tableau_text_uses_bars():
    assert tableau_text((1, 2, 3, 4), 2) == "1 2 2~ 1~"
