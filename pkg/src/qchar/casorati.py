"""Exact rational Casorati-determinant verification suite.

A deterministic rational assignment of the Baxter functions Q_a on the
half-integer lattice turns every operator coefficient into an exact
Fraction.  The distinguished triangular solution basis w_m (w_m is
killed by the degree-m right partial product of the factorized
operator, with delta initial data) makes the Casorati minors reproduce
the x-alphabet, the fundamental and hook characters, and the
discrete-Toda solution, all checked at several grid points with zero
tolerance.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import (LaurentPoly, AlgebraSpec, CartanData, VariableTable,
                   Q_FAM, vk)
from .diffop import build_Lj_C
from .classical import det_frac

log = logging.getLogger(__name__)

BIT_GUARD = 200_000


class QAssignment:
    """Deterministic exact rational values for Q_a(u0 + half/2)."""

    def __init__(self, n: int, seed: int):
        self.n = n
        self.seed = seed
        self._cache: dict = {}

    def value(self, a: int, half: int) -> Fraction:
        key = (a, half)
        if key not in self._cache:
            mix = ((self.seed * 1_000_003 + a) * 1_000_003
                   + (half + 500_000))
            rng = random.Random(mix)
            self._cache[key] = Fraction(rng.randint(1, 19),
                                        rng.randint(1, 19))
        return self._cache[key]

    def eval(self, p: LaurentPoly) -> Fraction:
        assign = {}
        for key, _ in p.terms():
            for (fam, idx, half), _e in key:
                if fam != Q_FAM:
                    raise ValueError("assignment covers Q-variables only")
                assign[(fam, idx, half)] = self.value(idx, half)
        return p.eval_rational(assign)


class TriangularBasis:
    """Values w_m(u0 + i), 1 <= m <= N, 0 <= i <= imax, where w_m is
    the forward solution of the order-m partial-product recursion with
    w_m(u0 + i) = delta_{i, m-1} on the initial window."""

    def __init__(self, n: int, qa: QAssignment, imax: int):
        self.n = n
        self.N = 2 * n + 2
        self.qa = qa
        self.imax = imax
        self.w = [None]
        for m in range(1, self.N + 1):
            op = build_Lj_C(n, m)
            coeffs = {j: op.coeff(j) for j in range(m)}
            vals = [Fraction(1) if i == m - 1 else Fraction(0)
                    for i in range(m)]
            for t in range(0, imax - m + 1):
                s = Fraction(0)
                for j, c in coeffs.items():
                    if not c.is_zero:
                        s -= qa.eval(c.shift(2 * t)) * vals[t + j]
                vals.append(s)
            self.w.append(vals)
        top = max(abs(v.numerator).bit_length() + v.denominator.bit_length()
                  for vals in self.w[1:] for v in vals)
        if top > BIT_GUARD:
            log.warning("basis entries reached %d bits", top)

    def casorati(self, indices: tuple, shift: int = 0) -> Fraction:
        """[i_1, ..., i_m] evaluated at u0 + shift."""
        if not indices:
            return Fraction(1)
        if shift + min(indices) < 0:
            raise IndexError("window extends below the solved range")
        m = len(indices)
        mat = [[self.w[j + 1][shift + i] for i in indices]
               for j in range(m)]
        return det_frac(mat)

    def xi(self, a: int, m: int, shift: int = 0) -> Fraction:
        idx = tuple(range(a)) + tuple(range(a + m, self.N + m))
        return self.casorati(idx, shift)


def build_grid(n: int, seed: int, imax: int,
               max_tries: int = 8) -> TriangularBasis:
    """Triangular basis with a non-degenerate reference minor; the seed
    is bumped until [0..N-1] and [1..N] are nonzero at the grid."""
    N = 2 * n + 2
    for t in range(max_tries):
        qa = QAssignment(n, seed + t)
        basis = TriangularBasis(n, qa, imax)
        ok = all(basis.casorati(tuple(range(N)), g) != 0
                 and basis.casorati(tuple(range(1, N + 1)), g) != 0
                 for g in range(0, imax - N - 1))
        if ok:
            if t:
                log.info("degenerate grid; advanced seed by %d", t)
            return basis
        seed_used = seed + t
        log.info("degenerate grid at seed %d, resampling", seed_used)
    raise RuntimeError("could not find a non-degenerate grid")


@dataclass
class GridReport:
    seed: int
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool):
        self.checks.append({"identity": name, "ok": bool(ok)})

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_json(self) -> dict:
        return {"seed": self.seed, "ok": self.ok, "checks": self.checks}


def _eval_char(poly: LaurentPoly, cartan: CartanData, qa: QAssignment,
               half: int) -> Fraction:
    return qa.eval(poly.to_q(cartan).shift(half))


def verify_shift_identity(basis: TriangularBasis, grid: range,
                          rep: GridReport) -> None:
    N = basis.N
    ok = all(basis.casorati(tuple(range(N)), g)
             == -basis.casorati(tuple(range(1, N + 1)), g) for g in grid)
    rep.add("full-window minor changes sign under unit shift", ok)


def verify_weyl_type(n: int, basis: TriangularBasis, grid: range,
                     rep: GridReport) -> None:
    """Fundamental characters as ratios of one-gap Casorati minors."""
    from .characters import fundamental_poly
    N = 2 * n + 2
    cartan = CartanData(AlgebraSpec("C", n))
    for a in range(0, N + 1):
        poly = fundamental_poly(n, a)
        ok = True
        for g in grid:
            num = basis.casorati(
                tuple(range(a)) + tuple(range(a + 1, N + 1)), g)
            den = basis.casorati(tuple(range(1, N + 1)), g)
            ok = ok and _eval_char(poly, cartan, qa=basis.qa,
                                   half=a + 2 * g) == num / den
        rep.add(f"one-gap minor ratio a={a}", ok)


def verify_hook_ratio(n: int, k_max: int, basis: TriangularBasis,
                      grid: range, rep: GridReport) -> None:
    """Hook family H^(i)_k as ratios of a jumped-index minor."""
    from .characters import h_poly
    N = 2 * n + 2
    cartan = CartanData(AlgebraSpec("C", n))
    for k in range(N, k_max + 1):
        for i in range(0, N):
            poly = h_poly(n, i, k)
            ok = True
            for g in grid:
                num = basis.casorati(
                    tuple(range(i)) + tuple(range(i + 1, N)) + (k,), g)
                den = basis.casorati(tuple(range(N)), g)
                ok = ok and _eval_char(poly, cartan, basis.qa,
                                       i + 2 * g) == -num / den
            rep.add(f"hook minor ratio i={i} k={k}", ok)


def verify_x_ratio(n: int, basis: TriangularBasis, grid: range,
                   rep: GridReport) -> None:
    """The Casorati x-alphabet equals the defining x-alphabet on the
    triangular basis."""
    table = VariableTable(AlgebraSpec("C", n))
    N = 2 * n + 2
    for m in range(1, N + 1):
        ok = True
        for g in grid:
            num = (basis.casorati(tuple(range(m)), g)
                   * basis.casorati(tuple(range(2, m + 1)), g))
            den = (basis.casorati(tuple(range(1, m + 1)), g)
                   * basis.casorati(tuple(range(1, m)), g))
            if den == 0:
                ok = False
                break
            ok = ok and basis.qa.eval(table.x(m, 2 * g)) == num / den
        rep.add(f"alphabet ratio m={m}", ok)


def verify_xi_relations(n: int, m_max: int, basis: TriangularBasis,
                        grid: range, rep: GridReport) -> None:
    N = 2 * n + 2
    xi = basis.xi
    go = N // 2  # base offset so dual windows stay inside the grid
    for a in range(1, N):
        for m in range(1, m_max + 1):
            ok = all(
                xi(a, m, g) * xi(a, m, g + 1)
                - xi(a, m + 1, g) * xi(a, m - 1, g + 1)
                - xi(a + 1, m, g) * xi(a - 1, m, g + 1) == 0
                for g in grid)
            rep.add(f"three-term minor exchange a={a} m={m}", ok)
    for a in range(0, N + 1):
        for m in range(0, m_max + 2):
            sign = (-1) ** ((a - N // 2 + m) % 2)
            ok = all(
                xi(a, m, g + go) == sign * xi(N - a, m, g + go + a - N // 2)
                for g in grid)
            rep.add(f"gap duality a={a} m={m}", ok)
    for m in (1, 3):
        ok = all(xi(n + 1, m, g) == 0 for g in grid)
        rep.add(f"odd middle-gap vanishing m={m}", ok)
    for m in range(0, 2):
        ok = all(
            xi(n, 2 * m, g + 1) * xi(n + 2, 2 * m, g)
            == xi(n + 1, 2 * m, g + 1) * xi(n + 1, 2 * m, g)
            for g in grid)
        rep.add(f"even complementary product m={m}", ok)
        ok = all(
            xi(n, 2 * m + 1, g + 1) * xi(n + 2, 2 * m + 1, g)
            == -xi(n + 1, 2 * m, g + 1) * xi(n + 1, 2 * m + 2, g)
            for g in grid)
        rep.add(f"odd complementary product m={m}", ok)


def verify_toda_solution(n: int, m_max: int, basis: TriangularBasis,
                         grid: range, rep: GridReport) -> None:
    """Rectangle characters against gapped-minor ratios, both the direct
    and the dual-gap forms."""
    from .characters import rect_poly
    N = 2 * n + 2
    cartan = CartanData(AlgebraSpec("C", n))
    xi = basis.xi
    go = N // 2
    T = lambda a, m, half, g: _eval_char(rect_poly(n, a, m), cartan,
                                         basis.qa, half + 2 * g)
    for a in range(1, n):
        for m in range(1, m_max + 1):
            ok = all(
                T(a, m, a + m - 1, g)
                == (-1) ** m * xi(a, m, g) / xi(1, 0, g)
                for g in grid)
            rep.add(f"bulk minor ratio a={a} m={m}", ok)
            sign = (-1) ** ((a - N // 2) % 2)
            ok = all(
                T(a, m, a + m - 1, g + go)
                == sign * xi(N - a, m, g + go + a - N // 2)
                / xi(1, 0, g + go)
                for g in grid)
            rep.add(f"bulk dual minor ratio a={a} m={m}", ok)
    for m in range(1, m_max + 1):
        ok = all(
            T(n, m, n + 2 * m, g) * T(n, m, n + 2 * m - 2, g)
            == xi(n, 2 * m, g) / xi(1, 0, g) for g in grid)
        rep.add(f"long-node even minor ratio m={m}", ok)
        ok = all(
            T(n, m, n + 2 * m, g) * T(n, m + 1, n + 2 * m, g)
            == xi(n, 2 * m + 1, g) / xi(1, 0, g + 1) for g in grid)
        rep.add(f"long-node odd minor ratio m={m}", ok)
        ok = all(
            T(n, m, n + 2 * m, g) ** 2
            == xi(n + 1, 2 * m, g) / xi(1, 0, g) for g in grid)
        rep.add(f"long-node square minor ratio m={m}", ok)
        ok = all(
            T(n, m, n + 2 * m, g + 1) * T(n, m, n + 2 * m - 2, g + 1)
            == xi(n + 2, 2 * m, g) / xi(1, 0, g + 2)
            for g in grid)
        rep.add(f"long-node even dual ratio m={m}", ok)
        ok = all(
            T(n, m, n + 2 * m, g + 1) * T(n, m + 1, n + 2 * m, g + 1)
            == xi(n + 2, 2 * m + 1, g) / xi(1, 0, g + 2)
            for g in grid)
        rep.add(f"long-node odd dual ratio m={m}", ok)


# ---------------------------------------------------------------------
# ninth-variation skew Schur identities
# ---------------------------------------------------------------------

def mu_from_indices(indices: tuple) -> list:
    """Partition mu with mu_j = i_{N-j} + j - N from strictly increasing
    indices (i_0=0, ..., i_{N-1})."""
    N = len(indices)
    mu = [indices[N - j] + j - N for j in range(1, N + 1)]
    if any(m < 0 for m in mu) or any(
            mu[j] < mu[j + 1] for j in range(N - 1)):
        raise ValueError("indices do not define a partition")
    return mu


def transpose(mu: list) -> list:
    if not mu or mu[0] == 0:
        return []
    return [sum(1 for m in mu if m >= c) for c in range(1, mu[0] + 1)]


def skew_ssyt(N: int, width: int, mu: list):
    """Semistandard fillings of (width^N)/mu with entries 1..N; rows
    weakly increase, columns strictly increase downward."""
    mu = list(mu) + [0] * (N - len(mu))
    rows = [list(range(mu[r], width)) for r in range(N)]
    cells = [(r, c) for r in range(N) for c in rows[r]]
    filling: dict = {}

    def fill(pos: int):
        if pos == len(cells):
            yield dict(filling)
            return
        r, c = cells[pos]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, N + 1):
            filling[(r, c)] = v
            yield from fill(pos + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def _ssyt_sum(N: int, width: int, mu: list, letter_value) -> Fraction:
    """Sum over skew fillings of products letter_value(entry, shift)
    with shift = alpha + beta - 2, alpha counted from the bottom row."""
    total = Fraction(0)
    for t in skew_ssyt(N, width, mu):
        prod = Fraction(1)
        for (r, c), v in t.items():
            alpha = N - r
            beta = c + 1
            prod *= letter_value(v, alpha + beta - 2)
        total += prod
    return total


def _e_sum(N: int, a: int, base: int, letter_value) -> Fraction:
    """Elementary sum over strict index choices: the a-column weight
    with k-th letter at integer shift base + 1 - k."""
    if a < 0 or a > N:
        return Fraction(0)
    total = Fraction(0)
    for combo in itertools.combinations(range(1, N + 1), a):
        prod = Fraction(1)
        for k, i in enumerate(combo, start=1):
            prod *= letter_value(i, base + 1 - k)
        total += prod
    return total


def verify_free_skew_lemma(N: int, index_sets: list, seed: int,
                           rep: GridReport) -> None:
    """The ninth-variation identity on an unconstrained random table:
    minor ratio = skew tableau sum = elementary determinant."""
    rng = random.Random(seed)
    width_pad = 2
    for indices in index_sets:
        mu = mu_from_indices(indices)
        width = max(indices[-1] - N + 1, 1) + width_pad
        imax = width + 2 * N
        table = [[Fraction(rng.randint(1, 19), rng.randint(1, 19))
                  for _ in range(imax + 1)] for _ in range(N)]

        def cas(idx, shift=0):
            return det_frac([[table[j][shift + i] for i in idx]
                             for j in range(len(idx))])

        xt_cache: dict = {}

        def xt(m, shift):
            if (m, shift) not in xt_cache:
                num = cas(tuple(range(m)), shift) * cas(
                    tuple(range(2, m + 1)), shift)
                den = cas(tuple(range(1, m + 1)), shift) * cas(
                    tuple(range(1, m)), shift)
                xt_cache[(m, shift)] = num / den
            return xt_cache[(m, shift)]

        lhs = cas(indices) / cas(tuple(range(width, width + N)))
        ssyt = _ssyt_sum(N, width, mu, xt)
        mup = transpose(mu) + [0] * width
        mat = [[_e_sum(N, N - mup[j - 1] - l + j, N - 2 + j - mup[j - 1], xt)
                for l in range(1, width + 1)] for j in range(1, width + 1)]
        dt = det_frac(mat)
        rep.add(f"free skew identity {list(indices)}",
                lhs == ssyt == dt)


def verify_skew_on_basis(n: int, index_sets: list, basis: TriangularBasis,
                         grid: range, rep: GridReport) -> None:
    """On the triangular basis the same ratio carries the sign
    (-1)^{mu_1} and its determinant form uses fundamentals."""
    from .characters import fundamental_poly
    N = 2 * n + 2
    cartan = CartanData(AlgebraSpec("C", n))
    table = VariableTable(AlgebraSpec("C", n))
    for indices in index_sets:
        mu = mu_from_indices(indices)
        mu1 = mu[0]
        mup = transpose(mu) + [0] * max(0, mu1 - len(transpose(mu)))
        ok = True
        for g in grid:
            lhs = (basis.casorati(indices, g)
                   / basis.casorati(tuple(range(N)), g))
            xval = lambda m, shift: basis.qa.eval(
                table.x(m, 2 * (shift + g)))
            ssyt = ((-1) ** mu1) * _ssyt_sum(N, mu1, mu, xval)
            mat = [[_eval_char(
                fundamental_poly(n, mup[j - 1] - j + l), cartan, basis.qa,
                N - 2 + j + l - mup[j - 1] + 2 * g)
                for l in range(1, mu1 + 1)] for j in range(1, mu1 + 1)]
            dt = det_frac(mat)
            ok = ok and lhs == ssyt == dt
        rep.add(f"basis skew identity {list(indices)}", ok)


def run_suite(n: int, seed: int, grid_points: int = 3,
              m_max: int = 2) -> GridReport:
    """Full exact-rational verification sweep for one rank."""
    N = 2 * n + 2
    k_max = N + 3
    imax = 2 * N + 2 * m_max + grid_points + 4
    rep = GridReport(seed=seed)
    basis = build_grid(n, seed, imax)
    grid = range(0, grid_points)
    verify_shift_identity(basis, grid, rep)
    verify_weyl_type(n, basis, grid, rep)
    verify_hook_ratio(n, k_max, basis, grid, rep)
    verify_x_ratio(n, basis, grid, rep)
    verify_xi_relations(n, m_max, basis, grid, rep)
    verify_toda_solution(n, m_max, basis, grid, rep)
    sets = default_index_sets(n)
    verify_free_skew_lemma(N, sets, seed, rep)
    verify_skew_on_basis(n, sets, basis, grid, rep)
    return rep


def default_index_sets(n: int) -> list:
    N = 2 * n + 2
    base = tuple(range(N))
    sets = [
        tuple(range(N - 1)) + (N + 1,),
        (0,) + tuple(range(2, N)) + (N,),
        base[:1] + base[2:N - 1] + (N - 1, N + 1),
    ]
    if n == 2:
        sets.append((0, 1, 3, 4, 6, 7))
    return sets
