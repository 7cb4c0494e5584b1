"""Classical-character specializations.

The map beta sends Y_a(u)^{+-1} to e^{+-Lambda_a}, forgetting spectral
parameters; with Lambda_a = eps_1 + ... + eps_a everything becomes a
Laurent polynomial in the torus coordinates e^{eps_b}.  Characters of
the rank-n symplectic algebra are evaluated exactly at rational torus
points via the Weyl determinant formula, and hook-shaped instances
chi_{(alpha|gamma)} (width alpha+1, depth gamma+1) drive the
decomposition checks for the hook character family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import LaurentPoly, Y_FAM, Q_FAM

_POOL_NUM = list(range(2, 40))


@dataclass(frozen=True)
class ClassicalPoint:
    """Exact rational values of the torus coordinates e^{eps_b}."""

    values: tuple

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "ClassicalPoint":
        vals = []
        while len(vals) < n:
            v = Fraction(rng.choice(_POOL_NUM), rng.choice(_POOL_NUM))
            if v != 1 and v not in vals and 1 / v not in vals:
                vals.append(v)
        return cls(tuple(vals))

    @classmethod
    def unit(cls, n: int) -> "ClassicalPoint":
        """All coordinates 1; characters evaluate to dimensions."""
        return cls((Fraction(1),) * n)


def beta_eval(p: LaurentPoly, point: ClassicalPoint) -> Fraction:
    """Evaluate the classical image of a Y-polynomial: each Y_a(u+s)
    contributes e^{Lambda_a} = prod_{b<=a} e^{eps_b} regardless of s."""
    total = Fraction(0)
    for key, c in p.terms():
        val = Fraction(c)
        for (fam, idx, half), e in key:
            if fam != Y_FAM:
                raise ValueError("beta acts on Y-variables only")
            for b in range(idx):
                val *= point.values[b] ** e
        total += val
    return total


def det_frac(mat: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    size = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] * inv
            if f:
                for cc in range(col, size):
                    m[r][cc] -= f * m[col][cc]
    return det


def sp_character(lam: list[int], point: ClassicalPoint) -> Fraction:
    """Weyl character formula for the rank-n symplectic algebra at an
    exact torus point: ratio of the two alternants in x_j^{l} - x_j^{-l}.
    """
    n = point.n
    if len(lam) > n:
        raise ValueError("partition deeper than the rank")
    lam = list(lam) + [0] * (n - len(lam))
    ells = [lam[i] + n - i for i in range(n)]  # i = 0..n-1, l = lam_i+n-i
    num = [[point.values[j] ** ells[i] - point.values[j] ** (-ells[i])
            for j in range(n)] for i in range(n)]
    den_ells = [n - i for i in range(n)]
    den = [[point.values[j] ** den_ells[i] - point.values[j] ** (-den_ells[i])
            for j in range(n)] for i in range(n)]
    d = det_frac(den)
    if d == 0:
        raise ZeroDivisionError("degenerate torus point")
    return det_frac(num) / d


def hook_char_value(n: int, alpha: int, gamma: int,
                    point: ClassicalPoint) -> Fraction:
    """chi_{(alpha|gamma)} at a torus point, with the boundary rules
    chi = 0 for gamma <= -1 or gamma >= n or alpha <= -2, and
    chi_{(-1|0)} = 1, chi_{(-1|gamma>=1)} = 0."""
    if gamma <= -1 or gamma >= n or alpha <= -2:
        return Fraction(0)
    if alpha == -1:
        return Fraction(1) if gamma == 0 else Fraction(0)
    lam = [alpha + 1] + [1] * gamma
    return sp_character(lam, point)


def hook_dimension(n: int, alpha: int, gamma: int) -> int:
    """Dimension of the hook module via a torus point near identity
    (limits computed with a generic geometric point)."""
    # evaluate at x_b = t^b for a generic rational t and take no limit:
    # instead use the standard specialization x_b = q^b with q a symbol
    # replaced by an exact rational close to 1 is unstable; use the
    # Weyl dimension formula directly.
    if gamma <= -1 or gamma >= n or alpha <= -2:
        return 0
    if alpha == -1:
        return 1 if gamma == 0 else 0
    lam = [alpha + 1] + [1] * gamma + [0] * (n - 1 - gamma)
    # positive roots of the rank-n symplectic algebra in the eps basis
    rho = [n - i for i in range(n)]
    l = [lam[i] + rho[i] for i in range(n)]
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
        num *= l[i]
        den *= rho[i]
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("dimension formula did not divide evenly")
    return q


@dataclass
class PointReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool):
        self.checks.append({"identity": name, "ok": bool(ok)})

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def verify_pieri(n: int, p_max: int, seed: int, n_points: int = 5) -> PointReport:
    """Tensor-by-row rule: chi_{(p-1|0)} chi_{(0|a-1)} equals the sum of
    the four neighbouring hooks, for p >= 1, 1 <= a <= n."""
    rng = random.Random(seed)
    rep = PointReport()
    pts = [ClassicalPoint.random(n, rng) for _ in range(n_points)]
    for p in range(1, p_max + 1):
        for a in range(1, n + 1):
            ok = True
            for pt in pts:
                lhs = (hook_char_value(n, p - 1, 0, pt)
                       * hook_char_value(n, 0, a - 1, pt))
                rhs = (hook_char_value(n, p, a - 1, pt)
                       + hook_char_value(n, p - 1, a, pt)
                       + hook_char_value(n, p - 1, a - 2, pt)
                       + hook_char_value(n, p - 2, a - 1, pt))
                ok = ok and lhs == rhs
            rep.add(f"row tensor rule p={p} a={a}", ok)
    return rep


def _hook_sum(n: int, terms: list, pt: ClassicalPoint) -> Fraction:
    return sum((Fraction(s) * hook_char_value(n, al, g, pt)
                for s, al, g in terms), Fraction(0))


def hook_decomposition(n: int, i: int, k: int) -> list:
    """Signed hook content (sign, alpha, gamma) of the classical image
    of H^(i)_k for k >= N+1."""
    N = 2 * n + 2
    out = []

    def wedge(alpha, gamma, sign=1):
        j = 0
        while alpha - 2 * j >= min(0, gamma - 1):
            out.append((sign, alpha - 2 * j, gamma))
            j += 1

    def vee(alpha, gamma, sign=1):
        j = 0
        while alpha - 2 * j >= 0:
            out.append((sign, alpha - 2 * j, gamma))
            j += 1

    if i == 0:
        wedge(k - N - 1, 0)
    elif 1 <= i <= n - 1:
        vee(k - N, i - 1)
        vee(k - N - 1, i)
    elif i == n:
        vee(k + 1 - N - 1, n - 1)   # H^(n)_{k-1} convention shifted to k
    elif i == n + 1:
        vee(k - N - 1, n - 1, -1)
    elif n + 2 <= i <= N - 2:
        vee(k - N, N - i - 1, -1)
        vee(k - N - 1, N - i - 2, -1)
    elif i == N - 1:
        wedge(k + 1 - N - 1, 0, -1)  # H^(N-1)_{k-1} = -H^(0)_k image
    else:
        raise ValueError(f"i out of range: {i}")
    return out


def verify_hook_decomposition(n: int, k_min: int, k_max: int, seed: int,
                              n_points: int = 5) -> PointReport:
    """Classical image of every H^(i)_k equals its signed hook-character
    sum at exact random torus points."""
    from .characters import h_poly
    N = 2 * n + 2
    rng = random.Random(seed)
    rep = PointReport()
    pts = [ClassicalPoint.random(n, rng) for _ in range(n_points)]
    for k in range(k_min, k_max + 1):
        for i in range(0, N):
            h = h_poly(n, i, k)
            terms = hook_decomposition(n, i, k)
            ok = all(beta_eval(h, pt) == _hook_sum(n, terms, pt)
                     for pt in pts)
            rep.add(f"hook content of H^({i})_{k}", ok)
    return rep


def verify_fundamental_images(n: int, seed: int,
                              n_points: int = 5) -> PointReport:
    """sigma_i beta(T^(i)_1) = chi_{(0|min(i,N-i)-1)}, vanishing at
    i = n+1."""
    from .characters import fundamental_poly
    N = 2 * n + 2
    rng = random.Random(seed)
    rep = PointReport()
    pts = [ClassicalPoint.random(n, rng) for _ in range(n_points)]
    for i in range(1, N):
        sigma = 1 if i <= n else -1
        f = fundamental_poly(n, i)
        for pt in pts:
            got = sigma * beta_eval(f, pt)
            if i == n + 1:
                want = Fraction(0)
            else:
                want = hook_char_value(n, 0, min(i, N - i) - 1, pt)
            if got != want:
                rep.add(f"classical image of T^({i})_1", False)
                break
        else:
            rep.add(f"classical image of T^({i})_1", True)
    return rep
