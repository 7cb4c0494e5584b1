"""Screening operators acting on Y-variable Laurent polynomials.

S_a sends Y_b(v) to delta_ab Y_b(v) S_b(v) and extends by the Leibniz
rule, so on a monomial M it yields sum_v e_v M S_a(v), where e_v is the
exponent of Y_a(v) in M.  The symbols S_a(v) satisfy a shift relation
with period t_a = (alpha_a|alpha_a): moving the argument by t_a costs a
factor A_a expressed through Baxter Q ratios.  Kernel membership is
decided by rewriting every symbol to the minimal representative of its
residue class and checking that all coefficients cancel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ring import (LaurentPoly, CartanData, Q_FAM, vk, ZERO)
from .diffop import DiffOp


def a_factor(cartan: CartanData, a: int, half: int) -> LaurentPoly:
    """The shift-relation multiplier A_a at half-argument ``half``:
    prod_b Q_b(. - (alpha_a|alpha_b)) / Q_b(. + (alpha_a|alpha_b))."""
    exps: dict = {}
    for b in range(1, cartan.algebra.n + 1):
        p = cartan.pair2(a, b)
        if p == 0:
            continue
        for key, e in ((vk(Q_FAM, b, half - p), 1),
                       (vk(Q_FAM, b, half + p), -1)):
            exps[key] = exps.get(key, 0) + e
    return LaurentPoly.monomial(1, exps)


def apply_screening(a: int, p: LaurentPoly,
                    cartan: CartanData) -> dict:
    """S_a applied to a Y-polynomial.

    Returns {half_argument: coefficient} with coefficients already in
    the Q-representation, one entry per symbol argument encountered.
    """
    out: dict = {}
    for key, c in p.terms():
        mono = LaurentPoly.monomial(c, dict(key)).to_q(cartan)
        for (fam, idx, half), e in key:
            if fam != 0 or idx != a:
                continue
            prev = out.get(half, ZERO)
            out[half] = prev + e * mono
    return {h: v for h, v in out.items() if not v.is_zero}


def canonicalize(a: int, sym: dict, cartan: CartanData) -> dict:
    """Rewrite every S_a(v) to the smallest argument in its residue
    class modulo the period t_a, multiplying by the telescoping product
    of A_a factors, then recombine."""
    t = cartan.pair2(a, a)
    classes: dict = {}
    for half in sym:
        classes.setdefault(half % t, []).append(half)
    out: dict = {}
    for r, halves in classes.items():
        v0 = min(halves)
        acc = ZERO
        for v in halves:
            chain = LaurentPoly.one()
            steps = (v - v0) // t
            for s in range(steps):
                chain = chain * a_factor(cartan, a, v0 + s * t + t // 2)
            acc = acc + sym[v] * chain
        if not acc.is_zero:
            out[v0] = acc
    return out


def screen_poly(a: int, p: LaurentPoly, cartan: CartanData) -> dict:
    return canonicalize(a, apply_screening(a, p, cartan), cartan)


def in_kernel(a: int, p: LaurentPoly, cartan: CartanData) -> bool:
    return not screen_poly(a, p, cartan)


@dataclass
class KernelReport:
    target: str
    node_a: int
    per_degree: list = field(default_factory=list)

    @property
    def zero(self) -> bool:
        return all(d["residual_term_count"] == 0 for d in self.per_degree)

    def to_json(self) -> dict:
        return {"target": self.target, "node_a": self.node_a,
                "per_degree": self.per_degree, "zero": self.zero}


def screen_operator(a: int, op: DiffOp, cartan: CartanData,
                    target: str = "operator") -> KernelReport:
    """Apply S_a coefficientwise to a difference operator with
    Y-variable coefficients and report residuals per D-degree."""
    rep = KernelReport(target=target, node_a=a)
    for deg in sorted(op.coeffs):
        res = screen_poly(a, op.coeff(deg), cartan)
        count = sum(v.n_terms for v in res.values())
        rep.per_degree.append({"deg": deg, "residual_term_count": count})
    return rep
