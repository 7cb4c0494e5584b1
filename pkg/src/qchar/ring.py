"""Exact sparse Laurent-polynomial arithmetic over Z.

Variables are indexed by (family, node index, half-integer shift).  The
shift is stored as an integer count of half-units so that every argument
occurring in the C/B/D constructions lives on one lattice.  Families:

* ``Y``  -- the basic ring variables Y_a(u+s)
* ``Q``  -- Baxter Q functions Q_a(u+s)
* ``EL`` -- formal exponentials e^{Lambda_a} (no shift)
* ``EE`` -- formal exponentials e^{eps_b} (no shift)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

Y_FAM, Q_FAM, EL_FAM, EE_FAM = 0, 1, 2, 3
FAM_NAMES = {Y_FAM: "Y", Q_FAM: "Q", EL_FAM: "EL", EE_FAM: "EE"}
FAM_CODES = {v: k for k, v in FAM_NAMES.items()}

# A VarKey is (family, index, half_shift); a monomial key is a tuple of
# (VarKey, nonzero exponent) pairs sorted by VarKey.
VarKey = tuple
MonoKey = tuple


def vk(fam: int, idx: int, half: int = 0) -> VarKey:
    if fam in (Y_FAM, Q_FAM) and idx < 1:
        raise ValueError(f"index must be >= 1 for family {FAM_NAMES[fam]}")
    if fam in (EL_FAM, EE_FAM) and half != 0:
        raise ValueError("exponential variables carry no shift")
    return (fam, idx, half)


def _format_shift(half: int) -> str:
    if half == 0:
        return "u"
    sign = "+" if half > 0 else "-"
    h = abs(half)
    if h % 2 == 0:
        return f"u{sign}{h // 2}"
    return f"u{sign}{h}/2"


class LaurentPoly:
    """Canonical sparse Laurent polynomial with integer coefficients.

    Immutable; all operations return fresh objects.  The zero polynomial
    has no terms.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: dict | None = None, _trusted: bool = False):
        if terms is None:
            self._t = {}
        elif _trusted:
            self._t = terms
        else:
            clean = {}
            for key, coeff in terms.items():
                if coeff == 0:
                    continue
                kt = tuple(sorted((k, e) for k, e in key if e != 0))
                clean[kt] = clean.get(kt, 0) + coeff
            self._t = {k: c for k, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        if c == 0:
            return cls()
        return cls({(): int(c)}, _trusted=True)

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.const(1)

    @classmethod
    def var(cls, fam: int, idx: int, half: int = 0, exp: int = 1,
            coeff: int = 1) -> "LaurentPoly":
        if exp == 0:
            return cls.const(coeff)
        key = ((vk(fam, idx, half), exp),)
        if coeff == 0:
            return cls()
        return cls({key: int(coeff)}, _trusted=True)

    @classmethod
    def monomial(cls, coeff: int, exps: dict) -> "LaurentPoly":
        """Build a single term from a {VarKey: exponent} map."""
        if coeff == 0:
            return cls()
        key = tuple(sorted((k, e) for k, e in exps.items() if e != 0))
        return cls({key: int(coeff)}, _trusted=True)

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def n_terms(self) -> int:
        return len(self._t)

    def terms(self) -> Iterator[tuple[MonoKey, int]]:
        return iter(sorted(self._t.items()))

    def coeff_of(self, exps: dict) -> int:
        key = tuple(sorted((k, e) for k, e in exps.items() if e != 0))
        return self._t.get(key, 0)

    def families(self) -> set:
        return {k[0] for key in self._t for k, _ in key}

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._t)
        for key, c in other._t.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._t.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({k: c * other for k, c in self._t.items()},
                               _trusted=True)
        out: dict = {}
        for k1, c1 in self._t.items():
            d1 = dict(k1)
            for k2, c2 in other._t.items():
                if k1 and k2:
                    m = dict(d1)
                    for var, e in k2:
                        s = m.get(var, 0) + e
                        if s:
                            m[var] = s
                        else:
                            del m[var]
                    key = tuple(sorted(m.items()))
                else:
                    key = k1 if k1 else k2
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if len(self._t) != 1:
                raise ValueError("negative power only defined for monomials")
            (key, c), = self._t.items()
            if c not in (1, -1):
                raise ValueError("negative power needs unit coefficient")
            inv = LaurentPoly({tuple((v, -x) for v, x in key): c},
                              _trusted=True)
            return inv ** (-e)
        out = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # -- structural operations ---------------------------------------

    def shift(self, half_delta: int) -> "LaurentPoly":
        """Substitute u -> u + half_delta/2 in every shiftable variable."""
        if half_delta == 0 or not self._t:
            return self
        out = {}
        for key, c in self._t.items():
            nk = tuple(
                (((f, i, h + half_delta) if f in (Y_FAM, Q_FAM) else (f, i, h)), e)
                for (f, i, h), e in key)
            out[nk] = c
        return LaurentPoly(out, _trusted=True)

    def to_q(self, cartan: "CartanData") -> "LaurentPoly":
        """Replace every Y_a(u+s)^e by its Baxter-Q ratio image.

        Rejects input that already contains non-Y variables.
        """
        out = LaurentPoly()
        for key, c in self._t.items():
            term = LaurentPoly.const(c)
            for (f, i, h), e in key:
                if f != Y_FAM:
                    raise ValueError(
                        f"to_q expects Y-variables only, found {FAM_NAMES[f]}")
                th = cartan.pair2(i, i) // 2
                term = term * LaurentPoly.monomial(
                    1, {vk(Q_FAM, i, h - th): e, vk(Q_FAM, i, h + th): -e})
            out = out + term
        return out

    def eval_rational(self, assign: dict) -> Fraction:
        """Exact rational evaluation; every variable must be assigned."""
        total = Fraction(0)
        for key, c in self._t.items():
            val = Fraction(c)
            for var, e in key:
                if var not in assign:
                    f, i, h = var
                    raise KeyError(
                        f"no assignment for {FAM_NAMES[f]}[{i}]({_format_shift(h)})")
                val *= Fraction(assign[var]) ** e
            total += val
        return total

    # -- rendering ----------------------------------------------------

    def text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for key, c in sorted(self._t.items()):
            factors = [str(c)]
            for (f, i, h), e in key:
                name = f"{FAM_NAMES[f]}[{i}]"
                if f in (Y_FAM, Q_FAM):
                    name += f"({_format_shift(h)})"
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append(" * ".join(factors))
        return "  +  ".join(parts)

    def to_json(self) -> list:
        out = []
        for key, c in sorted(self._t.items()):
            out.append({
                "coeff": str(c),
                "vars": [{"fam": FAM_NAMES[f], "idx": i, "half_shift": h,
                          "exp": e} for (f, i, h), e in key],
            })
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()})"


def acc_product(acc: dict, a: "LaurentPoly", b: "LaurentPoly",
                sign: int = 1) -> None:
    """Accumulate sign * a * b into a raw term dict in place.

    Keeps only one large product alive at a time when verifying
    bilinear identities whose two sides mostly cancel.
    """
    for k1, c1 in a._t.items():
        d1 = dict(k1)
        c1s = c1 * sign
        for k2, c2 in b._t.items():
            if k1 and k2:
                m = dict(d1)
                for var, e in k2:
                    s = m.get(var, 0) + e
                    if s:
                        m[var] = s
                    else:
                        del m[var]
                key = tuple(sorted(m.items()))
            else:
                key = k1 if k1 else k2
            s = acc.get(key, 0) + c1s * c2
            if s:
                acc[key] = s
            else:
                del acc[key]


# convenience shorthands used throughout the package and its tests

def Y(idx: int, half: int = 0, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(Y_FAM, idx, half, exp)


def Qv(idx: int, half: int = 0, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(Q_FAM, idx, half, exp)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


@dataclass(frozen=True)
class AlgebraSpec:
    """Which affine series (C, B or D) and its rank."""

    series: str
    n: int

    def __post_init__(self):
        if self.series not in ("C", "B", "D"):
            raise ValueError(f"unknown series {self.series!r}")
        lo = {"C": 2, "B": 2, "D": 3}[self.series]
        if self.n < lo:
            raise ValueError(f"series {self.series} needs rank >= {lo}")

    @property
    def N(self) -> int:
        if self.series != "C":
            raise ValueError("N = 2n+2 is defined for the C series only")
        return 2 * self.n + 2


@dataclass(frozen=True)
class CartanData:
    """Symmetric root pairings (alpha_a | alpha_b), stored doubled.

    ``pair2(a, b)`` returns 2*(alpha_a|alpha_b), which is an integer for
    all three series under the normalizations used here:
    C: (a|a) = 1 + delta_{an};  B: (a|a) = 2 - delta_{an};  D: (a|a) = 2.
    """

    algebra: AlgebraSpec

    def pair2(self, a: int, b: int) -> int:
        n = self.algebra.n
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"node out of range: ({a},{b})")
        if a > b:
            a, b = b, a
        s = self.algebra.series
        if s == "C":
            if a == b:
                return 4 if a == n else 2
            if b == a + 1:
                return -2 if b == n else -1
            return 0
        if s == "B":
            if a == b:
                return 2 if a == n else 4
            return -2 if b == a + 1 else 0
        # D series
        if a == b:
            return 4
        if b == a + 1 and a <= n - 2:
            return -2
        if (a, b) == (n - 2, n):
            return -2
        return 0

    def pairing(self, a: int, b: int) -> Fraction:
        return Fraction(self.pair2(a, b), 2)


# -- letter codes for the ordered alphabet 1 < ... < n < nbar < ... < 1bar

def bar(a: int, n: int) -> int:
    """Code of the barred letter abar; plain a has code a (1..n)."""
    return 2 * n + 1 - a


def is_barred(code: int, n: int) -> bool:
    return code > n


def letter_value(code: int, n: int) -> int:
    """Underlying 1..n value of a letter code."""
    return code if code <= n else 2 * n + 1 - code


def letter_text(code: int, n: int) -> str:
    v = letter_value(code, n)
    return f"{v}~" if is_barred(code, n) else str(v)


def letter_json(code: int, n: int) -> dict:
    return {"bar": is_barred(code, n), "v": letter_value(code, n)}


class VariableTable:
    """Shift templates z_a / z_abar (and x_i, z_0) for one algebra.

    Every template is a LaurentPoly in the Y (or, for the two special
    x-letters of the C series, the Q) representation, normalized so that
    ``half=0`` corresponds to the base point u.
    """

    def __init__(self, algebra: AlgebraSpec):
        self.algebra = algebra
        self.cartan = CartanData(algebra)
        self.n = algebra.n

    # -- C series -----------------------------------------------------

    def z(self, code: int, half: int = 0) -> LaurentPoly:
        """z_letter(u + half/2) in the Y representation."""
        n = self.n
        s = self.algebra.series
        if not (1 <= code <= 2 * n):
            raise ValueError(f"letter code out of range: {code}")
        if s == "C":
            if code <= n:
                a = code
                e = {vk(Y_FAM, a, half + a): 1}
                if a > 1:
                    e[vk(Y_FAM, a - 1, half + a + 1)] = -1
            else:
                a = 2 * n + 1 - code
                e = {vk(Y_FAM, a, half + 2 * n - a + 4): -1}
                if a > 1:
                    e[vk(Y_FAM, a - 1, half + 2 * n - a + 3)] = 1
            return LaurentPoly.monomial(1, e)
        if s == "B":
            return self._z_b(code, half)
        return self._z_d(code, half)

    def _z_b(self, code: int, half: int) -> LaurentPoly:
        n = self.n
        if code <= n - 1:
            a = code
            e = {vk(Y_FAM, a, half + 2 * a): 1}
            if a > 1:
                e[vk(Y_FAM, a - 1, half + 2 * a + 2)] = -1
        elif code == n:
            e = {vk(Y_FAM, n, half + 2 * n + 1): 1,
                 vk(Y_FAM, n, half + 2 * n - 1): 1}
            if n > 1:
                e[vk(Y_FAM, n - 1, half + 2 * n + 2)] = -1
        elif code == n + 1:  # nbar
            e = {vk(Y_FAM, n, half + 2 * n + 3): -1,
                 vk(Y_FAM, n, half + 2 * n + 1): -1}
            if n > 1:
                e[vk(Y_FAM, n - 1, half + 2 * n)] = 1
        else:
            a = 2 * n + 1 - code
            e = {vk(Y_FAM, a, half + 2 * (2 * n - a + 1)): -1}
            if a > 1:
                e[vk(Y_FAM, a - 1, half + 2 * (2 * n - a))] = 1
        return LaurentPoly.monomial(1, e)

    def _z_d(self, code: int, half: int) -> LaurentPoly:
        n = self.n
        if code <= n - 2:
            a = code
            e = {vk(Y_FAM, a, half + 2 * a): 1}
            if a > 1:
                e[vk(Y_FAM, a - 1, half + 2 * a + 2)] = -1
        elif code == n - 1:
            e = {vk(Y_FAM, n, half + 2 * n - 2): 1,
                 vk(Y_FAM, n - 1, half + 2 * n - 2): 1,
                 vk(Y_FAM, n - 2, half + 2 * n): -1}
        elif code == n:
            e = {vk(Y_FAM, n, half + 2 * n - 2): 1,
                 vk(Y_FAM, n - 1, half + 2 * n + 2): -1}
        elif code == n + 1:  # nbar
            e = {vk(Y_FAM, n - 1, half + 2 * n - 2): 1,
                 vk(Y_FAM, n, half + 2 * n + 2): -1}
        elif code == n + 2:  # (n-1)bar
            e = {vk(Y_FAM, n - 2, half + 2 * n): 1,
                 vk(Y_FAM, n, half + 2 * n + 2): -1,
                 vk(Y_FAM, n - 1, half + 2 * n + 2): -1}
        else:
            a = 2 * n + 1 - code
            e = {vk(Y_FAM, a, half + 2 * (2 * n - a)): -1}
            if a > 1:
                e[vk(Y_FAM, a - 1, half + 2 * (2 * n - a - 1))] = 1
        return LaurentPoly.monomial(1, e)

    def z0(self, half: int = 0) -> LaurentPoly:
        if self.algebra.series != "B":
            raise ValueError("z0 exists for the B series only")
        n = self.n
        return LaurentPoly.monomial(
            1, {vk(Y_FAM, n, half + 2 * n - 1): 1,
                vk(Y_FAM, n, half + 2 * n + 3): -1})

    def x_special(self, half: int = 0) -> LaurentPoly:
        """The Q-ratio shared (up to sign) by the two middle x-letters."""
        if self.algebra.series != "C":
            raise ValueError("x-alphabet exists for the C series only")
        n = self.n
        return LaurentPoly.monomial(
            1, {vk(Q_FAM, n, half + n): 1,
                vk(Q_FAM, n, half + n + 4): 1,
                vk(Q_FAM, n, half + n + 2): -2})

    def x(self, i: int, half: int = 0, rep: str = "Q") -> LaurentPoly:
        """x_i(u + half/2), C series; rep is 'Q' or 'Y'.

        The two middle letters are only expressible in Q-variables.
        """
        n = self.n
        N = self.algebra.N
        if not (1 <= i <= N):
            raise ValueError(f"x index out of range: {i}")
        if i == n + 1:
            return self.x_special(half)
        if i == n + 2:
            return -self.x_special(half)
        code = i if i <= n else i - 2  # x_{2n+3-a} = z_abar has code 2n+1-a
        p = self.z(code, half)
        if rep == "Q":
            return p.to_q(self.cartan)
        return p
