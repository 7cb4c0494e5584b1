"""Tableau enumeration and the weight-preserving cancellation bijection.

Letters of the ordered alphabet 1 < ... < n < nbar < ... < 1bar are
encoded as integers 1..2n with bar(a) = 2n+1-a.  The x-alphabet of the
C series is encoded as plain integers 1..N = 2n+2.  Tableaux are plain
tuples of letter codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .ring import (LaurentPoly, VariableTable, AlgebraSpec, CartanData,
                   bar, is_barred, letter_value, letter_text)


# ---------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------

def pair_ok(t: tuple, n: int) -> bool:
    """Check the column condition: whenever t_k = c and t_l = cbar
    (1-based k < l), n + k - l >= c must hold."""
    for k in range(len(t)):
        if is_barred(t[k], n):
            continue
        c = t[k]
        cb = bar(c, n)
        for l in range(k + 1, len(t)):
            if t[l] == cb and n + (k + 1) - (l + 1) < c:
                return False
    return True


def strictly_increasing(t: tuple) -> bool:
    return all(t[i] < t[i + 1] for i in range(len(t) - 1))


# ---------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------

def gen_column_tableaux(n: int, a: int) -> list[tuple]:
    """Strictly increasing admissible columns of length a; their count
    is C(2n,a) - C(2n,a-2)."""
    if not (0 <= a <= n):
        raise ValueError(f"column length out of range: {a}")
    out = [t for t in combinations(range(1, 2 * n + 1), a) if pair_ok(t, n)]
    assert len(out) == comb(2 * n, a) - (comb(2 * n, a - 2) if a >= 2 else 0)
    return out


def gen_row_tableaux(n: int, m: int) -> list[tuple]:
    """Length-m rows of block shape: a weakly increasing run of plain
    letters, then k adjacent (nbar, n) descent pairs, then a weakly
    increasing run of barred letters.

    This is the word set produced by expanding the inverse of the
    factorized operator (geometric series of the plain factors, the
    degree-2 middle factor, then the barred factors), which is strictly
    smaller than allowing arbitrary (nbar, n) descents once rows reach
    length 3.
    """
    if m < 0:
        raise ValueError("row length must be >= 0")
    nb = bar(n, n)
    out: list[tuple] = []

    def plains(r: int):
        if r == 0:
            yield ()
            return
        for t in _weak(n, r, 1, n):
            yield t

    def bars(s: int):
        if s == 0:
            yield ()
            return
        for t in _weak(n, s, nb, 2 * n):
            yield t

    for k in range(0, m // 2 + 1):
        mid = (nb, n) * k
        for r in range(0, m - 2 * k + 1):
            s = m - 2 * k - r
            for left in plains(r):
                for right in bars(s):
                    out.append(left + mid + right)
    return out


def _weak(n: int, length: int, lo: int, hi: int):
    """Weakly increasing words of a given length over [lo, hi]."""
    if length == 0:
        yield ()
        return
    for c in range(lo, hi + 1):
        for rest in _weak(n, length - 1, c, hi):
            yield (c,) + rest


def gen_x_tableaux(n: int, a: int) -> list[tuple]:
    """Strictly increasing sequences over the x-alphabet 1..N."""
    N = 2 * n + 2
    if not (0 <= a <= N):
        raise ValueError(f"x-column length out of range: {a}")
    return list(combinations(range(1, N + 1), a))


# ---------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------

def tableau_weight(t: tuple, table: VariableTable, convention: str = "Z",
                   base_half: int = 0) -> LaurentPoly:
    """Staggered product weight: the k-th letter (1-based) contributes
    its template at u + base_half/2 + 1 - k.

    Convention 'Z' reads letters from the barred alphabet (Y-variables),
    'X' from the x-alphabet (Q-variables, middle letters signed).
    """
    w = LaurentPoly.one()
    for k, code in enumerate(t, start=1):
        h = base_half + 2 * (1 - k)
        if convention == "Z":
            w = w * table.z(code, h)
        elif convention == "X":
            w = w * table.x(code, h, rep="Q")
        else:
            raise ValueError(f"unknown convention {convention!r}")
    return w


# ---------------------------------------------------------------------
# the pair-lowering maps tau_b / sigma_b
# ---------------------------------------------------------------------

def _matched_pairs(t: tuple, n: int, b: int) -> list[tuple[int, int]]:
    """Positions (k, l), 0-based, of (b, bbar) pairs separated by
    exactly n - b + 1 letters."""
    gap = n - b + 1
    bb = bar(b, n)
    out = []
    for k, c in enumerate(t):
        l = k + gap + 1
        if c == b and l < len(t) and t[l] == bb:
            out.append((k, l))
    return out


def tau_b(t: tuple, n: int, b: int) -> tuple:
    """Lower every (b, bbar) pair at separation n-b+1 to
    (b-1, (b-1)bar); identity when no pair matches."""
    if not (2 <= b <= n):
        raise ValueError(f"b out of range: {b}")
    pairs = _matched_pairs(t, n, b)
    if not pairs:
        return t
    out = list(t)
    for k, l in pairs:
        out[k] = b - 1
        out[l] = bar(b - 1, n)
    return tuple(out)


def sigma_b(t: tuple, n: int, b: int) -> tuple:
    """Raise every (b-1, (b-1)bar) pair at separation n-b+1 back to
    (b, bbar); inverse step of tau_b."""
    if not (3 <= b <= n):
        raise ValueError(f"b out of range: {b}")
    gap = n - b + 1
    c = b - 1
    cb = bar(c, n)
    pairs = []
    for k, v in enumerate(t):
        l = k + gap + 1
        if v == c and l < len(t) and t[l] == cb:
            pairs.append((k, l))
    if not pairs:
        return t
    out = list(t)
    for k, l in pairs:
        out[k] = b
        out[l] = bar(b, n)
    return tuple(out)


# ---------------------------------------------------------------------
# the sets V and W
# ---------------------------------------------------------------------

def gen_V(n: int, a: int) -> list[tuple]:
    """Arrays (i_1 < ... < i_k <= n, n, nbar, j_1 < ... < j_{a-2-k})
    with plain prefix and barred suffix."""
    nb = bar(n, n)
    out = set()
    for k in range(0, a - 1):
        for pre in combinations(range(1, n + 1), k):
            for suf in combinations(range(nb, 2 * n + 1), a - 2 - k):
                out.add(pre + (n, nb) + suf)
    return sorted(out)


def gen_W(n: int, a: int) -> list[tuple]:
    """Strictly increasing arrays breaking the column condition."""
    return [t for t in combinations(range(1, 2 * n + 1), a)
            if not pair_ok(t, n)]


def in_V(t: tuple, n: int) -> bool:
    plains = [c for c in t if not is_barred(c, n)]
    bars = [c for c in t if is_barred(c, n)]
    if tuple(t) != tuple(plains + bars):
        return False
    if not plains or plains[-1] != n:
        return False
    if not bars or bars[0] != bar(n, n):
        return False
    return strictly_increasing(tuple(plains[:-1])) and \
        strictly_increasing(tuple(bars[1:]))


def in_W(t: tuple, n: int) -> bool:
    return strictly_increasing(t) and not pair_ok(t, n)


def in_Vlm_b(t: tuple, n: int, b: int, l: int, m: int) -> bool:
    """Exact predicate for the graded subsets of V used in the descent
    analysis: l copies of b, m copies of bbar, with the position and
    partial-admissibility conditions (A), (B), (C)."""
    if not (2 <= b <= n):
        return False
    if (l, m) == (0, 0) or abs(l - m) > 1 or l < 0 or m < 0:
        return False
    bb = bar(b, n)
    if sum(1 for c in t if c == b) != l or sum(1 for c in t if c == bb) != m:
        return False
    # split: prefix < b, run of b's, middle strictly between b and bbar,
    # run of bbar's, suffix > bbar
    i = 0
    while i < len(t) and t[i] < b:
        i += 1
    pre = t[:i]
    j = i
    while j < len(t) and t[j] == b:
        j += 1
    if j - i != l:
        return False
    k = j
    while k < len(t) and b < t[k] < bb:
        k += 1
    mid = t[j:k]
    r = k
    while r < len(t) and t[r] == bb:
        r += 1
    if r - k != m:
        return False
    suf = t[r:]
    if any(c <= bb for c in suf):
        return False
    if not (strictly_increasing(pre) and strictly_increasing(mid)
            and strictly_increasing(suf)):
        return False
    beta = len(mid)
    # (B): the column condition restricted to the middle segment
    for rr in range(beta):
        d = mid[rr]
        if is_barred(d, n) or not (b < d <= n):
            continue
        db = bar(d, n)
        for ss in range(rr + 1, beta):
            if mid[ss] == db and n + (rr + 1) - (ss + 1) < d:
                return False
    # (C): one of the four run-length patterns
    c1 = l == m >= 1 and l + beta == n - b + 1
    c2 = l == m >= 1 and l + beta == n - b + 2
    c3 = l == m + 1 >= 1 and l + beta == n - b + 2
    c4 = l == m - 1 >= 0 and l + beta == n - b + 1
    return c1 or c2 or c3 or c4


def in_V_b(t: tuple, n: int, b: int) -> bool:
    bb = bar(b, n)
    l = sum(1 for c in t if c == b)
    m = sum(1 for c in t if c == bb)
    return in_Vlm_b(t, n, b, l, m)


def membership(t: tuple, n: int, which: str, b: int | None = None,
               l: int | None = None, m: int | None = None) -> bool:
    if which == "V":
        return in_V(t, n)
    if which == "W":
        return in_W(t, n)
    if which == "V_b":
        return in_V_b(t, n, b)
    if which == "V_b^{l,m}":
        return in_Vlm_b(t, n, b, l, m)
    raise ValueError(f"unknown set {which!r}")


# ---------------------------------------------------------------------
# the full descent map and its inverse
# ---------------------------------------------------------------------

def tau_full(t: tuple, n: int) -> tuple[tuple, int]:
    """Apply tau_n, tau_{n-1}, ... until a step acts trivially; returns
    the image (which lies in W) and the stopping index p."""
    if not in_V(t, n):
        raise ValueError(f"tableau not in V: {t}")
    cur = t
    for d in range(n, 1, -1):
        nxt = tau_b(cur, n, d)
        if nxt == cur:
            return cur, d
        cur = nxt
    raise AssertionError(f"descent did not terminate for {t}")


def descent_chain(t: tuple, n: int) -> tuple[list[tuple], int]:
    """All intermediate tableaux of the descent map, starting from t,
    one entry per nontrivial step, plus the stopping index p."""
    if not in_V(t, n):
        raise ValueError(f"tableau not in V: {t}")
    chain = [t]
    cur = t
    for d in range(n, 1, -1):
        nxt = tau_b(cur, n, d)
        if nxt == cur:
            return chain, d
        chain.append(nxt)
        cur = nxt
    raise AssertionError(f"descent did not terminate for {t}")


def maximal_breaking_pair(t: tuple, n: int) -> tuple[int, int]:
    """Largest q whose (q, qbar) pair breaks the column condition, and
    the letter count between the two entries."""
    if not in_W(t, n):
        raise ValueError(f"tableau not in W: {t}")
    best = None
    for k in range(len(t)):
        c = t[k]
        if is_barred(c, n):
            continue
        cb = bar(c, n)
        for l in range(k + 1, len(t)):
            if t[l] == cb and n + (k + 1) - (l + 1) < c:
                if best is None or c > best[0]:
                    best = (c, l - k - 1)
    assert best is not None
    return best


def sigma_full(s: tuple, n: int) -> tuple:
    """Inverse of tau_full: raise from the maximal breaking pair back
    up to (n, nbar)."""
    p, _ = maximal_breaking_pair(s, n)
    cur = s
    for b in range(p + 1, n + 1):
        cur = sigma_b(cur, n, b)
    return cur


# ---------------------------------------------------------------------
# cancellation verification
# ---------------------------------------------------------------------

@dataclass
class CancellationReport:
    n: int
    a: int
    x_term_count: int = 0
    admissible_count: int = 0
    x_equals_admissible: bool = False
    mixed_groups_cancel: bool = False
    bijection_ok: bool = True
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.x_equals_admissible and self.mixed_groups_cancel
                and self.bijection_ok)

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a,
                "x_term_count": self.x_term_count,
                "admissible_count": self.admissible_count,
                "x_equals_admissible": self.x_equals_admissible,
                "mixed_groups_cancel": self.mixed_groups_cancel,
                "bijection_ok": self.bijection_ok,
                "failures": self.failures, "ok": self.ok}


def verify_cancellation(n: int, a: int) -> CancellationReport:
    """Three independent confirmations that the signed x-sum collapses
    to the admissible column sum."""
    if not (1 <= a <= n):
        raise ValueError(f"a out of range: {a}")
    rep = CancellationReport(n=n, a=a)
    table = VariableTable(AlgebraSpec("C", n))
    cartan = table.cartan

    # (i) signed x-sum equals the admissible z-sum, in Q-representation
    xsum = LaurentPoly.zero()
    mixed = LaurentPoly.zero()
    for t in gen_x_tableaux(n, a):
        w = tableau_weight(t, table, "X")
        xsum = xsum + w
        if ((n + 1) in t) != ((n + 2) in t):
            mixed = mixed + w
    zsum = LaurentPoly.zero()
    for t in gen_column_tableaux(n, a):
        zsum = zsum + tableau_weight(t, table, "Z")
    zsum_q = zsum.to_q(cartan)
    rep.x_term_count = xsum.n_terms
    rep.admissible_count = len(gen_column_tableaux(n, a))
    rep.x_equals_admissible = xsum == zsum_q
    if not rep.x_equals_admissible:
        rep.failures.append("signed x-sum != admissible z-sum")

    # (ii) the two mixed groups (exactly one middle letter) cancel
    rep.mixed_groups_cancel = mixed.is_zero
    if not rep.mixed_groups_cancel:
        rep.failures.append("mixed middle-letter groups do not cancel")

    # (iii) the descent map is a weight-preserving bijection V -> W
    if a >= 3:
        V = gen_V(n, a)
        W = gen_W(n, a)
        images = {}
        for t in V:
            img, p = tau_full(t, n)
            wt_t = tableau_weight(t, table, "Z")
            wt_i = tableau_weight(img, table, "Z")
            if wt_t != wt_i:
                rep.bijection_ok = False
                rep.failures.append(f"weight changed: {t} -> {img}")
            if not in_W(img, n):
                rep.bijection_ok = False
                rep.failures.append(f"image not in W: {t} -> {img}")
            if sigma_full(img, n) != t:
                rep.bijection_ok = False
                rep.failures.append(f"inverse failed at {t}")
            q, gap = maximal_breaking_pair(img, n)
            if q != p or gap != n - q:
                rep.bijection_ok = False
                rep.failures.append(
                    f"breaking pair mismatch at {img}: ({q}, gap {gap})")
            images[img] = t
        if len(images) != len(V) or set(images) != set(W):
            rep.bijection_ok = False
            rep.failures.append("descent map is not a bijection onto W")
        for s in W:
            back = sigma_full(s, n)
            if not in_V(back, n) or tau_full(back, n)[0] != s:
                rep.bijection_ok = False
                rep.failures.append(f"raise map failed at {s}")
    else:
        # length < 3: W is empty and V sums telescope directly
        vsum = LaurentPoly.zero()
        for t in gen_V(n, a):
            vsum = vsum + tableau_weight(t, table, "Z")
        wsum = LaurentPoly.zero()
        for t in gen_W(n, a):
            wsum = wsum + tableau_weight(t, table, "Z")
        if vsum != wsum:
            rep.bijection_ok = False
            rep.failures.append("V-sum != W-sum at small length")
    return rep


def tableau_text(t: tuple, n: int) -> str:
    return " ".join(letter_text(c, n) for c in t)


def tableau_json(t: tuple, n: int) -> list:
    return [{"bar": is_barred(c, n), "v": letter_value(c, n)} for c in t]
