"""Exact degree distribution of every vertex of H_n over spanning subgraphs.

For a vertex v and degree i the five probabilities

    M_{n,i}(v) = [S, P, T, R, L]

are the fractions of spanning trees (S), of two-tree forests isolating
outmost 2 / 1 / 0 (P / T / R), and of three-tree forests (L) in which v has
degree i.  They are computed from three ingredients:

* coupled integer recursions for the outmost vertex "0" and for the
  connecting vertices (label length 1 and 2);
* the peg-permutation symmetry of H_n;
* a 5x5 rational transfer matrix C_n that carries M of a vertex of the
  sub-copy H_n into M of the same vertex inside H_{n+1}.

Everything is exact (``fractions.Fraction``); equality is never
tolerance-based.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from hanoispan.counting import count_recursive
from hanoispan.errors import ConsistencyError, LabelError
from hanoispan.graph import PEGS, build_graph, check_label, permute_label

CLASSES = ("S", "P", "T", "R", "L")
DEGREES = (0, 1, 2, 3)
# component index of the class isolating each outmost peg
ISOLATING = {2: 1, 1: 2, 0: 3}


@dataclass(frozen=True)
class RawDegreeCounts:
    n: int
    vertex: str
    cls: str
    counts: tuple[int, int, int, int]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DistVector:
    n: int
    vertex: str
    i: int
    components: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    S = property(lambda self: self.components[0])
    P = property(lambda self: self.components[1])
    T = property(lambda self: self.components[2])
    R = property(lambda self: self.components[3])
    L = property(lambda self: self.components[4])


# ---------------------------------------------------------------------------
# class permutations and the peg symmetry

def _perm_matrix(swap: tuple[int, int] | None) -> tuple[tuple[int, ...], ...]:
    rows = [[int(r == c) for c in range(5)] for r in range(5)]
    if swap:
        a, b = swap
        for row in rows:
            row[a], row[b] = row[b], row[a]
    return tuple(tuple(r) for r in rows)


# E_k: identity, swap T<->R columns, swap P<->R columns
CLASS_PERMUTATIONS = (_perm_matrix(None), _perm_matrix((2, 3)), _perm_matrix((1, 3)))


def transposition(k: str) -> str:
    """Peg permutation exchanging 0 and k (identity for k == "0")."""
    return PEGS.translate(str.maketrans("0" + k, k + "0")) if k != "0" else PEGS


def act(sigma: str, vec: tuple) -> tuple:
    """Transport a class vector along the peg permutation ``sigma``.

    If ``vec`` is M(v) then the result is M(sigma(v)): S and L are fixed,
    the class isolating peg j moves to the class isolating sigma(j).
    """
    out = list(vec)
    for j, idx in ISOLATING.items():
        out[ISOLATING[int(sigma[j])]] = vec[idx]
    return tuple(out)


def _vec_times(vec, mat):
    zero = Fraction(0)
    return tuple(sum((vec[r] * mat[r][c] for r in range(5) if vec[r]), zero) for c in range(5))


# ---------------------------------------------------------------------------
# outmost vertices

@dataclass(frozen=True)
class OutmostCounts:
    """s_{n,i}(0), p_{n,i}(0), p_{n,i}(2), l_{n,i}(0) for i = 0..3."""

    n: int
    s0: RawDegreeCounts
    p0: RawDegreeCounts
    p2: RawDegreeCounts
    l0: RawDegreeCounts


_out_lock = threading.Lock()
_out_cache: list[tuple[tuple[int, ...], ...]] = [
    ((0, 2, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0)),
]


def _outmost_step(n, state):
    cv = count_recursive(n)
    s, p, l = cv.s, cv.p, cv.l
    ss, sp, pp, sl, pl = s * s, s * p, p * p, s * l, p * l
    S0, P0, P2, L0 = state
    new_s, new_p0, new_p2, new_l = [], [], [], []
    for i in DEGREES:
        a, b, c, d = S0[i], P0[i], P2[i], L0[i]
        new_s.append(3 * a * ss + 2 * b * ss + 4 * a * sp)
        new_p0.append(a * ss + b * ss + 6 * a * sp + 4 * b * sp + 3 * a * pp + a * sl)
        new_p2.append(
            a * ss + 2 * b * ss + 3 * c * ss + d * ss
            + 2 * a * sp + 2 * b * sp + 4 * c * sp + a * pp
        )
        new_l.append(
            a * ss + 2 * b * ss + 2 * c * ss + d * ss
            + 8 * a * sp + 12 * b * sp + 12 * c * sp + 4 * d * sp
            + 12 * a * pp + 8 * b * pp + 6 * c * pp
            + 2 * a * sl + 2 * b * sl + 2 * c * sl + 4 * a * pl
        )
    return tuple(map(tuple, (new_s, new_p0, new_p2, new_l)))


def _outmost_raw(n: int):
    if n > len(_out_cache):
        with _out_lock:
            while len(_out_cache) < n:
                k = len(_out_cache)
                _out_cache.append(_outmost_step(k, _out_cache[-1]))
    return _out_cache[n - 1]


def _check_level(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")


def outmost_counts(n: int) -> OutmostCounts:
    """Degree counts at the outmost vertices of H_n by the coupled recursion."""
    _check_level(n)
    s0, p0, p2, l0 = _outmost_raw(n)
    return OutmostCounts(
        n,
        RawDegreeCounts(n, "0", "S", s0),
        RawDegreeCounts(n, "0", "P", p0),
        RawDegreeCounts(n, "2", "P", p2),
        RawDegreeCounts(n, "0", "L", l0),
    )


@dataclass(frozen=True)
class OutmostDist:
    """Exact probabilities at outmost vertices, each indexed by degree 0..3.

    ``P2`` is the P-class distribution at vertex "2", the vertex that the
    P class isolates.
    """

    n: int
    S: tuple[Fraction, ...]
    P: tuple[Fraction, ...]
    P2: tuple[Fraction, ...]
    L: tuple[Fraction, ...]

    def vector(self, i: int) -> DistVector:
        # T at "0" equals P at "0" (swap pegs 1, 2); R at "0" equals P at "2"
        comps = (self.S[i], self.P[i], self.P[i], self.P2[i], self.L[i])
        return DistVector(self.n, "0", i, comps)


def outmost_closed_forms(n: int) -> OutmostDist:
    """Closed-form outmost-vertex probabilities in powers of 3, 5 and 15."""
    _check_level(n)
    f5, f3 = 5**n, 3**n
    q = Fraction(1, 15**n)
    d = f5 - f3
    z = Fraction(0)
    big = Fraction(9 * f5 + 5 * f3, 7 * 15**n * d)
    g = Fraction(15**n - 1, 7 * f5 * d)
    S = (z, Fraction(5, 7) - Fraction(5, 7) * q, Fraction(2, 7) + Fraction(5, 7) * q, z)
    P = (z, Fraction(5, 7) + big, Fraction(2, 7) - big, z)
    P2 = (
        5 * g,
        Fraction(5, 7) - Fraction(12, 7) * q - 3 * g,
        Fraction(2, 7) + Fraction(12, 7) * q - 2 * g,
        z,
    )
    L = (
        Fraction(10 * f3, 21 * d) + Fraction(18 * f5 + 10 * f3, 21 * f5 * d * d),
        Fraction(5, 7) + Fraction(9, 7) * q - 2 * g - Fraction(8 * f3, 3 * f5 * d * d),
        Fraction(2, 7) - Fraction(9, 7) * q
        - Fraction(4 * (15**n + 6), 21 * f5 * d) + Fraction(4 * f3, 3 * f5 * d * d),
        z,
    )
    return OutmostDist(n, S, P, P2, L)


def outmost_dist(n: int) -> OutmostDist:
    """Outmost-vertex probabilities, cross-checked between two routes.

    The closed forms and the recursion counts divided by the class sizes
    must agree exactly; otherwise ``ConsistencyError`` carries both.
    """
    closed = outmost_closed_forms(n)
    oc = outmost_counts(n)
    cv = count_recursive(n)
    ratio = OutmostDist(
        n,
        tuple(Fraction(c, cv.s) for c in oc.s0.counts),
        tuple(Fraction(c, cv.p) for c in oc.p0.counts),
        tuple(Fraction(c, cv.p) for c in oc.p2.counts),
        tuple(Fraction(c, cv.l) for c in oc.l0.counts),
    )
    for name in ("S", "P", "P2", "L"):
        a, b = getattr(closed, name), getattr(ratio, name)
        if a != b:
            raise ConsistencyError(f"outmost {name} distribution at n={n}", a, b)
    return ratio


# ---------------------------------------------------------------------------
# connecting vertices

@dataclass(frozen=True)
class ConnectingCounts:
    """Degree counts at connecting vertices of H_{n+1}.

    ``p02`` and ``p20`` are P-class counts at vertices 02 and 20; by the
    peg symmetry they are the T- and R-class counts at vertex 01.
    """

    n: int
    s01: RawDegreeCounts
    p01: RawDegreeCounts
    p02: RawDegreeCounts
    p20: RawDegreeCounts
    l01: RawDegreeCounts


@lru_cache(maxsize=None)
def _connecting_raw(n: int):
    cv = count_recursive(n)
    s, p, l = cv.s, cv.p, cv.l
    ss, sp, pp, sl, pl = s * s, s * p, p * p, s * l, p * l
    # at outmost vertex 1 of a copy: s(1)=s(0), p(1)=p(0), l(1)=l(0);
    # the class isolating vertex 1 has the counts p(2)
    S1, P1, P2, L1 = _outmost_raw(n)

    s01 = (
        0,
        S1[1] * ss + P2[0] * ss,
        S1[2] * ss + 2 * S1[1] * ss + 4 * S1[1] * sp + P1[1] * ss + P2[1] * ss,
        2 * S1[2] * ss + 4 * S1[2] * sp + P1[2] * ss + P2[2] * ss,
    )
    p01 = (
        0,
        S1[1] * sp + P2[0] * sp,
        S1[2] * sp + S1[1] * ss + 5 * S1[1] * sp + S1[1] * sl + 3 * S1[1] * pp
        + P1[1] * ss + 3 * P1[1] * sp + P2[1] * sp,
        S1[2] * ss + 5 * S1[2] * sp + S1[2] * sl + 3 * S1[2] * pp
        + P1[2] * ss + 3 * P1[2] * sp + P2[2] * sp,
    )
    p02 = (
        0,
        S1[1] * ss + 3 * S1[1] * sp + P2[0] * ss + 3 * P2[0] * sp,
        S1[2] * ss + 3 * S1[2] * sp + 3 * S1[1] * sp + S1[1] * sl + 3 * S1[1] * pp
        + P2[1] * ss + 3 * P2[1] * sp + P1[1] * sp,
        3 * S1[2] * sp + S1[2] * sl + 3 * S1[2] * pp
        + P2[2] * ss + 3 * P2[2] * sp + P1[2] * sp,
    )
    # the L1[0] terms: vertex isolated inside an L-class copy, cross edge used
    p20 = (
        0,
        S1[1] * ss + S1[1] * sp + 2 * P1[1] * ss + P2[0] * ss + P2[0] * sp + L1[0] * ss,
        S1[2] * ss + S1[2] * sp + 2 * P1[2] * ss + S1[1] * sp + S1[1] * pp
        + 2 * P1[1] * ss + 5 * P1[1] * sp + P2[1] * ss + P2[1] * sp + L1[1] * ss,
        S1[2] * sp + S1[2] * pp + 2 * P1[2] * ss + 5 * P1[2] * sp
        + P2[2] * ss + P2[2] * sp + L1[2] * ss,
    )
    l01 = (
        0,
        S1[1] * ss + 6 * S1[1] * sp + S1[1] * sl + 4 * S1[1] * pp
        + 2 * P1[1] * ss + 8 * P1[1] * sp
        + P2[0] * ss + 6 * P2[0] * sp + P2[0] * sl + 4 * P2[0] * pp
        + L1[0] * ss + 4 * L1[0] * sp,
        S1[2] * ss + 6 * S1[2] * sp + S1[2] * sl + 4 * S1[2] * pp
        + 2 * P1[2] * ss + 8 * P1[2] * sp
        + 2 * S1[1] * sp + S1[1] * sl + 8 * S1[1] * pp + 4 * S1[1] * pl
        + P1[1] * ss + 10 * P1[1] * sp + 3 * P1[1] * sl + 10 * P1[1] * pp
        + P2[1] * ss + 6 * P2[1] * sp + P2[1] * sl + 4 * P2[1] * pp
        + L1[1] * ss + 4 * L1[1] * sp,
        2 * S1[2] * sp + S1[2] * sl + 8 * S1[2] * pp + 4 * S1[2] * pl
        + P1[2] * ss + 10 * P1[2] * sp + 3 * P1[2] * sl + 10 * P1[2] * pp
        + P2[2] * ss + 6 * P2[2] * sp + P2[2] * sl + 4 * P2[2] * pp
        + L1[2] * ss + 4 * L1[2] * sp,
    )
    return s01, p01, p02, p20, l01


def connecting_counts(n: int) -> ConnectingCounts:
    """Degree counts at the connecting vertices of H_{n+1} (n >= 1)."""
    _check_level(n)
    s01, p01, p02, p20, l01 = _connecting_raw(n)
    m = n + 1
    return ConnectingCounts(
        n,
        RawDegreeCounts(m, "01", "S", s01),
        RawDegreeCounts(m, "01", "P", p01),
        RawDegreeCounts(m, "02", "P", p02),
        RawDegreeCounts(m, "20", "P", p20),
        RawDegreeCounts(m, "01", "L", l01),
    )


def reference_connecting_closed_forms(n: int) -> dict[tuple[str, int], Fraction]:
    """Literature closed forms for connecting-vertex probabilities in H_{n+1}.

    Kept for cross-reporting only.  Against exhaustive enumeration only the
    degree-1 entries of S(01), P(01), P(02) and a few others hold; the rest
    disagree (for example S(01) at degree 2 gives 53/105 for H_2 where the
    tree census gives 78/135).
    """
    _check_level(n)
    F = Fraction

    def pw(base, e):
        return F(base) ** e

    D = 5 ** (n + 1) - 3 ** (n + 1)
    t, f = 3**n, 5**n
    return {
        ("S(01)", 1): F(1, 14) * pw(5, 1 - 2 * n) * (15**n - 1),
        ("S(01)", 2): F(1, 42) * (30 + 6 * pw(5, 1 - 2 * n) - 3 ** (2 + n) * pw(5, -n) - 23 * pw(5, -n)),
        ("S(01)", 3): F(1, 42) * (12 - 3 * pw(5, 1 - 2 * n) - 2 * 3 ** (1 + n) * pw(5, -n) + 23 * pw(5, -n)),
        ("P(01)", 1): 3 * pw(5, 1 - 2 * n) * (f - t) * (15**n - 1) / (14 * F(D)),
        ("P(01)", 2): (7 * pw(F(9, 5), n) + 5 * pw(3, 1 - n) - 2 * t - 19 * pw(5, -n) - 3 * 5 ** (n + 1))
        / F(7 * 3 ** (n + 1) - 7 * 5 ** (n + 1)),
        ("P(01)", 3): (49 * pw(3, 1 - n) - 28 * 3 ** (n + 1) + t * pw(5, 3 - 2 * n) - 56 * pw(5, 1 - n)
                       + 42 * f + 2 * pw(5, 2 - n) * 9**n) / F(14 * D),
        ("P(02)", 1): 3 * pw(5, 1 - 2 * n) * (3 * f - t) * (15**n - 1) / (14 * F(D)),
        ("P(02)", 2): (19 * pw(3, 1 - n) + 19 * 3 ** (n + 1) + 2 * 3 ** (n + 1) * pw(5, 1 - 2 * n)
                       - 113 * pw(5, -n) - 2 * 5 ** (n + 2) - pw(5, -n) * 9 ** (n + 1)) / F(-14 * D),
        ("P(02)", 3): pw(75, -n) * (106 * t * 5 ** (n + 1) - 125 * 9**n - 453 * 25**n - 2 * 5 ** (n + 2) * 27**n
                                    + 184 * 225**n - 86 * 375**n) / F(-14 * D),
        ("P(20)", 1): pw(25, -n) * (5 * t + 21 * f + 7 * t * 5 ** (2 * n + 1) - 5 ** (n + 1) * 9**n) / F(14 * D),
        ("P(20)", 2): (55 * pw(3, -n) - 19 * 3 ** (n + 1) + t * pw(5, 1 - 2 * n) - 11 * pw(5, 1 - n)
                       + 2 * 5 ** (n + 2) + pw(5, -n) * 9 ** (n + 1)) / F(14 * D),
        ("P(20)", 3): pw(75, -n) * (95 * 9**n - 38 * 15**n - 77 * 25**n - 14 * 3 ** (n + 1) * 125**n
                                    + 38 * 135**n + 52 * 225**n) / F(-14 * D),
        ("L(01)", 1): pw(25, -n) * (37 * t * 5 ** (3 * n + 1) - 25 * 9**n + 38 * 15**n + 39 * 25**n
                                    - 2 * 3 ** (2 * n + 1) * 25 ** (n + 1) + 5 ** (n + 2) * 27**n) / F(14 * D * D),
        ("L(01)", 2): pw(75, -n) * (-(3 ** (4 * n + 3)) * f + 27 * 5 ** (3 * n + 1)
                                    - 29 * 3 ** (2 * n + 1) * 5 ** (3 * n + 1) + 2 * t * 5 ** (4 * n + 3)) / F(14 * D * D)
        + pw(75, -n) * (20 * 27**n + 8 * 25**n * 27 ** (n + 1) - 13 * 45**n - 188 * 75**n) / F(14 * D * D),
        ("L(01)", 3): pw(75, -n) * (-319 * 3 ** (n + 1) * 25**n + 62 * 3 ** (3 * n + 1) * 25**n + 65 * 27**n)
        / F(14 * D * D)
        + pw(75, -n) * (199 * 45**n + 789 * 125**n + 26 * 405**n - 562 * 1125**n + 254 * 1875**n) / F(14 * D * D),
    }


@dataclass(frozen=True)
class ClosedFormCheck:
    quantity: str
    i: int
    reference: Fraction
    recursion: Fraction

    @property
    def match(self) -> bool:
        return self.reference == self.recursion


def connecting_closed_form_report(n: int) -> list[ClosedFormCheck]:
    """Compare the reference closed forms with the recursion for H_{n+1}."""
    cc = connecting_counts(n)
    cv = count_recursive(n + 1)
    sizes = {"S(01)": cv.s, "P(01)": cv.p, "P(02)": cv.p, "P(20)": cv.p, "L(01)": cv.l}
    counts = {"S(01)": cc.s01, "P(01)": cc.p01, "P(02)": cc.p02, "P(20)": cc.p20, "L(01)": cc.l01}
    return [
        ClosedFormCheck(q, i, ref, Fraction(counts[q].counts[i], sizes[q]))
        for (q, i), ref in reference_connecting_closed_forms(n).items()
    ]


# ---------------------------------------------------------------------------
# transfer matrix

@dataclass(frozen=True)
class TransferMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]


@lru_cache(maxsize=None)
def transfer_matrix(n: int) -> TransferMatrix:
    """C_n: row vector M of a vertex in copy 0 of H_{n+1}, level n -> n+1.

    Rows/columns are ordered S, P, T, R, L.  A copy in the R or L class
    leaves outmost 0 cut off, so rows R and L vanish in columns S, P, T.
    """
    _check_level(n)
    F = Fraction
    a, b = 5**n, 3**n
    D = 5 ** (n + 1) - 3 ** (n + 1)
    z = F(0)
    sp_ = F(3 * a * a - b * b, a * D)
    diag = F(b * b - 4 * a * b + 3 * a * a, 2 * a * D)
    off = F((a - b) ** 2, 2 * a * D)
    pr = F(a * a - b * b, 2 * a * D)
    pl = F(7 * a**3 + 45**n + 27**n - 9 * b * a * a, 2 * a * D * D)
    rows = (
        (F(2 * a + b, 3 * a), sp_, sp_, F((a + b) ** 2, 2 * a * D), F(6 * a * a - 2 * b * b, D * D)),
        (F(a - b, 6 * a), diag, off, pr, pl),
        (F(a - b, 6 * a), off, diag, pr, pl),
        (z, z, z, F(2 * a * a - b * b - a * b, a * D), F(2 * (a - b) * (3 * a * a - b * b), a * D * D)),
        (z, z, z, F(3 * (a - b) ** 2, 2 * a * D), F(3 * (2 * a - b) * (a - b) ** 2, a * D * D)),
    )
    return TransferMatrix(n, rows)


# ---------------------------------------------------------------------------
# arbitrary vertices

def _base_outmost(n: int) -> tuple:
    od = outmost_dist(n)
    return tuple(od.vector(i).components for i in DEGREES)


def _base_connecting(m: int) -> tuple:
    """M_{m,i}(01) for i = 0..3, m >= 2."""
    cc = connecting_counts(m - 1)
    cv = count_recursive(m)
    out = []
    for i in DEGREES:
        out.append((
            Fraction(cc.s01.counts[i], cv.s),
            Fraction(cc.p01.counts[i], cv.p),
            Fraction(cc.p02.counts[i], cv.p),  # T at 01
            Fraction(cc.p20.counts[i], cv.p),  # R at 01
            Fraction(cc.l01.counts[i], cv.l),
        ))
    return tuple(out)


@lru_cache(maxsize=None)
def vertex_vectors(n: int, label: str) -> tuple:
    """All four M_{n,i}(label) rows (i = 0..3) as tuples of Fractions.

    Labels of length >= 3 peel their second digit per level:
    M_{n}(0 k g) = M_{n-1}(0 tau_k(g)) E_k C_{n-1}, where tau_k swaps pegs
    0 and k.  Labels not starting with 0 are first moved there by the
    transposition of 0 and their leading digit.
    """
    if len(label) == 1:
        sigma = transposition(label)
        return tuple(act(sigma, v) for v in _base_outmost(n))
    if len(label) == 2:
        a, b = label
        c = (set(PEGS) - {a, b}).pop()
        sigma = a + b + c  # 0 -> a, 1 -> b, 2 -> c
        return tuple(act(sigma, v) for v in _base_connecting(n))
    lead = label[0]
    if lead != "0":
        tau = transposition(lead)
        return tuple(act(tau, v) for v in vertex_vectors(n, permute_label(label, tau)))
    k, rest = label[1], label[2:]
    inner = vertex_vectors(n - 1, "0" + permute_label(rest, transposition(k)))
    step = _compose(CLASS_PERMUTATIONS[int(k)], transfer_matrix(n - 1).entries)
    return tuple(_vec_times(v, step) for v in inner)


@lru_cache(maxsize=None)
def _compose(perm, mat):
    return tuple(
        tuple(sum(perm[r][j] * mat[j][c] for j in range(5)) for c in range(5))
        for r in range(5)
    )


def _check_vertex(n: int, vertex: str) -> str:
    _check_level(n)
    return check_label(vertex, n)


def vertex_dist(n: int, vertex: str, i: int) -> DistVector:
    """M_{n,i}(vertex); the S component is the degree-i probability over trees."""
    _check_vertex(n, vertex)
    if not isinstance(i, int) or i not in DEGREES:
        raise ValueError(f"degree must be in 0..3, got {i!r}")
    return DistVector(n, vertex, i, vertex_vectors(n, vertex)[i])


def degree_distribution(n: int, vertex: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(S_{n,0}, ..., S_{n,3}) at ``vertex``."""
    _check_vertex(n, vertex)
    return tuple(row[0] for row in vertex_vectors(n, vertex))


def full_distribution_table(n: int) -> list[tuple[str, int, Fraction]]:
    """Rows (vertex, i, S_{n,i}(vertex)) for every vertex, sorted by label."""
    graph = build_graph(n)
    rows = []
    for v in graph.vertices:
        for i, prob in enumerate(degree_distribution(n, v)):
            rows.append((v, i, prob))
    return rows


def symmetry_image(vertex: str, sigma: str) -> str:
    """Label of the image of ``vertex`` under a peg permutation."""
    if sorted(sigma) != list(PEGS):
        raise LabelError(f"{sigma!r} is not a permutation of 012")
    return permute_label(vertex, sigma)
