"""Exact counts of the five spanning-subgraph classes of H_n.

Classes, named by where the three outmost vertices end up:

* S - spanning trees;
* P, T, R - two-tree spanning forests isolating outmost 2, 1, 0
  respectively from the other two (equal in number by symmetry);
* L - three-tree spanning forests, one outmost vertex per tree.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from hanoispan.errors import ConsistencyError

ENTROPY_DIGITS = 60
INF = "inf"


@dataclass(frozen=True)
class ClassVector:
    n: int
    s: int
    p: int
    t: int
    r: int
    l: int

    def as_dict(self) -> dict[str, int]:
        return {"s": self.s, "p": self.p, "t": self.t, "r": self.r, "l": self.l}


def _check_level(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")


_rec_lock = threading.Lock()
_rec_cache: list[tuple[int, int, int]] = [(3, 1, 1)]  # index k holds level k + 1


def _step(s: int, p: int, l: int) -> tuple[int, int, int]:
    s2, p2 = s * s, p * p
    return (
        3 * s2 * s + 6 * s2 * p,
        s2 * s + 7 * s2 * p + 7 * s * p2 + s2 * l,
        s2 * s + 12 * s2 * p + 3 * s2 * l + 36 * s * p2 + 12 * s * p * l + 14 * p2 * p,
    )


def _spl(n: int) -> tuple[int, int, int]:
    # append-only cache; readers never observe a partially written level
    if n > len(_rec_cache):
        with _rec_lock:
            while len(_rec_cache) < n:
                _rec_cache.append(_step(*_rec_cache[-1]))
    return _rec_cache[n - 1]


def count_recursive(n: int) -> ClassVector:
    """Iterate the three-copy decimation from (s, p, l) = (3, 1, 1) at n = 1.

    The cubic term of the l-recursion is 14 p^3; with 14 l^3 the identity
    s l = 3 p^2 already fails at n = 2.
    """
    _check_level(n)
    s, p, l = _spl(n)
    return ClassVector(n, s, p, p, p, l)


def tree_exponents(n: int) -> tuple[int, int]:
    """Integer exponents (a, b) with s_n = 3^a * 5^b."""
    _check_level(n)
    a, ra = divmod(3**n + 2 * n - 1, 4)
    b, rb = divmod(3**n - 2 * n - 1, 4)
    assert ra == 0 and rb == 0, (n, ra, rb)
    return a, b


def _pow35(e3: Fraction, e5: Fraction) -> Fraction:
    assert e3.denominator == 1 and e5.denominator == 1, (e3, e5)
    return Fraction(3) ** int(e3) * Fraction(5) ** int(e5)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer", x, x.numerator // x.denominator)
    return x.numerator


def count_closed(n: int) -> ClassVector:
    """Evaluate the closed forms for s_n, p_n and l_n with exact arithmetic."""
    _check_level(n)
    a, b = tree_exponents(n)
    s = 3**a * 5**b
    x = 3**n
    p = (
        Fraction(1, 6)
        * Fraction(5**n - 3**n, 5**n)
        * _pow35(Fraction(x - 2 * n + 3, 4), Fraction(x + 2 * n - 1, 4))
    )
    l = (
        Fraction(1, 4)
        * (3**n - 5**n) ** 2
        * _pow35(Fraction(x - 6 * n + 3, 4), Fraction(x - 2 * n - 1, 4))
    )
    p_int = _as_int(p, f"p_{n} closed form")
    return ClassVector(n, s, p_int, p_int, p_int, _as_int(l, f"l_{n} closed form"))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int
    passed: bool
    lhs: int
    rhs: int


def verify_identities(max_n: int) -> list[IdentityCheck]:
    """Check s*l = 3p^2 and s_{n+1} 3^{n-1} = 5^n s_n^3 for n <= max_n.

    Failures are reported as entries, never raised.
    """
    _check_level(max_n)
    out = []
    for n in range(1, max_n + 1):
        cv = count_recursive(n)
        lhs, rhs = cv.s * cv.l, 3 * cv.p**2
        out.append(IdentityCheck("s*l == 3*p^2", n, lhs == rhs, lhs, rhs))
        nxt = count_recursive(n + 1).s
        lhs, rhs = nxt * 3 ** (n - 1), 5**n * cv.s**3
        out.append(IdentityCheck("s[n+1]*3^(n-1) == 5^n*s[n]^3", n, lhs == rhs, lhs, rhs))
    return out


@dataclass(frozen=True)
class EntropyValue:
    n: int | str
    value: Decimal

    def __float__(self) -> float:
        return float(self.value)


def entropy(n: int | str, digits: int = ENTROPY_DIGITS) -> EntropyValue:
    """Spanning-tree entropy ln(s_n) / 3^n, or its limit (ln 3 + ln 5) / 4.

    ln s_n is assembled from the integer exponents of 3 and 5, so no
    logarithm of a huge integer is ever taken.
    """
    with localcontext() as ctx:
        ctx.prec = digits + 10
        ln3, ln5 = Decimal(3).ln(), Decimal(5).ln()
        if n == INF or n == math.inf:
            val = (ln3 + ln5) / 4
            key: int | str = INF
        else:
            _check_level(n)
            a, b = tree_exponents(n)
            val = (a * ln3 + b * ln5) / Decimal(3**n)
            key = n
        ctx.prec = digits
        return EntropyValue(key, +val)
