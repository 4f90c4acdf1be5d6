import math
import threading
from decimal import Decimal, localcontext

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hanoispan.counting import (
    INF,
    count_closed,
    count_recursive,
    entropy,
    tree_exponents,
    verify_identities,
)

# frozen before the closed forms were implemented; s_2, s_3 also match
# the matrix-tree determinant
FIXTURES = {1: (3, 1, 1), 2: (135, 120, 320)}
S3 = 20503125


@pytest.mark.parametrize("n,spl", FIXTURES.items())
def test_small_levels(n, spl):
    cv = count_recursive(n)
    assert (cv.s, cv.p, cv.l) == spl
    assert cv.t == cv.r == cv.p


def test_s3():
    assert count_recursive(3).s == S3
    assert S3 * 3 == 25 * 135**3


@pytest.mark.parametrize("n", range(1, 13))
def test_recursive_equals_closed(n):
    assert count_recursive(n) == count_closed(n)


def test_closed_form_exponents():
    assert tree_exponents(1) == (1, 0)
    assert tree_exponents(2) == (3, 1)
    a, b = tree_exponents(5)
    assert count_closed(5).s == 3**a * 5**b


def test_identities_hold():
    report = verify_identities(12)
    assert report and all(r.passed for r in report)
    assert {r.name for r in report} == {"s*l == 3*p^2", "s[n+1]*3^(n-1) == 5^n*s[n]^3"}


def test_identity_n2_value():
    cv = count_recursive(2)
    assert cv.s * cv.l == 3 * cv.p**2 == 43200


@pytest.mark.parametrize("bad", [0, -3, 2.0, "3", True])
def test_bad_level(bad):
    with pytest.raises((ValueError, TypeError)):
        count_recursive(bad)


def test_entropy_small():
    assert abs(float(entropy(1)) - math.log(3) / 3) < 1e-15
    with localcontext() as ctx:
        ctx.prec = 80
        assert abs(entropy(2).value - Decimal(135).ln() / 9) < Decimal("1e-58")


def test_entropy_limit():
    lim = entropy(INF)
    assert abs(float(lim) - (math.log(3) + math.log(5)) / 4) < 1e-15
    assert round(float(lim), 3) == 0.677
    assert abs(float(entropy(10)) - float(lim)) < 1e-3


def test_entropy_increasing_and_bounded():
    lim = entropy(INF).value
    values = [entropy(n).value for n in range(1, 16)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < lim


def test_entropy_huge_level():
    # exponent arithmetic only; s_200 itself is never formed
    assert abs(entropy(200).value - entropy(INF).value) < Decimal("1e-50")


@given(st.integers(1, 10))
def test_closed_divisions_exact(n):
    cv = count_closed(n)
    assert cv.s * cv.l == 3 * cv.p**2


def test_concurrent_reads():
    results = {}

    def work(k):
        results[k] = count_recursive(12 - k % 5)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(12)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k, cv in results.items():
        assert cv == count_closed(12 - k % 5)
