"""Self-check suite behind ``hanoispan verify``.

Every exact check is PASS or FAIL.  Reference closed forms for connecting
vertices that are known to disagree with enumeration are reported as WARN;
only the degree-1 spanning-tree form is required to hold.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from hanoispan import counting, degree, oracle
from hanoispan.errors import ConsistencyError
from hanoispan.graph import build_graph

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"
ORACLE_MAX_N = 4
DEGREE_ORACLE_MAX_N = 3
HANDSHAKE_MAX_N = 6
REQUIRED_CLOSED_FORMS = {("S(01)", 1)}


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _identity_checks(n):
    report = counting.verify_identities(n)
    by_name: dict[str, list] = {}
    for item in report:
        by_name.setdefault(item.name, []).append(item)
    for name, items in by_name.items():
        bad = [it.n for it in items if not it.passed]
        yield Check(f"identity {name} for n=1..{n}", _status(not bad), f"failing n: {bad}" if bad else "")


def _recursion_vs_closed(n):
    bad = [k for k in range(1, n + 1) if counting.count_recursive(k) != counting.count_closed(k)]
    yield Check(f"recursive == closed-form class counts for n=1..{n}", _status(not bad),
                f"failing n: {bad}" if bad else "")


def _outmost_forms(n):
    for k in range(1, n + 1):
        try:
            degree.outmost_dist(k)
        except ConsistencyError as exc:
            yield Check(f"outmost closed forms == recursion at n={k}", FAIL, str(exc))
            return
    yield Check(f"outmost closed forms == recursion for n=1..{n}", PASS)


def _matrix_tree(n):
    for k in range(1, min(n, ORACLE_MAX_N) + 1):
        got = oracle.matrix_tree_count(build_graph(k))
        want = counting.count_recursive(k).s
        yield Check(f"matrix-tree determinant == s_{k}", _status(got == want), f"{got} vs {want}")


def _degree_oracle(n):
    k = min(n, DEGREE_ORACLE_MAX_N)
    if k < 2:
        return
    g = build_graph(k)
    s = counting.count_recursive(k).s
    bad = []
    for v in g.vertices:
        poly = oracle.degree_poly(g, v)
        if tuple(Fraction(c, s) for c in poly.coeffs) != degree.degree_distribution(k, v):
            bad.append(v)
    yield Check(f"vertex distributions == weighted matrix-tree oracle on H_{k}", _status(not bad),
                f"mismatching vertices: {bad}" if bad else f"{len(g.vertices)} vertices")


def _enumeration(n):
    if n < 2:
        return
    g = build_graph(2)
    trees = list(oracle.enumerate_trees(g))
    at01: Counter = Counter()
    at0: Counter = Counter()
    for t in trees:
        at01[sum("01" in e for e in t)] += 1
        at0[sum("0" in e for e in t)] += 1
    tally01 = tuple(at01[i] for i in range(4))
    tally0 = tuple(at0[i] for i in range(4))
    want01 = degree.connecting_counts(1).s01.counts
    want0 = degree.outmost_counts(2).s0.counts
    yield Check("enumeration of H_2 trees == s_2", _status(len(trees) == counting.count_recursive(2).s),
                f"{len(trees)} trees")
    yield Check("enumeration degree tally at 01 == connecting recursion",
                _status(tally01 == want01), f"{tally01} vs {want01}")
    yield Check("enumeration degree tally at 0 == outmost recursion",
                _status(tally0 == want0), f"{tally0} vs {want0}")


def _distribution_invariants(n):
    for k in range(1, min(n, HANDSHAKE_MAX_N) + 1):
        g = build_graph(k)
        total = Fraction(0)
        unnormalized = []
        for v in g.vertices:
            dist = degree.degree_distribution(k, v)
            if sum(dist) != 1:
                unnormalized.append(v)
            total += sum(i * q for i, q in enumerate(dist))
        want = 2 * (3**k - 1)
        yield Check(f"normalization on H_{k}", _status(not unnormalized),
                    f"bad vertices: {unnormalized}" if unnormalized else "")
        yield Check(f"handshake sum on H_{k}", _status(total == want), f"{total} vs {want}")


def _closed_form_report(n):
    for k in range(1, n):
        for row in degree.connecting_closed_form_report(k):
            name = f"reference closed form {row.quantity} degree {row.i} in H_{k + 1}"
            detail = f"reference {row.reference}, recursion {row.recursion}"
            if row.match:
                yield Check(name, PASS, detail)
            elif (row.quantity, row.i) in REQUIRED_CLOSED_FORMS:
                yield Check(name, FAIL, detail)
            else:
                yield Check(name, WARN, detail)


def run_verification(n: int) -> list[Check]:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"level must be a positive integer, got {n!r}")
    checks: list[Check] = []
    for part in (_identity_checks, _recursion_vs_closed, _outmost_forms, _matrix_tree,
                 _degree_oracle, _enumeration, _distribution_invariants, _closed_form_report):
        checks.extend(part(n))
    return checks
