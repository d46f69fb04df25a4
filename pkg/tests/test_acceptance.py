"""Exit criteria.  Every check is exact; there is no tolerance anywhere.

Run ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``
to see one PASS/FAIL line per criterion.
"""

import io
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import kangaroo_oracle, partition_counts  # noqa: E402

from qalpine.alpine import (  # noqa: E402
    ExponentKind,
    amateur_sum,
    gs1_rec,
    gs1_sum,
    gs2_rec,
    gs2_sum,
    slalom_rec,
    slalom_sum,
)
from qalpine.bijection import enumerate_terms, match_term, verify_matching  # noqa: E402
from qalpine.cli import EXIT_OK, run  # noqa: E402
from qalpine.partitions import (  # noqa: E402
    box,
    euler_product,
    kangaroo,
    mod5_product,
    rr_check,
    theta_series,
    weight_poly,
)
from qalpine.polyring import ONE, poly_add, poly_eval_int, poly_shift  # noqa: E402
from qalpine.qbinom import QBinomTable, binomial, gaussian_binomial  # noqa: E402

TABLE = QBinomTable()


def fib(count, a, b):
    out = [a, b]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def c1_amateur():
    p = [amateur_sum("p", n) for n in range(31)]
    q = [amateur_sum("q", n) for n in range(31)]
    r = [amateur_sum("r", n) for n in range(31)]
    return p == fib(31, 1, 1) and q == fib(31, 0, 1) and r == [1] * 31


def c2_pro():
    gs1 = all(gs1_sum(n, TABLE) == gs1_rec(n) for n in range(-1, 51))
    gs2 = all(gs2_sum(n, TABLE) == gs2_rec(n) for n in range(51))
    slalom = all(slalom_sum(n, TABLE) == slalom_rec(n) == ONE for n in range(51))
    return gs1 and gs2 and slalom


def c3_figures():
    report = verify_matching(8, table=TABLE)
    return (
        len(enumerate_terms(8)) == 106
        and report.pair_count == 36
        and report.fixed_count == 34
        and amateur_sum("p", 8) == 34
    )


def c4_bijection():
    for n in range(15):
        report = verify_matching(n, table=TABLE)
        if not report.ok:
            return False
        for a, b in report.pairs:
            if match_term(a) != b or match_term(b) != a:
                return False
            if a.sign == b.sign or a.weight() != b.weight():
                return False
        if report.fixed_weight_sum() != gs1_sum(n, TABLE):
            return False
    return True


def c5_kangaroo():
    for n in range(1, 21):
        if gs1_sum(n, TABLE) != weight_poly(kangaroo(max_part=n - 1)):
            return False
        if gs1_sum(n, TABLE) != kangaroo_oracle(n - 1):
            return False
        if n >= 2 and gs2_sum(n, TABLE) != weight_poly(kangaroo(max_part=n - 1, min_part=2)):
            return False
        if n >= 2 and gs2_sum(n, TABLE) != kangaroo_oracle(n - 1, 2):
            return False
    return gs1_sum(0, TABLE) == ONE and gs2_sum(1, TABLE) == ONE


def c6_pentagonal():
    return euler_product(100) == theta_series(ExponentKind.C_SLALOM, 100)


def c7_jacobi():
    return theta_series(ExponentKind.A_GS1, 60) == mod5_product({2, 3, 5}, False, 60) and theta_series(
        ExponentKind.B_GS2, 60
    ) == mod5_product({1, 4, 5}, False, 60)


def c8_rogers_ramanujan():
    one, two = rr_check(1, 60, TABLE), rr_check(2, 60, TABLE)
    if not (one.equal and two.equal):
        return False
    rr1_x4 = partition_counts(4, lambda p: p % 5 in (1, 4))[4]
    rr2_x6 = partition_counts(6, lambda p: p % 5 in (2, 3))[6]
    gap_x4 = kangaroo_oracle(4)[4]
    gap_x6 = kangaroo_oracle(6, 2)[6]
    return one.sum_side[4] == rr1_x4 == gap_x4 == 2 and two.sum_side[6] == rr2_x6 == gap_x6 == 2


def c9_qbinom():
    for n in range(41):
        for k in range(-1, n + 2):
            g = gaussian_binomial(TABLE, n, k)
            if n >= 1:
                up_left, up = gaussian_binomial(TABLE, n - 1, k - 1), gaussian_binomial(TABLE, n - 1, k)
                if g != poly_add(up_left, poly_shift(up, max(k, 0))):
                    return False
                if g != poly_add(poly_shift(up_left, max(n - k, 0)), up):
                    return False
            if g != gaussian_binomial(TABLE, n, n - k):
                return False
            if poly_eval_int(g, 1) != binomial(n, k):
                return False
            if 0 <= k <= n and (g.degree != k * (n - k) or min(g.coeffs) < 0):
                return False
    return all(gaussian_binomial(TABLE, n, k) == weight_poly(box(k, n - k)) for n in range(15) for k in range(n + 1))


GOLDEN = Path(__file__).parent / "golden"


def c10_cli_golden():
    cases = [
        (["verify", "slalom", "--max-n", "30"], "verify_slalom_30.json"),
        (["bijection", "--n", "8"], "bijection_8.json"),
        (["rr", "1", "--degree", "30"], "rr1_30.json"),
    ]
    for argv, name in cases:
        outputs = []
        for _ in range(2):
            buf = io.StringIO()
            code = run(argv + ["--format", "json"], stdout=buf)
            doc = json.loads(buf.getvalue())
            if code != EXIT_OK or not doc["all_pass"]:
                return False
            outputs.append(buf.getvalue())
        if outputs[0] != outputs[1] or outputs[0] != (GOLDEN / name).read_text():
            return False
    rows = json.loads((GOLDEN / "verify_slalom_30.json").read_text())["rows"]
    return len(rows) == 31 and all(r["sum"]["coeffs"] == ["1"] for r in rows)


CRITERIA = [
    ("1 amateur identities p, q, r for n <= 30", c1_amateur),
    ("2 pro sums equal recurrences for n <= 50", c2_pro),
    ("3 row 8: 106 terms, 36 pairs, 34 fixed, p(8) = 34", c3_figures),
    ("4 cancellation properties for n <= 14", c4_bijection),
    ("5 kangaroo oracle for n <= 20", c5_kangaroo),
    ("6 pentagonal number theorem at order 100", c6_pentagonal),
    ("7 Jacobi specializations at order 60", c7_jacobi),
    ("8 Rogers-Ramanujan 1 and 2 at order 60", c8_rogers_ramanujan),
    ("9 Gaussian binomial suite for n <= 40", c9_qbinom),
    ("10 CLI golden json and exit codes", c10_cli_golden),
]


@pytest.mark.parametrize("label, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    ok = check()
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {label}", end="")
    assert ok


if __name__ == "__main__":
    failed = 0
    for label, check in CRITERIA:
        ok = check()
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {label}")
    sys.exit(1 if failed else 0)
