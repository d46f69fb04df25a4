import itertools
from collections import Counter

import pytest

from qalpine.alpine import amateur_sum, gs1_sum
from qalpine.bijection import (
    GS1_RULES,
    MatchingError,
    Rule,
    RewriteSystem,
    SignedTerm,
    enumerate_terms,
    leftmatch,
    match_term,
    path_area,
    rightmatch,
    signed_weight_sum,
    verify_matching,
)
from qalpine.qbinom import binomial

FIB = [1, 1]
while len(FIB) < 30:
    FIB.append(FIB[-1] + FIB[-2])


def w(s):
    return tuple(s)


def test_path_area_examples():
    assert path_area(()) == 0
    assert path_area(w("AAAA")) == 0
    assert path_area(w("BABA")) == 3
    assert path_area(w("BABA"), mirrored=True) == 1


def test_enumerate_term_counts():
    assert len(enumerate_terms(2)) == 2
    assert {t.lam for t in enumerate_terms(2)} == {0}
    five = enumerate_terms(5)
    assert Counter(t.lam for t in five) == {-1: 1, 0: 10, 1: 1}
    eight = enumerate_terms(8)
    assert len(eight) == 106 == binomial(8, 1) + binomial(8, 4) + binomial(8, 6)


@pytest.mark.parametrize("n", range(0, 13))
def test_terms_sum_to_gs1(table, n):
    assert signed_weight_sum(enumerate_terms(n)) == gs1_sum(n, table)


def test_literal_rule_examples():
    assert leftmatch(w("A"), literal=True) == w("B")
    assert rightmatch(w("AA"), literal=True) == w("BB")
    assert leftmatch(w("BA"), literal=True) == w("BA")


def test_guarded_rule_examples():
    # the inner rightmatch([]) is a fixed point, so [A] is too
    assert leftmatch(w("A")) == w("A")
    assert rightmatch(w("AA")) == w("BB")
    assert leftmatch(w("BA")) == w("BA")
    assert leftmatch(w("BB")) == w("AA")
    # BAAB -> [A] + leftmatch(BAA); leftmatch(BAA) = [B] + leftmatch(A) + [A] is fixed
    assert rightmatch(w("BAAB")) == w("BAAB")
    assert leftmatch(w("BBBB")) == w("ABBA")
    assert rightmatch(w("ABBA")) == w("BBBB")


def test_patterns_are_disjoint():
    # at most one rule of each function matches any word, so rule order is immaterial
    words = [tuple(p) for n in range(0, 9) for p in itertools.product("AB", repeat=n)]
    for rules in GS1_RULES.rules.values():
        for x in words:
            assert sum(r.split(x) is not None for r in rules) <= 1
    reordered = RewriteSystem({name: rs[::-1] for name, rs in GS1_RULES.rules.items()})
    for x in words:
        assert reordered.apply("leftmatch", x) == leftmatch(x)
        assert reordered.apply("rightmatch", x) == rightmatch(x)


def test_rewrite_system_validates_calls():
    with pytest.raises(ValueError):
        RewriteSystem({"f": [Rule("A", None, (), "g", ())]})


@pytest.mark.parametrize("literal", [False, True])
def test_rewrites_preserve_length_and_terminate(literal):
    for n in range(0, 13):
        for p in itertools.product("AB", repeat=n):
            assert len(leftmatch(p, literal)) == n
            assert len(rightmatch(p, literal)) == n


def test_match_term_fixed_and_partner():
    t = SignedTerm(2, 0, w("AB"))
    assert match_term(t) is None
    t = SignedTerm(4, 0, w("ABBA"))
    partner = match_term(t)
    assert partner == SignedTerm(4, 1, w("BBBB"))
    assert match_term(partner) == t
    assert t.weight() == partner.weight() == 2
    assert match_term(SignedTerm(4, 0, w("AABB"))) is None


def test_literal_reading_breaks_structure():
    with pytest.raises(MatchingError):
        match_term(SignedTerm(1, 0, w("A")), literal=True)
    assert not verify_matching(8, literal=True).ok


def test_signed_term_validation():
    with pytest.raises(ValueError):
        SignedTerm(3, 0, w("AB"))
    with pytest.raises(ValueError):
        SignedTerm(4, 0, w("AAAB"))
    assert SignedTerm(5, -1, w("AAAAA")).sign == -1


def test_verify_matching_examples(table):
    r0 = verify_matching(0, table=table)
    assert (r0.pair_count, r0.fixed_count) == (0, 1) and r0.fixed[0].path == ()
    r5 = verify_matching(5, table=table)
    assert (r5.pair_count, r5.fixed_count) == (2, 8)
    r8 = verify_matching(8, table=table)
    assert (r8.pair_count, r8.fixed_count) == (36, 34)
    r12 = verify_matching(12, table=table)
    assert r12.fixed_weight_sum() == gs1_sum(12, table)


@pytest.mark.parametrize("n", range(0, 15))
def test_cancellation_properties(table, n):
    report = verify_matching(n, table=table)
    assert report.ok, report.violations[:3]
    assert 2 * report.pair_count + report.fixed_count == report.total_terms
    covered = [t for pair in report.pairs for t in pair] + report.fixed
    assert Counter(covered) == Counter(enumerate_terms(n))
    for a, b in report.pairs:
        assert match_term(a) == b and match_term(b) == a
        assert a.sign != b.sign
        assert a.weight() == b.weight()
    assert all(t.sign > 0 for t in report.fixed)
    assert report.fixed_weight_sum() == gs1_sum(n, table)
    assert report.fixed_count == amateur_sum("p", n) == FIB[n]
    assert set(report.lambda_shifts) <= {-1, 1}


def test_mirrored_encoding_is_rejected_by_the_identity(table):
    report = verify_matching(8, mirrored=True, table=table)
    assert any(v.startswith("weight") for v in report.violations)
