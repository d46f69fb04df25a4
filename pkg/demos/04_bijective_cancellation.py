"""Cancelling the GS1 sum term by term with leftmatch/rightmatch."""

from qalpine import enumerate_terms, gs1_sum, match_term, verify_matching

n = 8
terms = enumerate_terms(n)
print(f"row {n}: {len(terms)} signed terms")

report = verify_matching(n)
print(f"{report.pair_count} canceling pairs, {report.fixed_count} survivors, ok = {report.ok}")
print("lambda shifts seen:", report.lambda_shifts)

# A few pairs: opposite signs, equal weights.
for a, b in report.pairs[:5]:
    print(f"  {a} (w={a.weight()})  <->  {b} (w={b.weight()})")

# The survivors add up to P(8) on the nose.
print("survivors sum to P(8):", report.fixed_weight_sum() == gs1_sum(n))

# Matching is an involution.
t = report.pairs[0][0]
print("involution:", match_term(match_term(t)) == t)

# Survivor counts are Fibonacci numbers.
print([verify_matching(m).fixed_count for m in range(13)])
