"""The slalom and giant-slalom identities, amateur and pro."""

from qalpine import amateur_sum, gs1_sum, gs2_sum, slalom_sum, verify_identity
from qalpine.alpine import signed_cells

# Amateur rows: signed binomials picked out of Pascal's triangle.
for n in range(9):
    cells = " ".join(f"{'+-'[s < 0]}C({n},{c})" for _, c, s in signed_cells("gs1", n))
    print(f"n={n}: {cells:<30} p(n) = {amateur_sum('p', n)}")

print("q(0..12):", [amateur_sum("q", n) for n in range(13)])
print("r(0..12):", [amateur_sum("r", n) for n in range(13)])

# Pro versions: the same sums over Gaussian binomials, weighted by x^a(lam).
for n in range(7):
    print(f"P({n}) = {gs1_sum(n)}")
print("Q(5) =", gs2_sum(5))
print("R(20) =", slalom_sum(20))

# Summation versus recurrence, for every row up to 50.
for kind in ("gs1", "gs2", "slalom"):
    report = verify_identity(kind, 50)
    print(kind, "all pass:", report.all_pass)
