"""Gaussian binomials: the q-Pascal triangle and what it counts."""

from qalpine import QBinomTable, binomial, box, gaussian_binomial, poly_eval_int, weight_poly

table = QBinomTable()

# The first few rows of the q-Pascal triangle, one coefficient list per cell.
for n in range(6):
    print(n, [list(gaussian_binomial(table, n, k).coeffs) for k in range(n + 1)])

# [n, k] weighs the partitions that fit in a k-by-(n-k) box.
n, k = 7, 3
g = gaussian_binomial(table, n, k)
print(f"[{n} {k}] =", g)
print("box enumeration agrees:", g == weight_poly(box(k, n - k)))

# Setting x = 1 recovers the ordinary binomial coefficient.
print("at x=1:", poly_eval_int(g, 1), "=", binomial(n, k))

# Symmetry and degree.
print("symmetric:", g == gaussian_binomial(table, n, n - k), " degree:", g.degree, "=", k * (n - k))
