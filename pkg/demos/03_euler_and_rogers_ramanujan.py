"""Limits of the alpine identities, as exact checks to a fixed order."""

from qalpine import ExponentKind, euler_E, euler_product, gs1_sum, mod5_product, rr_check, theta_series

D = 30

# Pentagonal number theorem: prod (1 - x^i) is a sparse alternating series.
prod = euler_product(D)
print("prod (1-x^i) =", prod)
print("matches pentagonal sum:", prod == theta_series(ExponentKind.C_SLALOM, D))

# E is the partition generating function.
print("E =", euler_E(12))

# P(n) stabilizes: P(n) and P(n+1) agree through degree n-1.
for n in (5, 10, 15):
    print(n, gs1_sum(n).truncate(n - 1) == gs1_sum(n + 1).truncate(n - 1))

# Jacobi: the theta series with exponents a(lam) is a mod-5 product.
print("J as product:", theta_series(ExponentKind.A_GS1, D) == mod5_product({2, 3, 5}, False, D))

# Rogers-Ramanujan, both identities.
for variant in (1, 2):
    check = rr_check(variant, D)
    print(f"RR{variant}:", check.equal, list(check.sum_side.coeffs)[:15])
