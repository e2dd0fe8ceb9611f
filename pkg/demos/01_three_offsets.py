"""n, n+h, n+k all sums of two squares, for any offsets h and k."""
from twosquares import construct, dispatch, is_sum_of_two_squares

# The dispatcher looks at h, k mod 4 and picks a parameter family whose
# linear system has an integral solution.  p, q, r are free.
for h, k in [(1, -1), (2, 5), (8, 12), (6, -2), (-7, 33)]:
    plan = dispatch(h, k, 1, 2, 3)
    print(f"h={h:>3} k={k:>3}  case={plan.case.value:<9} scale={plan.scale} swapped={plan.swapped}")

# Each certificate carries one explicit pair per term.
cert = construct(8, 12, 1, 2, 3)
print()
print(cert.describe())

# Sanity check against the factorization oracle (values are small enough).
print("oracle agrees:", all(is_sum_of_two_squares(v) for v in cert.values))

# Different (p, q, r) give different n for the same offsets.
print()
for params in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (-3, 2, 5)]:
    print(params, construct(3, 7, *params).n)
