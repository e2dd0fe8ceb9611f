"""Consecutive triples n-1, n, n+1 and the quadruple n, n+1, n+2, n+4."""
from twosquares import consecutive_triple, quad_n124, triple_nonzero_17m5, upgrade_rep

# Setting q = r = 0 leaves (2p^2)^2 + (2p)^2, (2p^2+1)^2, (2p^2+1)^2 + 1.
print(consecutive_triple(3, 0, 0).describe())

# The middle square has a zero part, unless p = 17m + 5: then 17 divides it.
print(triple_nonzero_17m5(0).describe())

# p = q = 0 gives (2r(r-1))^2 as the first term; a factor r1^2 + r2^2 of r
# lets us rewrite that square with two nonzero parts.
cert = consecutive_triple(0, 0, 10)
print(cert.describe())
print(upgrade_rep(cert, -1, 1, 2).describe())

# x^2 + 2 = u^2 + v^2 gives n = x^2 with n+1, n+2, n+4 represented;
# with 5 | m and 5 | r the square itself splits as (3z)^2 + (4z)^2.
print(quad_n124(1, 3).describe())
print(quad_n124(5, 10).describe())
