"""n, n+1, n+2, n+4, n+5 from solutions of beta^2 - 2 alpha^2 = -1."""
from twosquares.pell import iter_quint_certificates, neg_pell_solutions, quint_x_values

# The orbit of (1, 1) under multiplication by 3 + 2 sqrt 2.
for s in neg_pell_solutions(8):
    flag = "keep" if s.alpha**2 % 5 == 1 else "skip"
    print(f"index {s.index}: alpha={s.alpha:<8} beta={s.beta:<8} {flag}")

# Solutions with alpha^2 = 1 (mod 5) give x = (alpha^2 - 1)/2, a multiple of 5.
print([x for x, _ in quint_x_values(6)])

# alpha = 1 gives x = 0; the generator skips that degenerate case.
for _, cert in zip(range(3), iter_quint_certificates()):
    print(cert.describe())
