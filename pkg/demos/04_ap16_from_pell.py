"""The progression n, n+4, ..., n+16 from beta^2 - 3 alpha^2 = -18."""
from twosquares.pell import ap_x_values, gen_pell_solutions, iter_ap_certificates

passing = [s.index for s in gen_pell_solutions(60) if s.alpha**2 % 37 == 7]
print("indices with alpha^2 = 7 mod 37:", passing)

# Indices 1 mod 18 make up the familiar subsequence; 16 mod 18 also qualify,
# so the unrestricted generator finds an extra x between the first two.
print("all:        ", [x for x, _ in ap_x_values(3)])
print("1 mod 18:   ", [x for x, _ in ap_x_values(3, only_1_mod_18=True)])

for _, cert in zip(range(2), iter_ap_certificates()):
    print(cert.describe())
