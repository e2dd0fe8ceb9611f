"""Closed-form families: consecutive triples and {n, n+1, n+2, n+4}."""
from __future__ import annotations

from dataclasses import dataclass

from .certificate import SequenceCertificate, Term
from .ntcore import TwoSquareRep


def consecutive_xy(p: int, q: int, r: int) -> tuple[int, int]:
    """(x, y) of the three-parameter consecutive-triple family, n = x**2 + y**2."""
    a = 16 * p**2 * r**2 + 8 * p * r + 4 * r**2 + 1
    b = 4 * p**2 * r**2 - 4 * p**2 * r + 2 * p * r + r**2 - p - r
    x = 4 * r * a * q**2 - 8 * r * b * q - 2 * r * (4 * p**2 * r - 2 * p**2 + 2 * p + r - 1)
    y = (
        -2 * (4 * p * r + 1) * a * q**2
        + 4 * (4 * p * r + 1) * b * q
        + 16 * p**3 * r**2 - 8 * p**3 * r + 8 * p**2 * r + 4 * p * r**2
        - 2 * p**2 - 4 * p * r - 1
    )
    return x, y


def consecutive_triple(p: int, q: int, r: int) -> SequenceCertificate:
    """n - 1, n, n + 1 as sums of two squares.

    The neighbours use the shifts (u1, u2) = (4pr + 1, 2r) for n + 1 and
    (v1, v2) = (8pqr + 2p + 2q, 4qr + 1) for n - 1.
    """
    x, y = consecutive_xy(p, q, r)
    u1, u2 = 4 * p * r + 1, 2 * r
    v1, v2 = 8 * p * q * r + 2 * p + 2 * q, 4 * q * r + 1
    reps = {-1: (x + v1, y + v2), 0: (x, y), 1: (x + u1, y + u2)}
    params = {"p": p, "q": q, "r": r, "x": x, "y": y}
    return SequenceCertificate.build(x * x + y * y, "consecutive", reps, params).check()


def triple_nonzero_17m5(m: int) -> SequenceCertificate:
    """Consecutive triple with p = 17m + 5, q = r = 0, every rep nonzero.

    The middle term is (2p**2 + 1)**2 = 289 * s**2 with s = 34m**2 + 20m + 3,
    and 17**2 = 8**2 + 15**2 splits it.
    """
    p = 17 * m + 5
    base = consecutive_triple(p, 0, 0)
    s = 34 * m * m + 20 * m + 3
    reps = {t.offset: t.rep.as_tuple() for t in base.terms}
    reps[0] = (8 * s, 15 * s)
    params = dict(base.params, m=m, s=s)
    return SequenceCertificate.build(base.n, "consecutive:17m+5", reps, params).check()


def upgrade_rep(
    cert: SequenceCertificate, offset: int, r1: int, r2: int
) -> SequenceCertificate:
    """Replace the rep (0, x) at ``offset`` by a nonzero one.

    Needs d = r1**2 + r2**2 to divide x; then
    x**2 = (z * (r1**2 - r2**2))**2 + (2 * z * r1 * r2)**2 with z = x / d.
    Both parts are nonzero only when r1, r2 are nonzero and |r1| != |r2|.
    """
    if r1 == 0 or r2 == 0 or abs(r1) == abs(r2):
        raise ValueError(f"({r1}, {r2}) cannot give a nonzero split")
    term = cert.term(offset)
    if term.rep.a != 0:
        raise ValueError(f"term at offset {offset} is not a bare square")
    x = term.rep.b
    d = r1 * r1 + r2 * r2
    if x % d:
        raise ValueError(f"{r1}^2 + {r2}^2 = {d} does not divide {x}")
    z = x // d
    new = TwoSquareRep.of(z * (r1 * r1 - r2 * r2), 2 * z * r1 * r2)
    terms = tuple(
        Term(t.offset, t.value, new) if t.offset == offset else t for t in cert.terms
    )
    params = dict(cert.params, r1=r1, r2=r2)
    return SequenceCertificate(cert.n, cert.method, terms, params).check()


@dataclass(frozen=True)
class X2Plus2Solution:
    m: int
    r: int
    t: int
    x: int
    u: int
    v: int


def solve_x2_plus_2(m: int, r: int) -> X2Plus2Solution:
    """A solution of x**2 + 2 == u**2 + v**2 from two free integers.

    Starts from (2r(r-1))**2 + 2 = (2r**2 - 2r - 1)**2 + (2r - 1)**2, shifts
    each variable linearly in t and takes the nonzero root
    t = 2(m - r + 1)(m - r - 1).
    """
    t = 2 * (m - r + 1) * (m - r - 1)
    x = 2 * m * (m - 1) * t + 2 * r * (r - 1)
    u = (2 * m * m - 2 * m - 1) * t + 2 * r * r - 2 * r - 1
    v = (2 * m - 1) * t + 2 * r - 1
    return X2Plus2Solution(m, r, t, x, u, v)


def x2_plus_2_closed(m: int, r: int) -> tuple[int, int, int]:
    """The same (x, u, v) expanded as polynomials in m and r."""
    x = (4 * m**2 - 4 * m + 2) * r**2 - (8 * m**3 - 8 * m**2 + 2) * r + 4 * m * (m + 1) * (m - 1) ** 2
    u = (
        4 * m * (m - 1) * r**2
        - (8 * m**3 - 8 * m**2 - 4 * m + 2) * r
        + 4 * m**4 - 4 * m**3 - 6 * m**2 + 4 * m + 1
    )
    v = (4 * m - 2) * r**2 - (8 * m**2 - 4 * m - 2) * r + 4 * m**3 - 2 * m**2 - 4 * m + 1
    return x, u, v


def quad_n124(m: int, r: int) -> SequenceCertificate:
    """n = x**2 with n, n+1, n+2, n+4 all sums of two squares.

    When 5 divides x the square itself is split as (3z)**2 + (4z)**2.
    """
    sol = solve_x2_plus_2(m, r)
    x = abs(sol.x)
    first = (3 * (x // 5), 4 * (x // 5)) if x and x % 5 == 0 else (0, x)
    reps = {0: first, 1: (1, x), 2: (sol.u, sol.v), 4: (2, x)}
    params = {"m": m, "r": r, "t": sol.t, "x": sol.x, "u": sol.u, "v": sol.v}
    return SequenceCertificate.build(x * x, "quad", reps, params).check()
