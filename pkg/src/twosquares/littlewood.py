"""Integers n with n, n + h and n + k all sums of two squares.

Write n = x**2 + y**2, n + h = (x + u1)**2 + (y + u2)**2 and
n + k = (x + v1)**2 + (y + v2)**2.  Subtracting gives two linear equations in
(x, y)::

    2*u1*x + 2*u2*y = h - u1**2 - u2**2
    2*v1*x + 2*v2*y = k - v1**2 - v2**2

whose determinant is 2*(u1*v2 - u2*v1).  The two parameter families below
keep u1*v2 - u2*v1 at 1 or 2, and the parities of (f, g, t) are chosen from
the residues of h and k so that the remaining factor of 2 or 4 divides the
numerators.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .certificate import SequenceCertificate
from .ntcore import factorize


class SingularParams(ValueError):
    pass


class NonIntegralSolution(ArithmeticError):
    pass


class DegenerateOffsets(ValueError):
    pass


@dataclass(frozen=True)
class ParamSet:
    u1: int
    u2: int
    v1: int
    v2: int

    @property
    def det(self) -> int:
        return self.u1 * self.v2 - self.u2 * self.v1


class Family(enum.Enum):
    F1 = 1  # determinant 1
    F2 = 2  # determinant 2


@dataclass(frozen=True)
class FamilyParams:
    f: int
    g: int
    t: int
    family: Family


class Case(enum.Enum):
    ODD_ODD = "ODD_ODD"
    EVEN_ODD = "EVEN_ODD"
    MOD4_2_0 = "MOD4_2_0"
    MOD4_2_2 = "MOD4_2_2"


@dataclass(frozen=True)
class DispatchPlan:
    case: Case
    swapped: bool
    scale: int
    family_params: FamilyParams
    h: int  # offsets handed to the core solver, after reduction and swap
    k: int


def expand_family(fp: FamilyParams) -> ParamSet:
    f, g, t = fp.f, fp.g, fp.t
    if fp.family is Family.F1:
        return ParamSet(f * t + 1, t, f * g * t + f + g, g * t + 1)
    return ParamSet(f * t + 1, t, f * g * t + 2 * f + g, g * t + 2)


def solve_xy(h: int, k: int, params: ParamSet) -> tuple[int, int]:
    """Integral (x, y) solving the two linear equations, or raise."""
    u1, u2, v1, v2 = params.u1, params.u2, params.v1, params.v2
    d = params.det
    if d == 0:
        raise SingularParams(f"{params} has zero determinant")
    x_num = -(u1 * u1 * v2 + u2 * u2 * v2 - u2 * v1 * v1 - u2 * v2 * v2 - h * v2 + k * u2)
    y_num = u1 * u1 * v1 - u1 * v1 * v1 - u1 * v2 * v2 + u2 * u2 * v1 - h * v1 + k * u1
    x, rx = divmod(x_num, 2 * d)
    y, ry = divmod(y_num, 2 * d)
    if rx or ry:
        raise NonIntegralSolution(
            f"(h, k) = ({h}, {k}) with {params}: 2*det = {2 * d} does not divide "
            f"the numerators ({x_num}, {y_num})"
        )
    if (u1 * u1 + 2 * u1 * x + u2 * u2 + 2 * u2 * y != h
            or v1 * v1 + 2 * v1 * x + v2 * v2 + 2 * v2 * y != k):
        raise ArithmeticError(f"residual check failed for {params}")
    return x, y


def _square_part(g: int) -> int:
    """Largest m with m**2 dividing g."""
    m = 1
    for p, e in factorize(g):
        m *= p ** (e // 2)
    return m


def dispatch(
    h: int, k: int, p: int = 0, q: int = 0, r: int = 0, *, reduce_squares: bool = False
) -> DispatchPlan:
    """Pick the parameter family and map the free (p, q, r) onto (f, g, t).

    Common factors of 4 are always divided out of (h, k) first and returned
    as ``scale``.  With ``reduce_squares`` the largest common square is
    removed instead, so ``scale`` need not be a power of 2.
    """
    if h == 0 or k == 0 or h == k:
        raise DegenerateOffsets(f"offsets must be distinct and nonzero, got h={h}, k={k}")
    scale = 1
    if reduce_squares:
        scale = _square_part(gcd(h, k))
        h, k = h // (scale * scale), k // (scale * scale)
    while h % 4 == 0 and k % 4 == 0:
        h, k, scale = h // 4, k // 4, scale * 2

    swapped = False
    if h % 2 and k % 2:
        case, fp = Case.ODD_ODD, FamilyParams(2 * p, 2 * q, 2 * r, Family.F1)
    elif h % 2 != k % 2:
        if h % 2:
            h, k, swapped = k, h, True
        case, fp = Case.EVEN_ODD, FamilyParams(2 * p, 2 * q, 2 * r + 1, Family.F1)
    else:
        if h % 4 == 0:
            h, k, swapped = k, h, True
        if k % 4 == 0:
            case, fp = Case.MOD4_2_0, FamilyParams(2 * p, 2 * q, 2 * r + 1, Family.F2)
        else:
            case = Case.MOD4_2_2
            fp = FamilyParams(4 * p + 2, 4 * q + 1, 4 * r + 1, Family.F2)
    return DispatchPlan(case, swapped, scale, fp, h, k)


def construct(
    h: int, k: int, p: int = 0, q: int = 0, r: int = 0, *, reduce_squares: bool = False
) -> SequenceCertificate:
    """Certificate for n, n + h, n + k, one rep per term.

    Offsets are reported as given by the caller (sorted ascending), whatever
    swapping or rescaling the dispatcher did internally.
    """
    plan = dispatch(h, k, p, q, r, reduce_squares=reduce_squares)
    ps = expand_family(plan.family_params)
    x, y = solve_xy(plan.h, plan.k, ps)
    m = plan.scale
    inner = {
        0: (x, y),
        plan.h: (x + ps.u1, y + ps.u2),
        plan.k: (x + ps.v1, y + ps.v2),
    }
    reps = {off * m * m: (a * m, b * m) for off, (a, b) in inner.items()}
    fp = plan.family_params
    params = {
        "h": h, "k": k, "p": p, "q": q, "r": r,
        "f": fp.f, "g": fp.g, "t": fp.t,
        "u1": ps.u1, "u2": ps.u2, "v1": ps.v1, "v2": ps.v2,
        "x": x, "y": y, "scale": m, "swapped": int(plan.swapped),
    }
    cert = SequenceCertificate.build(
        (x * x + y * y) * m * m, f"littlewood:{plan.case.value}", reps, params
    )
    return cert.check()


def construct_from_params(h: int, k: int, params: ParamSet) -> SequenceCertificate:
    """Certificate straight from a chosen (u1, u2, v1, v2), bypassing dispatch."""
    if h == 0 or k == 0 or h == k:
        raise DegenerateOffsets(f"offsets must be distinct and nonzero, got h={h}, k={k}")
    x, y = solve_xy(h, k, params)
    reps = {
        0: (x, y),
        h: (x + params.u1, y + params.u2),
        k: (x + params.v1, y + params.v2),
    }
    raw = {"h": h, "k": k, "u1": params.u1, "u2": params.u2,
           "v1": params.v1, "v2": params.v2, "x": x, "y": y}
    return SequenceCertificate.build(x * x + y * y, "littlewood:direct", reps, raw).check()
