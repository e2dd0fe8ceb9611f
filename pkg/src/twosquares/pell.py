"""Pell-equation generators for the five-term sequences.

Two orbits of integer solutions are walked with exact recurrences:

* NEG2: beta**2 - 2*alpha**2 = -1, from (1, 1), multiplying by 3 + 2*sqrt(2)
  (so index r is (1 + sqrt 2)**(2r - 1)).
* GEN3: beta**2 - 3*alpha**2 = -18, the orbit (3 + 3*sqrt 3)(2 + sqrt 3)**r.

A NEG2 solution with alpha**2 = 1 (mod 5) gives x = (alpha**2 - 1)/2, a
multiple of 5, and n = x**2 starts a run n, n+1, n+2, n+4, n+5 of sums of two
nonzero squares.  A GEN3 solution with alpha**2 = 7 (mod 37) gives
x = (alpha**2 - 7)/2, a multiple of 37, and n = x**2 starts the progression
n, n+4, ..., n+16.  The certificates are polynomial identities in (x, alpha,
beta), so no factoring is needed however large x gets.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import count as _count, islice
from typing import Iterator

from .certificate import SequenceCertificate


class PellKind(enum.Enum):
    NEG2 = "NEG2"
    GEN3 = "GEN3"


class MalformedSource(ValueError):
    pass


@dataclass(frozen=True)
class PellSolution:
    alpha: int
    beta: int
    index: int
    kind: PellKind

    def __post_init__(self):
        if self.residual() != 0:
            raise MalformedSource(f"{self} does not satisfy its equation")

    def residual(self) -> int:
        if self.kind is PellKind.NEG2:
            return self.beta**2 - 2 * self.alpha**2 + 1
        return self.beta**2 - 3 * self.alpha**2 + 18


GEN3_SEED = (3, 3)


def iter_neg_pell() -> Iterator[PellSolution]:
    alpha, beta = 1, 1
    for index in _count(1):
        yield PellSolution(alpha, beta, index, PellKind.NEG2)
        alpha, beta = 2 * beta + 3 * alpha, 3 * beta + 4 * alpha


def iter_gen_pell() -> Iterator[PellSolution]:
    """Index 1 onward; the seed (3, 3) itself is index 0 and is not yielded."""
    alpha, beta = GEN3_SEED
    for index in _count(1):
        alpha, beta = beta + 2 * alpha, 2 * beta + 3 * alpha
        yield PellSolution(alpha, beta, index, PellKind.GEN3)


def neg_pell_solutions(count: int) -> list[PellSolution]:
    _check_count(count)
    return list(islice(iter_neg_pell(), count))


def gen_pell_solutions(count: int) -> list[PellSolution]:
    _check_count(count)
    return list(islice(iter_gen_pell(), count))


def passes_quint_filter(sol: PellSolution) -> bool:
    return sol.alpha * sol.alpha % 5 == 1


def passes_ap_filter(sol: PellSolution) -> bool:
    return sol.alpha * sol.alpha % 37 == 7


def iter_quint_x() -> Iterator[tuple[int, PellSolution]]:
    for sol in iter_neg_pell():
        if passes_quint_filter(sol):
            x = (sol.alpha**2 - 1) // 2
            if x % 5:
                raise ArithmeticError(f"x = {x} from {sol} is not a multiple of 5")
            yield x, sol


def iter_ap_x(only_1_mod_18: bool = False) -> Iterator[tuple[int, PellSolution]]:
    """x values for the progression, ascending.

    Every solution passing the mod-37 test is emitted.  ``only_1_mod_18``
    restricts to indices 1 (mod 18), the subsequence 37, 1517...337, ...;
    indices 16 (mod 18) also pass the filter and are skipped in that mode.
    """
    for sol in iter_gen_pell():
        if only_1_mod_18 and sol.index % 18 != 1:
            continue
        if passes_ap_filter(sol):
            x = (sol.alpha**2 - 7) // 2
            if x % 37:
                raise ArithmeticError(f"x = {x} from {sol} is not a multiple of 37")
            yield x, sol


def quint_x_values(count: int) -> list[tuple[int, PellSolution]]:
    _check_count(count)
    return list(islice(iter_quint_x(), count))


def ap_x_values(count: int, *, only_1_mod_18: bool = False) -> list[tuple[int, PellSolution]]:
    _check_count(count)
    return list(islice(iter_ap_x(only_1_mod_18), count))


def quint_certificate(x: int, source: PellSolution) -> SequenceCertificate:
    """Reps for x**2 + {0, 1, 2, 4, 5} using 2x + 1 = alpha**2, 4x + 1 = beta**2."""
    a, b = source.alpha, source.beta
    if source.kind is not PellKind.NEG2 or a * a != 2 * x + 1 or b * b != 2 * a * a - 1:
        raise MalformedSource(f"{source} does not match x = {x}")
    if x <= 0 or x % 5:
        raise MalformedSource(f"x = {x} must be a positive multiple of 5")
    z = x // 5
    reps = {0: (3 * z, 4 * z), 1: (1, x), 2: (a, x - 1), 4: (2, x), 5: (b, x - 2)}
    params = {"x": x, "alpha": a, "beta": b, "index": source.index}
    return SequenceCertificate.build(x * x, "quint", reps, params).check()


def ap_certificate(x: int, source: PellSolution) -> SequenceCertificate:
    """Reps for x**2 + {0, 4, 8, 12, 16} using 2x + 7 = alpha**2, 6x + 3 = beta**2."""
    a, b = source.alpha, source.beta
    if source.kind is not PellKind.GEN3 or a * a != 2 * x + 7 or b * b != 3 * a * a - 18:
        raise MalformedSource(f"{source} does not match x = {x}")
    if x <= 0 or x % 37:
        raise MalformedSource(f"x = {x} must be a positive multiple of 37")
    z = x // 37
    reps = {0: (12 * z, 35 * z), 4: (2, x), 8: (a, x - 1), 12: (b, x - 3), 16: (4, x)}
    params = {"x": x, "alpha": a, "beta": b, "index": source.index}
    return SequenceCertificate.build(x * x, "ap16", reps, params).check()


def iter_quint_certificates() -> Iterator[SequenceCertificate]:
    """Nondegenerate quint certificates in ascending n (x = 0 is skipped)."""
    for x, sol in iter_quint_x():
        if x > 0:
            yield quint_certificate(x, sol)


def iter_ap_certificates(only_1_mod_18: bool = False) -> Iterator[SequenceCertificate]:
    for x, sol in iter_ap_x(only_1_mod_18):
        yield ap_certificate(x, sol)


def _check_count(count: int) -> None:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
