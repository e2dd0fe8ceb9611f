"""Exact arithmetic oracle: factorization, primality and sums of two squares.

Everything here works on Python ints of any size.  Factoring is bounded by an
explicit iteration budget so callers get a deterministic
:class:`FactorizationTimeout` instead of an open-ended computation; values too
large to factor can still be checked with :func:`verify_rep`, which is pure
arithmetic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cache
from math import gcd, isqrt, prod

TRIAL_LIMIT = 10**6
BRUTE_FORCE_CUTOFF = 10**6
DEFAULT_BUDGET = 2_000_000
BUDGET_ENV_VAR = "TSS_FACTOR_BUDGET"

# Bases 2..41 are a deterministic witness set below this bound.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_BLOCK_SIZE = 512


class FactorizationTimeout(ArithmeticError):
    """A composite cofactor survived trial division and the rho budget."""

    def __init__(self, n: int, cofactor: int, budget: int):
        self.n = n
        self.cofactor = cofactor
        self.budget = budget
        super().__init__(
            f"could not factor {n}: composite cofactor with "
            f"{len(str(cofactor))} digits left after {budget} rho iterations"
        )


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def product(self) -> int:
        return prod(p**e for p, e in self.factors)


@dataclass(frozen=True)
class TwoSquareRep:
    """The pair (a, b) claimed to satisfy a**2 + b**2 == value.

    Construction does not validate the claim; use :func:`verify_rep`.
    """

    a: int
    b: int
    value: int

    @classmethod
    def of(cls, a: int, b: int) -> "TwoSquareRep":
        """Normalize signs and order, computing the value."""
        a, b = sorted((abs(a), abs(b)))
        return cls(a, b, a * a + b * b)

    @property
    def nonzero(self) -> bool:
        return self.a > 0

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


def verify_rep(rep: TwoSquareRep) -> bool:
    """Exact check of a representation; never factors, never raises."""
    try:
        a, b, value = rep.a, rep.b, rep.value
        if not all(type(v) is int for v in (a, b, value)):
            return False
        return 0 <= a <= b and a * a + b * b == value
    except AttributeError:
        return False


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw.strip())
    if value < 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be nonnegative, got {raw!r}")
    return value


# ---------------------------------------------------------------- primality

@cache
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@cache
def _prime_blocks() -> tuple[tuple[tuple[int, ...], int], ...]:
    primes = _small_primes()
    blocks = []
    for i in range(0, len(primes), _BLOCK_SIZE):
        chunk = primes[i : i + _BLOCK_SIZE]
        blocks.append((chunk, prod(chunk)))
    return tuple(blocks)


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set.

    Deterministic below 3.3e24; above that the witness set is extended and the
    answer is a (very strong) probable-prime verdict.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + _MR_EXTRA_BASES
    return all(_strong_probable_prime(n, a) for a in bases)


# ------------------------------------------------------------ factorization

def _trial_divide(n: int, out: dict[int, int]) -> int:
    """Strip every prime below TRIAL_LIMIT, one gcd per block of primes."""
    for chunk, chunk_product in _prime_blocks():
        if chunk[0] * chunk[0] > n:
            break
        g = gcd(n, chunk_product)
        if g == 1:
            continue
        for p in chunk:
            if g % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out[p] = out.get(p, 0) + e
    return n


class _Budget:
    def __init__(self, total: int):
        self.left = total


def _brent(n: int, c: int, budget: _Budget) -> int | None:
    """Brent's cycle-finding rho with polynomial x**2 + c; deterministic start."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(m, r - k)
            if budget.left < steps:
                return None
            budget.left -= steps
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int, budget: _Budget) -> int | None:
    root = isqrt(n)
    if root * root == n:
        return root
    c = 1
    while budget.left > 0:
        d = _brent(n, c, budget)
        if d is None:
            return None
        if d != n:
            return d
        c += 1
    return None


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Prime factorization of a positive integer.

    Trial division below 10**6, then Brent's rho on what is left.  ``budget``
    caps the total number of rho iterations (default: ``TSS_FACTOR_BUDGET`` or
    :data:`DEFAULT_BUDGET`).
    """
    if type(n) is not int:
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    total = default_budget() if budget is None else budget
    found: dict[int, int] = {}
    rest = _trial_divide(n, found)
    stack = [rest] if rest > 1 else []
    meter = _Budget(total)
    while stack:
        m = stack.pop()
        if m < TRIAL_LIMIT * TRIAL_LIMIT or is_prime(m):
            # no factor below TRIAL_LIMIT survives, so small cofactors are prime
            found[m] = found.get(m, 0) + 1
            continue
        d = _split(m, meter)
        if d is None:
            raise FactorizationTimeout(n, m, total)
        stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(found.items())))


# ------------------------------------------------------------ two squares

def _brute_reps(n: int) -> list[tuple[int, int]]:
    out = []
    for a in range(isqrt(n // 2) + 1):
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            out.append((a, b))
    return out


def sqrt_minus_one(p: int) -> int:
    """A square root of -1 modulo a prime p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    return pow(c, (p - 1) // 4, p)


def prime_two_squares(p: int) -> tuple[int, int]:
    """(a, b) with a < b and a**2 + b**2 == p, for p = 2 or a prime p = 1 (mod 4).

    Hermite-Serret: run Euclid on (p, sqrt(-1) mod p) until the remainder
    drops below sqrt(p).
    """
    if p == 2:
        return (1, 1)
    x = sqrt_minus_one(p)
    a, b = p, x
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rest = p - b * b
    c = isqrt(rest)
    if c * c != rest:
        raise ArithmeticError(f"Hermite-Serret failed for {p}; is it prime?")
    return tuple(sorted((b, c)))


def _gmul(z: tuple[int, int], w: tuple[int, int]) -> tuple[int, int]:
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def _gpow(z: tuple[int, int], e: int) -> tuple[int, int]:
    out = (1, 0)
    for _ in range(e):
        out = _gmul(out, z)
    return out


def _reps_from_factorization(fac: Factorization) -> list[tuple[int, int]]:
    scale = 1
    base = (1, 0)
    split_primes = []
    for p, e in fac:
        if p == 2:
            base = _gmul(base, _gpow((1, 1), e))
        elif p % 4 == 3:
            if e % 2:
                return []
            scale *= p ** (e // 2)
        else:
            split_primes.append((p, e))
    candidates = [base]
    for p, e in split_primes:
        a, b = prime_two_squares(p)
        pi, pibar = (a, b), (a, -b)
        powers = [
            _gmul(_gpow(pi, j), _gpow(pibar, e - j)) for j in range(e + 1)
        ]
        candidates = [_gmul(z, w) for z in candidates for w in powers]
    reps = {tuple(sorted((abs(x) * scale, abs(y) * scale))) for x, y in candidates}
    return sorted(reps)


def _check_nonnegative(n: int) -> None:
    if type(n) is not int:
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")


def two_square_decompositions(
    n: int, *, method: str = "auto", budget: int | None = None
) -> list[TwoSquareRep]:
    """All essentially distinct (a, b), 0 <= a <= b, with a**2 + b**2 == n.

    ``method`` is ``"brute"``, ``"factor"`` (Gaussian-integer composition of
    per-prime representations) or ``"auto"`` (brute force below 10**6).
    The result is sorted by ``a`` and empty exactly when n is not a sum of
    two squares.
    """
    _check_nonnegative(n)
    if method not in ("auto", "brute", "factor"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        pairs = [(0, 0)]
    elif method == "brute" or (method == "auto" and n < BRUTE_FORCE_CUTOFF):
        pairs = _brute_reps(n)
    else:
        pairs = _reps_from_factorization(factorize(n, budget))
    return [TwoSquareRep(a, b, n) for a, b in pairs]


def is_sum_of_two_squares(
    n: int, *, method: str = "factor", budget: int | None = None
) -> bool:
    """Fermat's criterion: every prime 3 (mod 4) divides n to an even power."""
    _check_nonnegative(n)
    if method == "brute":
        return n == 0 or bool(_brute_reps(n))
    if method not in ("auto", "factor"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        return True
    odd = n >> ((n & -n).bit_length() - 1)
    if odd % 4 == 3:
        return False
    return all(e % 2 == 0 for p, e in factorize(odd, budget) if p % 4 == 3)


def has_nonzero_two_square_rep(
    n: int, *, method: str = "auto", budget: int | None = None
) -> bool:
    return any(
        rep.a > 0 for rep in two_square_decompositions(n, method=method, budget=budget)
    )
