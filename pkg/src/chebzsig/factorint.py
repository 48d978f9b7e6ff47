"""Primality testing and budgeted factorization for desk-scale integers."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from math import gcd, isqrt, prod
from typing import Optional

# First twelve primes as Miller-Rabin bases: deterministic for n < 3.3 * 10^24,
# which covers everything below 2^64.
DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 1 << 64
PROBABLE_ROUNDS = 40

DEFAULT_TRIAL_BOUND = 10_000
DEFAULT_RHO_BUDGET = 1_000_000

_SMALL_PRIMES: list[int] = []
_SIEVED_TO = 0


def _small_primes(bound: int) -> list[int]:
    """Primes up to at least ``bound`` (the cached list may run further)."""
    global _SMALL_PRIMES, _SIEVED_TO
    if _SIEVED_TO >= bound:
        return _SMALL_PRIMES
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    _SMALL_PRIMES = [i for i, flag in enumerate(sieve) if flag]
    _SIEVED_TO = bound
    return _SMALL_PRIMES


class Certainty(enum.Enum):
    PROVEN = "proven"
    PROBABLE = "probable"


@dataclass(frozen=True)
class Primality:
    """Outcome of a primality test; truthy iff the number is (probably) prime."""

    prime: bool
    certainty: Certainty

    def __bool__(self) -> bool:
        return self.prime


def _strong_probable_prime(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> Primality:
    """Miller-Rabin test.

    Deterministic below 2^64. Above that the fixed bases are followed by
    PROBABLE_ROUNDS bases drawn from a generator seeded by n, and a positive
    answer is flagged PROBABLE.
    """
    if n < 2:
        return Primality(False, Certainty.PROVEN)
    for p in DETERMINISTIC_WITNESSES:
        if n % p == 0:
            return Primality(n == p, Certainty.PROVEN)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in DETERMINISTIC_WITNESSES:
        if not _strong_probable_prime(n, d, s, a):
            return Primality(False, Certainty.PROVEN)
    if n < DETERMINISTIC_LIMIT:
        return Primality(True, Certainty.PROVEN)
    rng = random.Random(n)
    for _ in range(PROBABLE_ROUNDS):
        if not _strong_probable_prime(n, d, s, rng.randrange(2, n - 1)):
            return Primality(False, Certainty.PROVEN)
    return Primality(True, Certainty.PROBABLE)


@dataclass
class Factorization:
    n: int
    factors: list[tuple[int, int]] = field(default_factory=list)
    certainty: Certainty = Certainty.PROVEN
    cofactor: Optional[int] = None

    @property
    def complete(self) -> bool:
        return self.cofactor is None

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        return prod(p**e for p, e in self.factors) * (self.cofactor or 1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors]
        if self.cofactor is not None:
            parts.append(f"C{self.cofactor}")
        return " * ".join(parts) if parts else "1"


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2 or k == 1:
        return n
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > n:
        r -= 1
    return r


def perfect_power(n: int) -> Optional[tuple[int, int]]:
    """Return (b, k) with b**k == n for the smallest prime k that works, or None."""
    if n < 4:
        return None
    for k in _small_primes(max(2, n.bit_length())):
        if k > n.bit_length():
            break
        b = integer_root(n, k)
        if b**k == n:
            return b, k
    return None


def pollard_brent(n: int, budget: int, seed: int = 0) -> Optional[int]:
    """Find a nontrivial factor of the odd composite n with Brent's variant of
    Pollard rho, or None once ``budget`` iterations are spent."""
    rng = random.Random(seed ^ n)
    spent = 0
    m = 128
    while spent < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r + k
            r *= 2
        if g == n:
            # Batched product overshot; backtrack one step at a time.
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if 1 < g < n:
            return g
    return None


def factorize(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> Factorization:
    """Trial division up to ``trial_bound``, then Pollard-Brent on what is left.

    Composites that survive the rho budget are multiplied into ``cofactor``.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    found: dict[int, int] = {}
    certainty = Certainty.PROVEN
    rest = n
    for p in _small_primes(trial_bound):
        if p > trial_bound or p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    leftover = 1
    stack = [(rest, 1)] if rest > 1 else []
    while stack:
        m, mult = stack.pop()
        check = is_prime(m)
        if check:
            found[m] = found.get(m, 0) + mult
            if check.certainty is Certainty.PROBABLE:
                certainty = Certainty.PROBABLE
            continue
        pp = perfect_power(m)
        if pp is not None:
            b, k = pp
            stack.append((b, mult * k))
            continue
        d = pollard_brent(m, rho_budget)
        if d is None:
            leftover *= m**mult
            continue
        stack.append((d, mult))
        stack.append((m // d, mult))
    factors = sorted(found.items())
    return Factorization(n, factors, certainty, leftover if leftover > 1 else None)


def trial_factor(n: int) -> dict[int, int]:
    """Plain trial division; slow, used as a reference."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
