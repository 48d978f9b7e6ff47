"""Chebyshev polynomials of the first kind over the integers.

Values are computed with a doubling ladder on the pair (T_k, T_{k+1}):

    T_{2k}   = 2 T_k^2 - 1
    T_{2k+1} = 2 T_k T_{k+1} - x

which needs O(log n) multiplications instead of the O(n) of the three-term
recurrence T_{k+2} = 2x T_{k+1} - T_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Optional

from .polynomial import IntegralityViolation, IntPolynomial


@dataclass(frozen=True)
class ChebPair:
    """(T_n(x), T_{n+1}(x)) at a fixed x, optionally reduced mod ``modulus``."""

    n: int
    x: int
    t_n: int
    t_n1: int
    modulus: Optional[int] = None

    def step(self) -> ChebPair:
        """Advance one index with the three-term recurrence."""
        nxt = 2 * self.x * self.t_n1 - self.t_n
        if self.modulus is not None:
            nxt %= self.modulus
        return ChebPair(self.n + 1, self.x, self.t_n1, nxt, self.modulus)


def cheb_pair(n: int, x: int, modulus: Optional[int] = None) -> ChebPair:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if modulus is not None:
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        x %= modulus

    a, b = 1, x  # T_k, T_{k+1} with k = 0
    for bit in bin(n)[2:] if n else "":
        if bit == "0":
            a, b = 2 * a * a - 1, 2 * a * b - x
        else:
            a, b = 2 * a * b - x, 2 * b * b - 1
        if modulus is not None:
            a %= modulus
            b %= modulus
    if modulus is not None:
        a %= modulus
        b %= modulus
    return ChebPair(n, x, a, b, modulus)


def cheb_eval(n: int, x: int) -> int:
    """Exact T_n(x)."""
    return cheb_pair(n, x).t_n


def cheb_eval_mod(n: int, x: int, m: int) -> int:
    """T_n(x) mod m, as a residue in [0, m)."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return cheb_pair(n, x, m).t_n


def cheb_eval_linear(n: int, x: int, modulus: Optional[int] = None) -> int:
    """T_n(x) by n steps of the three-term recurrence (reference path)."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    pair = ChebPair(0, x, 1 if modulus is None else 1 % modulus,
                    x if modulus is None else x % modulus, modulus)
    for _ in range(n):
        pair = pair.step()
    return pair.t_n


@lru_cache(maxsize=None)
def _cheb_coeffs(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    prev, cur = [1], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return tuple(cur)


def cheb_poly(n: int) -> IntPolynomial:
    """Coefficient vector of T_n."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return IntPolynomial(_cheb_coeffs(n))


def shifted_coeff(n: int, k: int) -> int:
    """Coefficient of x^k in T_n(x + 1), from the closed form

        2^k * prod_{i<k} (n^2 - i^2) / (2k)!

    The division is checked to be exact.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    num = (1 << k) * prod(n * n - i * i for i in range(k))
    q, r = divmod(num, factorial(2 * k))
    if r:
        raise IntegralityViolation(f"shifted coefficient ({n}, {k}) is not an integer")
    return q


def shifted_poly(n: int) -> IntPolynomial:
    """T_n(x + 1) assembled from the closed-form coefficients."""
    return IntPolynomial(shifted_coeff(n, k) for k in range(n + 1))
