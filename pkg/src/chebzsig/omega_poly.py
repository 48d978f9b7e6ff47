"""The factors Omega_n of T_n(x) - 1.

T_n(x) - 1 = prod over d | n of Omega_d(x)^sigma_d, where sigma_d = 1 for
d in {1, 2} and 2 otherwise. Omega_1 = x - 1 and Omega_2 = 2x + 2; for n >= 3,
Omega_n is recovered exactly by dividing T_n - 1 by the factors of the proper
divisors and taking the square root of the quotient in Z[x].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, TextIO

from .cheb_arith import cheb_poly
from .polynomial import (
    IntegralityViolation,
    IntPolynomial,
    NotASquare,
    poly_exact_div,
    poly_mul,
    poly_sqrt,
)

__all__ = [
    "IntegralityViolation",
    "NotASquare",
    "OmegaTable",
    "divisors",
    "dump_omega_table",
    "euler_phi",
    "omega",
    "omega_eval",
    "omega_eval_mod",
    "parse_omega_table",
    "poly_exact_div",
    "poly_mul",
    "poly_sqrt",
    "sigma",
]


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def sigma(d: int) -> int:
    return 1 if d <= 2 else 2


@dataclass(frozen=True)
class OmegaTable:
    n: int
    omega: IntPolynomial
    degree: int
    sigma: int


@lru_cache(maxsize=None)
def _omega_poly(n: int) -> IntPolynomial:
    if n == 1:
        return IntPolynomial((-1, 1))
    if n == 2:
        return IntPolynomial((2, 2))
    rest = cheb_poly(n) - 1
    for d in divisors(n)[:-1]:
        rest = poly_exact_div(rest, _omega_poly(d) ** sigma(d))
    root = poly_sqrt(rest)
    return -root if root.leading < 0 else root


def omega(n: int) -> OmegaTable:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    poly = _omega_poly(n)
    return OmegaTable(n, poly, poly.degree, sigma(n))


def omega_eval(n: int, a: int) -> int:
    return omega(n).omega(a)


def omega_eval_mod(n: int, a: int, m: int) -> int:
    return omega(n).omega.eval_mod(a, m)


def dump_omega_table(ns: Iterable[int], out: TextIO) -> None:
    """Write one line per n: ``n: c0 c1 ... ck`` (ascending, decimal)."""
    for n in ns:
        coeffs = " ".join(str(c) for c in omega(n).omega.coeffs)
        out.write(f"{n}: {coeffs}\n")


def parse_omega_table(lines: Iterable[str]) -> dict[int, IntPolynomial]:
    table = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        table[int(head)] = IntPolynomial(int(tok) for tok in body.split())
    return table
