"""Che_p(a): the least m >= 1 with T_m(a) == 1 (mod p).

For odd p the order divides p - 1 or p + 1, and T_n(a) == 1 (mod p) holds
exactly for the multiples of the order. So the order is found like a
multiplicative order: start from whichever of p -/+ 1 is a "one", then strip
prime factors while the quotient is still a one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .cheb_arith import cheb_eval_mod
from .factorint import factorize, is_prime


class Side(enum.Enum):
    P_MINUS_1 = "p-1"
    P_PLUS_1 = "p+1"
    UNIT = "unit"


@dataclass(frozen=True)
class ChebOrderResult:
    p: int
    a: int
    order: int
    witness_side: Side


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def is_cheb_one(n: int, a: int, p: int) -> bool:
    """True iff T_n(a) == 1 (mod p)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require_prime(p)
    return cheb_eval_mod(n, a, p) == 1 % p


def _reduce(N: int, a: int, p: int) -> int:
    fac = factorize(N)
    if not fac.complete:
        raise ArithmeticError(f"could not fully factor {N}; order reduction would be unsound")
    m = N
    for q, e in fac.factors:
        for _ in range(e):
            if cheb_eval_mod(m // q, a, p) == 1:
                m //= q
            else:
                break
    return m


def _side(order: int, p: int) -> Side:
    if order == 1 or p == 2:
        return Side.UNIT
    return Side.P_MINUS_1 if (p - 1) % order == 0 else Side.P_PLUS_1


def che_order(p: int, a: int, multiple: Optional[int] = None) -> ChebOrderResult:
    """Che_p(a) with the side of p -/+ 1 it divides.

    ``multiple`` is an optional known n with T_n(a) == 1 (mod p); reducing from
    it avoids factoring p -/+ 1, which matters when p is large.
    """
    _require_prime(p)
    a %= p
    if p == 2:
        return ChebOrderResult(p, a, 1 if a == 1 else 2, Side.UNIT)
    if a == 1:
        return ChebOrderResult(p, a, 1, Side.UNIT)
    if multiple is not None:
        if cheb_eval_mod(multiple, a, p) != 1:
            raise ValueError(f"T_{multiple}({a}) is not 1 mod {p}")
        order = _reduce(multiple, a, p)
        return ChebOrderResult(p, a, order, _side(order, p))
    orders = [_reduce(N, a, p) for N in (p - 1, p + 1) if cheb_eval_mod(N, a, p) == 1]
    if not orders:
        raise ArithmeticError(f"neither T_{p - 1}({a}) nor T_{p + 1}({a}) is 1 mod {p}")
    order = min(orders)
    return ChebOrderResult(p, a, order, _side(order, p))


def che_order_naive(p: int, a: int) -> int:
    """Linear scan for the least m with T_m(a) == 1 (mod p); reference only."""
    t_prev, t = 1, a % p
    m = 1
    while t != 1 % p:
        t_prev, t = t, (2 * a * t - t_prev) % p
        m += 1
        if m > 2 * p + 2:
            raise ArithmeticError(f"no order found for a={a} mod {p}")
    return m

