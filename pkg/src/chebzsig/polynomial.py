"""Dense polynomials over the integers.

Coefficients are stored ascending (index k holds the coefficient of x^k) and
are plain Python ints, so every operation is exact at any magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import isqrt
from typing import Iterable


class IntegralityViolation(ArithmeticError):
    """An exact division in Z[x] left a remainder or a fractional quotient."""


class NotASquare(ArithmeticError):
    """The polynomial has no square root in Z[x]."""


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(int(c) for c in coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        return IntPolynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        """Return self(inner(x))."""
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> IntPolynomial:
        """Return self(-x)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def taylor_shift(self, h: int = 1) -> IntPolynomial:
        """Return self(x + h) by repeated synthetic division."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += h * c[j + 1]
        return IntPolynomial(c)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: str(mag), 1: "x"}.get(k, f"x^{k}")
            if k and mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {b}" for s, b in terms[1:])


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial.constant(p)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if not p.coeffs or not q.coeffs:
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_divmod(p: IntPolynomial, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division in Z[x].

    Raises IntegralityViolation if some quotient coefficient is not an integer,
    which can only happen when q's leading coefficient is not a unit.
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.leading
    if len(rem) - 1 < dq:
        return IntPolynomial(), p
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        top = rem[k + dq]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise IntegralityViolation(f"leading coefficient {lead} does not divide {top}")
        quot[k] = c
        for j, b in enumerate(q.coeffs):
            rem[k + j] -= c * b
    return IntPolynomial(quot), IntPolynomial(rem[:dq])


def poly_exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise IntegralityViolation(f"nonzero remainder {rem} dividing by {q}")
    return quot


def poly_sqrt(p: IntPolynomial) -> IntPolynomial:
    """Square root in Z[x], normalized to a positive leading coefficient.

    Coefficients are recovered top-down: the leading one is the integer root
    of p's leading coefficient, each lower one is solved from the matching
    coefficient of the square. The result is squared back as a final check.
    """
    if p.is_zero():
        return IntPolynomial()
    if p.degree % 2 or p.leading < 0:
        raise NotASquare(f"{p} has odd degree or negative leading coefficient")
    d = p.degree // 2
    s = isqrt(p.leading)
    if s * s != p.leading:
        raise NotASquare(f"leading coefficient {p.leading} is not a square")
    # q[d - j] for j = 0..d, stored by offset j from the top
    top = [s]
    for j in range(1, d + 1):
        acc = p[2 * d - j] - sum(top[i] * top[j - i] for i in range(1, j))
        c, r = divmod(acc, 2 * s)
        if r:
            raise NotASquare(f"coefficient of x^{2 * d - j} is not compatible with a square")
        top.append(c)
    q = IntPolynomial(reversed(top))
    if q * q != p:
        raise NotASquare(f"{p} is not a perfect square")
    return q
