"""Property checks run by ``chebzsig selftest``.

Each check raises AssertionError on the first counterexample. The reference
paths used here (three-term recurrence, linear order scan, trial division)
are kept separate from the fast paths they audit.
"""

from __future__ import annotations

import random
import time
from math import gcd
from typing import Callable, Iterable

from .cheb_arith import cheb_eval, cheb_eval_mod, cheb_poly, shifted_coeff
from .cheb_order import che_order, che_order_naive, is_cheb_one
from .factorint import factorize, is_prime, trial_factor
from .omega_poly import divisors, euler_phi, omega, sigma
from .polynomial import IntPolynomial, poly_exact_div
from .zsigmondy import (
    Verdict,
    analyze,
    corollary_predicts_exception,
    greatest_prime,
    primitive_block,
)

CHECKS: dict[str, Callable[[], None]] = {}


def check(name: str):
    def register(fn: Callable[[], None]) -> Callable[[], None]:
        CHECKS[name] = fn
        return fn

    return register


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]


# -- Chebyshev values ------------------------------------------------------


@check("recurrence agrees with doubling ladder")
def recurrence_vs_ladder(n_max: int = 2000, xs: Iterable[int] = (-3, -2, -1, 0, 1, 2, 3, 10, 10**10)) -> None:
    for x in xs:
        prev, cur = 1, x
        assert cheb_eval(0, x) == 1
        for n in range(1, n_max + 1):
            assert cheb_eval(n, x) == cur, (n, x)
            prev, cur = cur, 2 * x * cur - prev


@check("composition T_m(T_n(x)) = T_mn(x)")
def composition(limit: int = 30, x_abs: int = 10) -> None:
    for x in range(-x_abs, x_abs + 1):
        inner = {n: cheb_eval(n, x) for n in range(limit + 1)}
        for n in range(limit + 1):
            for m in range(limit + 1):
                assert cheb_eval(m, inner[n]) == cheb_eval(m * n, x), (m, n, x)


@check("product identity (T_{a+b}-1)(T_|a-b|-1) = (T_a-T_b)^2")
def product_identity(limit: int = 40, x_abs: int = 5) -> None:
    for x in range(-x_abs, x_abs + 1):
        t = [cheb_eval(k, x) for k in range(2 * limit + 1)]
        for a in range(limit + 1):
            for b in range(limit + 1):
                assert (t[a + b] - 1) * (t[abs(a - b)] - 1) == (t[a] - t[b]) ** 2, (a, b, x)


@check("Fermat analogue: T_p(x) = x and T_{p-1} or T_{p+1} is 1 mod p")
def fermat_analogue(p_max: int = 200) -> None:
    for p in primes_upto(p_max):
        if p == 2:
            assert all(cheb_eval_mod(2, x, 2) == 1 for x in range(2))
            continue
        for x in range(p):
            assert cheb_eval_mod(p, x, p) == x, (p, x)
            assert cheb_eval_mod(p - 1, x, p) == 1 or cheb_eval_mod(p + 1, x, p) == 1, (p, x)


@check("T_n(1) = 1")
def fixed_point_one(n_max: int = 1000) -> None:
    assert all(cheb_eval(n, 1) == 1 for n in range(n_max + 1))


@check("shifted expansion matches exact Taylor shift")
def shifted_expansion(n_max: int = 40) -> None:
    for n in range(1, n_max + 1):
        shifted = cheb_poly(n).taylor_shift(1)
        assert [shifted_coeff(n, k) for k in range(n + 1)] == list(shifted.coeffs), n
        assert shifted_coeff(n, n) == 2 ** (n - 1)


# -- Chebyshev order -------------------------------------------------------


@check("T_n(a) = 1 mod p iff Che_p(a) divides n")
def order_divisor_lattice(p_max: int = 100, n_max: int = 60) -> None:
    for p in primes_upto(p_max):
        for a in range(p):
            m = che_order(p, a).order
            for n in range(1, n_max + 1):
                assert is_cheb_one(n, a, p) == (n % m == 0), (p, a, n)


@check("Che_p(a) divides p-1 or p+1 and is prime to p")
def order_side(p_max: int = 100) -> None:
    for p in primes_upto(p_max):
        for a in range(p):
            r = che_order(p, a)
            if p > 2:
                assert gcd(r.order, p) == 1, (p, a)
                assert (p - 1) % r.order == 0 or (p + 1) % r.order == 0, (p, a)
                assert r.order == che_order(p, a + 7 * p).order


@check("Che_p(a) matches the linear scan")
def order_oracle(p_max: int = 60) -> None:
    for p in primes_upto(p_max):
        for a in range(p):
            assert che_order(p, a).order == che_order_naive(p, a), (p, a)


# -- Omega polynomials -----------------------------------------------------


@check("prod Omega_d^sigma_d = T_n - 1")
def factorization_identity(n_max: int = 64) -> None:
    for n in range(1, n_max + 1):
        acc = IntPolynomial.constant(1)
        for d in divisors(n):
            acc = acc * omega(d).omega ** sigma(d)
        assert acc == cheb_poly(n) - 1, n


@check("deg Omega_n = phi(n)/2 with leading coefficient 2^(phi(n)/2)")
def omega_degree(n_max: int = 200) -> None:
    for n in range(3, n_max + 1):
        t = omega(n)
        half = euler_phi(n) // 2
        assert t.degree == half and t.omega.leading == 2**half, n


@check("Omega_mn divides Omega_n o T_m, with equality under the radical condition")
def omega_composition(mn_max: int = 120) -> None:
    for n in range(1, mn_max + 1):
        for m in range(1, mn_max // n + 1):
            composed = omega(n).omega.compose(cheb_poly(m))
            poly_exact_div(composed, omega(m * n).omega)
            if n >= 3 and m >= 2 and set(trial_factor(m)) <= set(trial_factor(n)):
                assert composed == omega(m * n).omega, (m, n)


@check("Omega_n(0) = +-1 for odd n")
def omega_odd_constant(n_max: int = 199) -> None:
    for n in range(1, n_max + 1, 2):
        assert omega(n).omega[0] in (1, -1), n


@check("Omega_2n(x) = (-1)^(phi(n)/2) Omega_n(-x) for odd n >= 3")
def omega_reflection(n_max: int = 99) -> None:
    for n in range(3, n_max + 1, 2):
        sign = -1 if (euler_phi(n) // 2) % 2 else 1
        assert omega(2 * n).omega == omega(n).omega.reflect() * sign, n


# -- Factorization ---------------------------------------------------------


@check("factorize reconstructs random inputs")
def factor_reconstruction(count: int = 10_000, bound: int = 10**12, seed: int = 1) -> None:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, bound)
        fac = factorize(n)
        assert fac.complete and fac.value() == n, n
        assert all(is_prime(p) for p in fac.primes), n


@check("factorize agrees with trial division")
def factor_vs_trial(n_max: int = 1_000_000) -> None:
    for n in range(1, n_max + 1):
        assert factorize(n).as_dict() == trial_factor(n), n


# -- Zsigmondy structure ---------------------------------------------------


@check("every prime of Omega_n(a) has n = Che_p(a) p^i with the side clauses")
def satz1_audit(n_max: int = 40, a_max: int = 40) -> None:
    # analyze() runs classify_prime on every factor found, which raises on
    # any violated clause; an unsplit cofactor must certify as primitive.
    for n in range(2, n_max + 1):
        for a in range(2, a_max + 1):
            r = analyze(n, a)
            assert r.verdict is not Verdict.UNDECIDED, (n, a)
            if r.cofactor is not None:
                assert primitive_block(n, a, r.cofactor), (n, a)
            for c in r.classifications:
                assert n == c.f * c.p**c.i
                if c.i > 0:
                    assert c.p == greatest_prime(n)


@check("no primitive prime iff Omega_n(a) is a power of 2 or of n's greatest odd prime")
def corollary_shape(n_max: int = 40, a_max: int = 40) -> None:
    for n in range(2, n_max + 1):
        for a in range(2, a_max + 1):
            r = analyze(n, a)
            assert (r.verdict is Verdict.EXCEPTIONAL) == corollary_predicts_exception(n, r.omega_value), (n, a)


@check("primitive primes pass an independent order check")
def certificate_soundness(n_max: int = 40, a_max: int = 40) -> None:
    for n in range(2, n_max + 1):
        proper = divisors(n)[:-1]
        for a in range(2, a_max + 1):
            p = analyze(n, a).prime
            if p is None:
                continue
            assert cheb_eval_mod(n, a, p) == 1 % p
            assert all(cheb_eval_mod(d, a, p) != 1 % p for d in proper), (n, a, p)


@check("Omega_n(a) > (2(a-1))^(phi(n)/2) outside n in {2,3,4,6}")
def growth_bound(n_max: int = 40, a_max: int = 40) -> None:
    for n in range(2, n_max + 1):
        if n in (2, 3, 4, 6):
            continue
        poly = omega(n).omega
        for a in range(3, a_max + 1):
            assert poly(a) > (2 * (a - 1)) ** (euler_phi(n) // 2), (n, a)


def run_selftest(names: Iterable[str] | None = None, out=print) -> bool:
    ok = True
    for name in names or CHECKS:
        start = time.perf_counter()
        try:
            CHECKS[name]()
            status = "PASS"
        except AssertionError as exc:
            ok = False
            status = f"FAIL {exc}"
        out(f"{status:4} {name} ({time.perf_counter() - start:.2f}s)")
    return ok
