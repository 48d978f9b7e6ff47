import io

import pytest

from chebzsig.cheb_arith import cheb_eval, cheb_poly
from chebzsig.omega_poly import (
    divisors,
    dump_omega_table,
    euler_phi,
    omega,
    omega_eval,
    parse_omega_table,
    poly_exact_div,
    sigma,
)
from chebzsig.polynomial import IntPolynomial
from chebzsig.factorint import trial_factor


def test_small_omegas():
    assert omega(1).omega == IntPolynomial([-1, 1])
    assert omega(2).omega == IntPolynomial([2, 2])
    assert omega(3).omega == IntPolynomial([1, 2])
    assert omega(4).omega == IntPolynomial([0, 2])
    assert omega(6).omega == IntPolynomial([-1, 2])


def test_sigma_and_degree_fields():
    assert (omega(1).sigma, omega(2).sigma, omega(3).sigma) == (1, 1, 2)
    assert omega(1).degree == omega(2).degree == 1


def test_omega6_squared_is_a_quotient():
    quotient = poly_exact_div(cheb_poly(6) - 1, omega(1).omega * omega(2).omega * omega(3).omega ** 2)
    assert quotient == IntPolynomial([-1, 2]) ** 2


@pytest.mark.parametrize("i", [2, 3, 4, 5, 6])
def test_power_of_two(i):
    assert omega(2**i).omega == cheb_poly(2 ** (i - 2)) * 2


@pytest.mark.parametrize("a", range(2, 11))
def test_closed_forms(a):
    assert omega_eval(2, a) == 2 * (a + 1)
    assert omega_eval(3, a) == 2 * a + 1
    assert omega_eval(4, a) == 2 * a
    assert omega_eval(6, a) == 2 * a - 1


def test_omega15_at_2():
    assert omega_eval(15, 2) == 145


@pytest.mark.parametrize("n", range(1, 65))
def test_factorization_identity(n):
    acc = IntPolynomial([1])
    for d in divisors(n):
        acc = acc * omega(d).omega ** sigma(d)
    assert acc == cheb_poly(n) - 1


@pytest.mark.parametrize("n", range(3, 201))
def test_degree_and_leading(n):
    t = omega(n)
    assert t.degree == euler_phi(n) // 2
    assert t.omega.leading == 2 ** (euler_phi(n) // 2)


def test_composition_reduction():
    for n in range(1, 121):
        for m in range(1, 120 // n + 1):
            composed = omega(n).omega.compose(cheb_poly(m))
            poly_exact_div(composed, omega(m * n).omega)
            if n >= 3 and m >= 2 and set(trial_factor(m)) <= set(trial_factor(n)):
                assert composed == omega(m * n).omega


@pytest.mark.parametrize("n", range(1, 200, 2))
def test_odd_constant_term(n):
    assert omega(n).omega[0] in (1, -1)


@pytest.mark.parametrize("n", range(3, 100, 2))
def test_reflection(n):
    sign = (-1) ** (euler_phi(n) // 2)
    assert omega(2 * n).omega == omega(n).omega.reflect() * sign


@pytest.mark.parametrize("n", [3, 5, 7, 12, 30])
def test_value_divides_t_minus_one(n):
    for a in range(2, 20):
        assert (cheb_eval(n, a) - 1) % omega_eval(n, a) == 0


def test_table_dump_roundtrip():
    buf = io.StringIO()
    dump_omega_table(range(1, 13), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "1: -1 1"
    assert lines[5] == "6: -1 2"
    table = parse_omega_table(lines)
    assert table == {n: omega(n).omega for n in range(1, 13)}


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        omega(0)


@pytest.mark.parametrize("n,phi", [(1, 1), (2, 1), (9, 6), (12, 4), (97, 96), (100, 40)])
def test_euler_phi(n, phi):
    assert euler_phi(n) == phi
