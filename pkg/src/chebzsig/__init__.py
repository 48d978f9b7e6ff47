"""Chebyshev analogue of Zsigmondy's theorem: T_n(a) - 1 and its primitive primes."""

from .cheb_arith import ChebPair, cheb_eval, cheb_eval_mod, cheb_pair, cheb_poly, shifted_coeff
from .cheb_order import ChebOrderResult, Side, che_order, is_cheb_one
from .factorint import Certainty, Factorization, Primality, factorize, is_prime
from .omega_poly import OmegaTable, omega, omega_eval
from .polynomial import IntegralityViolation, IntPolynomial, NotASquare, poly_exact_div, poly_mul, poly_sqrt
from .zsigmondy import (
    Family,
    PrimeClassification,
    TheoremViolation,
    Undecided,
    Verdict,
    ZsigmondyReport,
    analyze,
    classify_prime,
    exceptional_family,
    primitive_prime,
    verify_rectangle,
)

__version__ = "0.1.0"
