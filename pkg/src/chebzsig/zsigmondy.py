"""Primitive prime divisors of T_n(a) - 1.

A prime p is primitive for (n, a) when Che_p(a) = n. Any such prime divides
Omega_n(a), which is far smaller than T_n(a) - 1, so that is the number we
factor. For n, a >= 2 the only pairs without a primitive prime are

    n = 2, a = 2^k - 1        (k >= 2)
    n = 3, a = (3^k - 1) / 2  (k >= 2)
    n = 4, a = 2^k            (k >= 1)
    n = 6, a = (3^k + 1) / 2  (k >= 1)

and ``verify_rectangle`` checks that claim cell by cell.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .cheb_arith import cheb_eval_mod
from .cheb_order import che_order
from .factorint import DEFAULT_RHO_BUDGET, DEFAULT_TRIAL_BOUND, factorize, trial_factor
from .omega_poly import omega_eval


class TheoremViolation(AssertionError):
    """A situation the theory rules out was observed; this means a bug."""


class Undecided(Exception):
    def __init__(self, report: ZsigmondyReport):
        super().__init__(f"({report.n}, {report.a}): unfactored cofactor {report.cofactor}")
        self.report = report


class Family(enum.Enum):
    N2 = 2
    N3 = 3
    N4 = 4
    N6 = 6


class Verdict(enum.Enum):
    PRIMITIVE = "primitive"
    EXCEPTIONAL = "exceptional"
    UNDECIDED = "undecided"


def _log_exact(value: int, base: int) -> Optional[int]:
    """k with base**k == value, or None."""
    if value < 1:
        return None
    k = 0
    while value % base == 0:
        value //= base
        k += 1
    return k if value == 1 else None


def exceptional_family(n: int, a: int) -> Optional[tuple[Family, int]]:
    """Match (n, a) against the four exceptional families; returns (family, alpha)."""
    if n < 2 or a < 2:
        raise ValueError(f"need n, a >= 2, got n={n}, a={a}")
    if n == 2:
        alpha, fam = _log_exact(a + 1, 2), Family.N2
    elif n == 3:
        alpha, fam = _log_exact(2 * a + 1, 3), Family.N3
    elif n == 4:
        alpha, fam = _log_exact(a, 2), Family.N4
    elif n == 6:
        alpha, fam = _log_exact(2 * a - 1, 3), Family.N6
    else:
        return None
    # a >= 2 already forces alpha >= 2 for N2/N3 and alpha >= 1 for N4/N6
    if alpha is None or alpha < 1:
        return None
    return fam, alpha


def family_members(family: Family, a_max: int) -> list[int]:
    """All a in [2, a_max] belonging to ``family``, from the closed forms."""
    out = []
    alpha = 1
    while True:
        a = {
            Family.N2: 2**alpha - 1,
            Family.N3: (3**alpha - 1) // 2,
            Family.N4: 2**alpha,
            Family.N6: (3**alpha + 1) // 2,
        }[family]
        if a > a_max:
            return out
        if a >= 2:
            out.append(a)
        alpha += 1


def greatest_prime(n: int) -> int:
    return max(trial_factor(n)) if n > 1 else 1


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    f: int
    i: int
    is_greatest_prime_of_n: bool
    p_squared_divides_omega: bool

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "f": self.f,
            "i": self.i,
            "greatest_prime_of_n": self.is_greatest_prime_of_n,
            "p_squared_divides_omega": self.p_squared_divides_omega,
        }


# (p, n) pairs where p^2 may divide Omega_n(a) with p dividing n
SQUARE_EXCEPTIONS = frozenset({(2, 2), (2, 4), (3, 3), (3, 6)})


def classify_prime(p: int, n: int, a: int, omega_value: Optional[int] = None) -> PrimeClassification:
    """Write n = Che_p(a) * p^i for a prime p dividing Omega_n(a).

    Raises TheoremViolation if n/f is not a power of p, if i > 0 while p is
    not the greatest prime of n, or if i > 0 and p^2 divides Omega_n(a)
    outside SQUARE_EXCEPTIONS.
    """
    if omega_value is None:
        omega_value = omega_eval(n, a)
    if omega_value % p:
        raise ValueError(f"{p} does not divide Omega_{n}({a}) = {omega_value}")
    f = che_order(p, a, multiple=n).order
    i = _log_exact(n // f, p)
    if i is None:
        raise TheoremViolation(f"n/Che_{p}({a}) = {n // f} is not a power of {p}")
    top = p == greatest_prime(n)
    sq = omega_value % (p * p) == 0
    if i > 0 and not top:
        raise TheoremViolation(f"p = {p} divides n = {n} but is not its greatest prime")
    if i > 0 and sq and (p, n) not in SQUARE_EXCEPTIONS:
        raise TheoremViolation(f"{p}^2 divides Omega_{n}({a}) with (p, n) = ({p}, {n})")
    return PrimeClassification(p, f, i, top, sq)


def corollary_predicts_exception(n: int, omega_value: int) -> bool:
    """True when Omega_n(a) is a power of 2 or a power of the greatest prime of
    n (that prime being odd); exactly then no primitive prime exists."""
    if _log_exact(omega_value, 2) is not None:
        return True
    q = greatest_prime(n)
    return q > 2 and _log_exact(omega_value, q) is not None


@dataclass
class ZsigmondyReport:
    n: int
    a: int
    omega_value: int
    verdict: Verdict
    prime: Optional[int] = None
    family: Optional[Family] = None
    alpha: Optional[int] = None
    classifications: list[PrimeClassification] = field(default_factory=list)
    cofactor: Optional[int] = None
    primitive_block: Optional[int] = None
    wall_ms: float = 0.0

    @property
    def key(self) -> tuple[int, int]:
        return self.n, self.a

    def detail(self) -> str:
        if self.verdict is Verdict.PRIMITIVE:
            if self.prime is None:
                return f"block={self.primitive_block}"
            return f"p={self.prime}"
        if self.verdict is Verdict.EXCEPTIONAL:
            if self.family is None:
                return "no family"
            return f"{self.family.name} alpha={self.alpha}"
        return f"cofactor={self.cofactor}"

    def to_json(self) -> dict:
        row: dict = {
            "n": self.n,
            "a": self.a,
            "omega_value": str(self.omega_value),
            "verdict": self.verdict.value,
        }
        if self.prime is not None:
            row["prime"] = str(self.prime)
        if self.family is not None:
            row["family"] = self.family.name
            row["alpha"] = self.alpha
        if self.cofactor is not None:
            row["cofactor"] = str(self.cofactor)
        if self.primitive_block is not None:
            row["primitive_block"] = str(self.primitive_block)
        row["classifications"] = [c.to_json() for c in self.classifications]
        return row


def primitive_block(n: int, a: int, block: int) -> bool:
    """True when every prime factor of ``block`` is primitive for (n, a).

    Requires block | T_n(a) - 1 and gcd(block, T_{n/r}(a) - 1) = 1 for each
    prime r | n; then no prime of the block has an order properly dividing n.
    No factorization of the block is needed.
    """
    if block < 2 or cheb_eval_mod(n, a, block) != 1:
        return False
    return all(gcd(block, cheb_eval_mod(n // r, a, block) - 1) == 1 for r in trial_factor(n))


def analyze(
    n: int,
    a: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> ZsigmondyReport:
    """Factor Omega_n(a), classify each prime found, and decide the pair.

    If no primitive prime turns up among the factors found and an unsplit
    cofactor remains, the cofactor is tested as a primitive block; failing
    that the pair is UNDECIDED.
    """
    if n < 2 or a < 2:
        raise ValueError(f"need n, a >= 2, got n={n}, a={a}")
    start = time.perf_counter()
    value = omega_eval(n, a)
    fac = factorize(value, trial_bound, rho_budget)
    classes = [classify_prime(p, n, a, value) for p in fac.primes]
    primitive = [c.p for c in classes if c.i == 0]
    fam = exceptional_family(n, a)
    block = None
    if primitive:
        verdict = Verdict.PRIMITIVE
    elif fac.complete:
        verdict = Verdict.EXCEPTIONAL
    elif primitive_block(n, a, fac.cofactor):
        verdict = Verdict.PRIMITIVE
        block = fac.cofactor
    else:
        verdict = Verdict.UNDECIDED
    return ZsigmondyReport(
        n=n,
        a=a,
        omega_value=value,
        verdict=verdict,
        prime=min(primitive) if primitive else None,
        family=fam[0] if fam else None,
        alpha=fam[1] if fam else None,
        classifications=classes,
        cofactor=fac.cofactor,
        primitive_block=block,
        wall_ms=(time.perf_counter() - start) * 1000,
    )


def primitive_prime(
    n: int,
    a: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    max_rounds: int = 8,
) -> Optional[int]:
    """Smallest known prime p with Che_p(a) = n, or None if there is none.

    When only a primitive block is certified, the block is factored with a
    budget that doubles each round, up to ``max_rounds`` times. Raises
    Undecided if the pair cannot be settled.
    """
    report = analyze(n, a, trial_bound, rho_budget)
    if report.verdict is Verdict.UNDECIDED:
        raise Undecided(report)
    if report.prime is not None or report.verdict is Verdict.EXCEPTIONAL:
        return report.prime
    budget = rho_budget
    for _ in range(max_rounds):
        budget *= 2
        fac = factorize(report.primitive_block, trial_bound, budget)
        if fac.primes:
            p = fac.primes[0]
            if classify_prime(p, n, a, report.omega_value).i != 0:
                raise TheoremViolation(f"{p} from a primitive block of ({n}, {a}) is not primitive")
            return p
    raise Undecided(report)


@dataclass
class Violation:
    n: int
    a: int
    reason: str

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a, "reason": self.reason}


@dataclass
class RectangleReport:
    n_range: tuple[int, int]
    a_range: tuple[int, int]
    rows: list[ZsigmondyReport]
    violations: list[Violation]
    elapsed_s: float = 0.0

    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for r in self.rows:
            out[r.verdict.value] += 1
        return out

    @property
    def exceptional(self) -> list[ZsigmondyReport]:
        return [r for r in self.rows if r.verdict is Verdict.EXCEPTIONAL]

    @property
    def undecided(self) -> list[ZsigmondyReport]:
        return [r for r in self.rows if r.verdict is Verdict.UNDECIDED]

    def exceptional_pairs(self) -> set[tuple[int, int]]:
        return {r.key for r in self.exceptional}


def _check_cell(n: int, a: int, trial_bound: int, rho_budget: int) -> tuple[ZsigmondyReport | None, list[str]]:
    try:
        report = analyze(n, a, trial_bound, rho_budget)
    except TheoremViolation as exc:
        return None, [str(exc)]
    problems = []
    has_family = report.family is not None
    if report.verdict is Verdict.PRIMITIVE and has_family:
        problems.append(f"primitive prime {report.prime} found in family {report.family.name}")
    if report.verdict is Verdict.EXCEPTIONAL and not has_family:
        problems.append("no primitive prime, yet no exceptional family matches")
    if report.verdict is not Verdict.UNDECIDED:
        shape = corollary_predicts_exception(n, report.omega_value)
        if shape != (report.verdict is Verdict.EXCEPTIONAL):
            problems.append("prime-power shape of Omega_n(a) disagrees with the verdict")
    return report, problems


def _check_batch(cells: list[tuple[int, int]], trial_bound: int, rho_budget: int):
    return [(cell, *_check_cell(*cell, trial_bound, rho_budget)) for cell in cells]


def default_workers() -> int:
    env = os.environ.get("CHEB_ZSIG_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def verify_rectangle(
    n_range: tuple[int, int],
    a_range: tuple[int, int],
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    workers: Optional[int] = None,
) -> RectangleReport:
    """Decide every (n, a) in the inclusive ranges and compare with the
    exceptional families. Rows come back sorted by (n, a)."""
    (n_lo, n_hi), (a_lo, a_hi) = n_range, a_range
    if n_lo < 2 or a_lo < 2 or n_hi < n_lo or a_hi < a_lo:
        raise ValueError(f"invalid ranges n={n_range}, a={a_range}")
    workers = workers or default_workers()
    start = time.perf_counter()
    cells = [(n, a) for n in range(n_lo, n_hi + 1) for a in range(a_lo, a_hi + 1)]
    # Interleave so expensive large-n cells spread across batches.
    batches = [cells[k::max(1, workers * 8)] for k in range(max(1, workers * 8))]
    batches = [b for b in batches if b]
    results = []
    if workers == 1:
        for b in batches:
            results.extend(_check_batch(b, trial_bound, rho_budget))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_check_batch, b, trial_bound, rho_budget) for b in batches]
            for fut in futures:
                results.extend(fut.result())
    rows, violations = [], []
    for (n, a), report, problems in sorted(results, key=lambda t: t[0]):
        if report is not None:
            rows.append(report)
        violations.extend(Violation(n, a, msg) for msg in problems)
    return RectangleReport(n_range, a_range, rows, violations, time.perf_counter() - start)

