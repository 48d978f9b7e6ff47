"""Exit criteria. Each test prints one PASS/FAIL line."""

import time

import pytest

from chebzsig.cheb_arith import cheb_eval, cheb_eval_mod, cheb_poly, shifted_coeff
from chebzsig.cheb_order import che_order
from chebzsig.cli import main
from chebzsig.factorint import factorize
from chebzsig.omega_poly import divisors, omega, omega_eval, sigma
from chebzsig.polynomial import IntPolynomial
from chebzsig.selftest import CHECKS
from chebzsig.zsigmondy import Verdict, analyze, greatest_prime, primitive_block


@pytest.fixture
def report(request):
    def emit(ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'} {request.node.name} {detail}".rstrip()
        print(line)
        assert ok, line

    return emit


def closed_form_exceptions(n_max: int, a_max: int) -> set[tuple[int, int]]:
    out = set()
    for alpha in range(1, 64):
        for n, a in ((2, 2**alpha - 1), (3, (3**alpha - 1) // 2), (4, 2**alpha), (6, (3**alpha + 1) // 2)):
            if 2 <= a <= a_max and n <= n_max:
                out.add((n, a))
    return out


def test_1_exceptional_list(report, tmp_path, capsys):
    expected = (
        {(2, a) for a in (3, 7, 15, 31, 63, 127)}
        | {(3, a) for a in (4, 13, 40, 121)}
        | {(4, a) for a in (2, 4, 8, 16, 32, 64, 128)}
        | {(6, a) for a in (2, 5, 14, 41, 122)}
    )
    assert expected == closed_form_exceptions(30, 200)
    out = tmp_path / "scan.json"
    start = time.perf_counter()
    code = main(["scan", "--n", "2..30", "--a", "2..200", "--format", "json", "--out", str(out)])
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    import json

    doc = json.loads(out.read_text())
    found = {(r["n"], r["a"]) for r in doc["rows"] if r["verdict"] != "primitive"}
    ok = code == 0 and found == expected and not doc["violations"] and elapsed < 300
    with capsys.disabled():
        report(ok, f"{len(found)} exceptional pairs, {elapsed:.1f}s")


def test_2_point_values(report, capsys):
    ok = (
        cheb_eval(3, 2) - 1 == 25
        and cheb_eval(5, 2) - 1 == 361
        and omega_eval(15, 2) == 145
        and factorize(145).as_dict() == {5: 1, 29: 1}
        and che_order(3, 2).order == 2
        and che_order(5, 2).order == 3
    )
    with capsys.disabled():
        report(ok)


def test_3_factorization_identity(report, capsys):
    start = time.perf_counter()
    ok = True
    for n in range(1, 65):
        acc = IntPolynomial([1])
        for d in divisors(n):
            acc = acc * omega(d).omega ** sigma(d)
        ok &= acc == cheb_poly(n) - 1
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        report(ok and elapsed < 10, f"{elapsed:.2f}s")


def test_4_satz1_audit(report, capsys):
    bad = []
    primes = 0
    for n in range(2, 41):
        top = greatest_prime(n)
        for a in range(2, 41):
            r = analyze(n, a)  # raises TheoremViolation on a failed clause
            omega_value = r.omega_value
            for c in r.classifications:
                primes += 1
                if n != c.f * c.p**c.i or (c.i > 0 and c.p != top):
                    bad.append((n, a, c.p))
                if c.i > 0 and omega_value % (c.p * c.p) == 0 and (c.p, n) not in {(2, 2), (2, 4), (3, 3), (3, 6)}:
                    bad.append((n, a, c.p))
            # primes inside an unsplit cofactor: all have order n (i = 0)
            if r.cofactor is not None and not primitive_block(n, a, r.cofactor):
                bad.append((n, a, r.cofactor))
            if r.verdict is Verdict.UNDECIDED:
                bad.append((n, a, None))
    with capsys.disabled():
        report(not bad, f"{primes} primes classified, violations={bad}")


def test_5_mod9_images(report, capsys):
    t2 = {cheb_eval_mod(2, x, 9) for x in range(9)}
    t3 = {cheb_eval_mod(3, x, 9) for x in range(9)}
    with capsys.disabled():
        report(t2 == {1, 4, 7, 8} and t3 == {0, 1, 8}, f"T2={sorted(t2)} T3={sorted(t3)}")


def test_6_shifted_coefficients(report, capsys):
    ok = all(
        [shifted_coeff(n, k) for k in range(n + 1)] == list(cheb_poly(n).compose(IntPolynomial([1, 1])).coeffs)
        for n in range(1, 41)
    )
    with capsys.disabled():
        report(ok)


def test_7_selftest(report, capsys):
    start = time.perf_counter()
    code = main(["selftest"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    failed = [line for line in out.splitlines() if not line.startswith("PASS")]
    with capsys.disabled():
        report(code == 0 and not failed and len(out.splitlines()) == len(CHECKS) and elapsed < 120,
               f"{len(CHECKS)} checks, {elapsed:.1f}s")
