import json

import pytest

from chebzsig.cheb_arith import cheb_eval_mod
from chebzsig.cheb_order import che_order_naive
from chebzsig.omega_poly import divisors, omega_eval
from chebzsig.zsigmondy import (
    Family,
    TheoremViolation,
    Undecided,
    Verdict,
    analyze,
    classify_prime,
    corollary_predicts_exception,
    exceptional_family,
    family_members,
    primitive_block,
    primitive_prime,
    verify_rectangle,
)


def test_classify_examples():
    c = classify_prime(5, 3, 2)
    assert (c.f, c.i) == (3, 0)
    c = classify_prime(2, 4, 2)
    assert (c.f, c.i, c.is_greatest_prime_of_n, c.p_squared_divides_omega) == (2, 1, True, True)
    c = classify_prime(29, 15, 2)
    assert (c.f, c.i) == (15, 0)
    assert che_order_naive(29, 2) == 15


def test_classify_square_with_i_zero_is_allowed():
    # Omega_3(12) = 25; 5 is primitive (i = 0) so the square clause does not apply
    c = classify_prime(5, 3, 12)
    assert (c.f, c.i, c.p_squared_divides_omega) == (3, 0, True)


def test_classify_precondition():
    with pytest.raises(ValueError):
        classify_prime(7, 3, 2)


def test_primitive_prime_examples():
    assert primitive_prime(3, 2) == 5
    # Omega_2(2) = 6: both 2 and 3 have order 2; the smallest is returned
    assert primitive_prime(2, 2) == 2
    assert [c.p for c in analyze(2, 2).classifications if c.i == 0] == [2, 3]
    assert primitive_prime(4, 2) is None
    assert primitive_prime(2, 7) is None
    assert primitive_prime(6, 5) is None


def test_primitive_prime_from_block():
    # Omega_29(70) keeps an unsplit composite at the default budget
    r = analyze(29, 70)
    assert r.verdict is Verdict.PRIMITIVE and r.prime is None and r.primitive_block
    p = primitive_prime(29, 70)
    assert r.primitive_block % p == 0
    assert cheb_eval_mod(29, 70, p) == 1 and cheb_eval_mod(1, 70, p) != 1


def test_undecided_raised_when_block_unusable(monkeypatch):
    import chebzsig.zsigmondy as z

    monkeypatch.setattr(z, "primitive_block", lambda n, a, block: False)
    with pytest.raises(Undecided):
        z.primitive_prime(29, 70)


def test_primitive_block_rejects_non_primitive():
    # 3 | Omega_6(2) = 3 has order 2, not 6
    assert not primitive_block(6, 2, 3)
    assert primitive_block(5, 2, 19)


@pytest.mark.parametrize(
    "n,a,expected",
    [
        (3, 13, (Family.N3, 3)),
        (5, 100, None),
        (4, 6, None),
        (2, 3, (Family.N2, 2)),
        (2, 2, None),
        (4, 2, (Family.N4, 1)),
        (6, 2, (Family.N6, 1)),
        (6, 5, (Family.N6, 2)),
        (3, 4, (Family.N3, 2)),
    ],
)
def test_exceptional_family(n, a, expected):
    assert exceptional_family(n, a) == expected


def test_family_members():
    assert family_members(Family.N2, 200) == [3, 7, 15, 31, 63, 127]
    assert family_members(Family.N3, 200) == [4, 13, 40, 121]
    assert family_members(Family.N4, 200) == [2, 4, 8, 16, 32, 64, 128]
    assert family_members(Family.N6, 200) == [2, 5, 14, 41, 122]


def test_small_rectangle():
    r = verify_rectangle((2, 6), (2, 5), workers=1)
    assert r.violations == []
    assert r.exceptional_pairs() == {(2, 3), (3, 4), (4, 2), (4, 4), (6, 2), (6, 5)}


def test_rectangle_2_2():
    r = verify_rectangle((2, 2), (2, 2), workers=1)
    assert r.rows[0].prime == 2 and r.rows[0].omega_value == 6
    assert r.rows[0].verdict is Verdict.PRIMITIVE


def test_rectangle_parallel_matches_serial():
    one = verify_rectangle((2, 12), (2, 30), workers=1)
    two = verify_rectangle((2, 12), (2, 30), workers=2)
    assert [json.dumps(x.to_json()) for x in one.rows] == [json.dumps(x.to_json()) for x in two.rows]


def test_rectangle_flags_mismatch(monkeypatch):
    import chebzsig.zsigmondy as z

    monkeypatch.setattr(z, "exceptional_family", lambda n, a: None)
    r = z.verify_rectangle((4, 4), (2, 3), workers=1)
    assert [(v.n, v.a) for v in r.violations] == [(4, 2)]


def test_rectangle_rejects_bad_ranges():
    with pytest.raises(ValueError):
        verify_rectangle((1, 3), (2, 3))
    with pytest.raises(ValueError):
        verify_rectangle((3, 2), (2, 3))


def test_report_json_shape():
    row = analyze(15, 2).to_json()
    assert row["omega_value"] == "145"
    assert row["verdict"] == "primitive" and row["prime"] == "29"
    assert [c["p"] for c in row["classifications"]] == ["5", "29"]
    row = analyze(6, 5).to_json()
    assert row["family"] == "N6" and row["alpha"] == 2


@pytest.mark.parametrize("n", range(2, 25))
def test_corollary_and_certificates(n):
    proper = divisors(n)[:-1]
    for a in range(2, 25):
        r = analyze(n, a)
        assert r.verdict is not Verdict.UNDECIDED
        assert (r.verdict is Verdict.EXCEPTIONAL) == corollary_predicts_exception(n, r.omega_value)
        assert (r.verdict is Verdict.EXCEPTIONAL) == (exceptional_family(n, a) is not None)
        if r.prime is not None:
            assert cheb_eval_mod(n, a, r.prime) == 1
            assert all(cheb_eval_mod(d, a, r.prime) != 1 for d in proper)


def test_theorem_violation_is_raised(monkeypatch):
    import chebzsig.zsigmondy as z
    from chebzsig.cheb_order import ChebOrderResult, Side

    monkeypatch.setattr(z, "che_order", lambda p, a, multiple=None: ChebOrderResult(p, a, 1, Side.UNIT))
    with pytest.raises(TheoremViolation):
        z.classify_prime(5, 3, 2)


def test_growth_bound_example():
    assert omega_eval(5, 3) > (2 * 2) ** 2
