import pytest

from poincare.actors import build_r, derive_parameters
from poincare.alpha import compute_alpha
from poincare.assemble import CoefficientTable, assemble, from_half_table, half_table, structural_checks
from poincare.errors import InexactDivision
from poincare.intpoly import IntPoly
from poincare.oracle import expand_series


def _series(n):
    P = derive_parameters(n)
    return assemble(P, compute_alpha(P))


def test_cubic_and_quartic():
    s3 = _series(3)
    assert s3.numerator.coeffs == (1,) and s3.denominator == IntPoly.binomial(4)
    s4 = _series(4)
    assert s4.numerator.coeffs == (1,)
    assert s4.denominator == IntPoly.binomial(2) * IntPoly.binomial(3)


def test_sextic():
    s6 = _series(6)
    assert half_table(s6).half == (1, 1, 0, -1, -1)
    assert s6.denominator == build_r(derive_parameters(6))


def test_half_tables(golden):
    assert half_table(_series(5)).half == (1, 0, 0, 0, 0, 0, -1)
    assert half_table(_series(3)).half == (1,)
    h9 = half_table(_series(9)).half
    assert len(h9) == 31 and h9[:9] == (1, 0, 0, 0, 1, 0, -1, 0, 5) and h9[-3:] == (147, 0, 119)
    assert list(h9) == golden[9]


def test_half_table_rejects_non_palindrome():
    s = _series(5)
    bad = type(s)(s.params, IntPoly((1, 2, 3)), s.denominator, s.factors)
    with pytest.raises(ValueError):
        half_table(bad)


def test_table_reflection():
    t = CoefficientTable(5, 6, (1, 0, 0, 0, 0, 0, -1))
    assert t.full().coeffs == (1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1)


def test_inexact_division_signalled():
    P = derive_parameters(6)
    with pytest.raises(InexactDivision):
        assemble(P, IntPoly((1, 0, 1)))


def test_structural_checks_c4():
    rep13 = structural_checks(_series(13))
    assert rep13.ok
    assert half_table(_series(13)).half[4] == 1
    assert half_table(_series(7)).half[4] == 0


def test_structural_checks_flag_damage():
    s = _series(7)
    h = list(half_table(s).half)
    h[3] = 5
    rep = structural_checks(from_half_table(s.params, h))
    assert not rep.ok and any("odd i" in c.name for c in rep.failures)


@pytest.mark.parametrize("n", range(3, 21))
def test_invariants_and_roundtrip(results, n):
    res = results[n]
    s, P = res.series, res.params
    assert res.report.ok, str(res.report)
    A, B = s.numerator, s.denominator
    assert A[0] == 1 and B[0] == 1
    assert A.is_palindromic() and A.degree == 2 * P.delta
    assert s.factored_denominator() == B
    assert A.degree - B.degree == -(n + 1)
    assert B.multiplicity(IntPoly.binomial(1)) == n - 2 and A(1) != 0
    # multiply the removed factors back to recover alpha_0
    back = A
    if n % 2 == 0:
        back = back * IntPoly.binomial(1)
        if n % 4 == 0:
            back = back * IntPoly.binomial(P.s - 1, +1)
    assert back == res.alpha.poly
    assert all(c >= 0 for c in expand_series(A, B, 199))


def test_gcd_twenty(results):
    rep = results[20].report
    names = {c.name: c.ok for c in rep.checks}
    assert names["gcd(A, B) = 1"] and results[20].series.denominator.degree == 181
