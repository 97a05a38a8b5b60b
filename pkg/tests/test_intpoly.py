import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare.errors import InexactDivision
from poincare.intpoly import IntPoly

coeffs = st.lists(st.integers(-10**20, 10**20), max_size=12)


def test_canonical_form():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).coeffs == () and IntPoly().degree == -1


def test_binomials_and_str():
    assert IntPoly.binomial(3).coeffs == (1, 0, 0, -1)
    assert IntPoly.binomial(1, +1).coeffs == (1, 1)
    assert str(IntPoly((1, 0, -3, 1))) == "1 - 3*t^2 + t^3"


@given(coeffs, coeffs)
def test_division_roundtrip(a, b):
    A, B = IntPoly(tuple(a)), IntPoly(tuple(b) + (-1,)) * IntPoly.binomial(2)
    q, r = (A * B).divmod(B)
    assert q == A and not r


def test_exact_div_raises():
    with pytest.raises(InexactDivision) as exc:
        IntPoly((1, 1, 1)).exact_div(IntPoly.binomial(1))
    assert exc.value.remainder == IntPoly((3,))


def test_multiplicity_and_eval():
    one_minus_t = IntPoly.binomial(1)
    f = IntPoly.product([one_minus_t] * 3 + [IntPoly((1, 1))])
    assert f.multiplicity(one_minus_t) == 3
    assert f(2) == (-1) ** 3 * 3 and f(2, mod=7) == (-3) % 7
