import numpy as np
import pytest
import sympy

from poincare import fixture5
from poincare.actors import derive_parameters
from poincare.alpha import SolverConfig, alpha_at, alpha_mod_prime, build_system, compute_alpha, validate_alpha
from poincare.errors import ValidationFailed
from poincare.ffield import PrimeSet, solve_linear, substream
from poincare.intpoly import IntPoly

P5 = derive_parameters(5)


def quintic_alpha(tau, p):
    return (1 - tau**6 + tau**12) % p


def test_fixture_system_matches_printed_cofactor():
    p, tau = 65521, 1234
    zetas = np.array([[2, 3, 5, 7, 11, 13, 17, 19]])
    mat, rhs = build_system(P5, p, zetas, np.array([tau]))
    x = solve_linear(mat[0], rhs[0], p)
    assert x[0] == quintic_alpha(tau, p)
    a = sympy.Poly(sympy.expand(fixture5.A), fixture5.z)
    by_power = dict(zip([m[0] for m in a.monoms()], a.coeffs()))
    expected = [int(by_power.get(k, 0).subs(fixture5.t, tau)) % p for k in range(8)]
    assert x == expected


def test_alpha_at_values():
    assert alpha_at(derive_parameters(3), 65521, 777, substream(1)) == 1
    assert alpha_at(P5, 65521, 0, substream(2)) == 1
    assert alpha_at(P5, 65521, 2, substream(3)) == 4033


def test_alpha_mod_prime_small():
    assert alpha_mod_prime(derive_parameters(3), 65521).coeffs == (1,)
    tr = alpha_mod_prime(P5, 65521)
    assert tr.coeffs == (1, 0, 0, 0, 0, 0, 65520, 0, 0, 0, 0, 0, 1)
    assert len(tr.nodes) == 13 and len({t for t, _ in tr.nodes}) == 13
    assert alpha_mod_prime(derive_parameters(4), 65519).coeffs == (1, 0, 65518)


def test_compute_alpha_known():
    assert compute_alpha(derive_parameters(3)).poly.coeffs == (1,)
    assert compute_alpha(P5).poly.coeffs == (1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1)
    assert compute_alpha(P5).poly == IntPoly(tuple(int(c) for c in reversed(
        sympy.Poly(fixture5.alpha_zero(), fixture5.t).all_coeffs())))
    a7 = compute_alpha(derive_parameters(7)).poly
    half = [1, 0, 0, 0, 0, 0, -1, 0, 2, 0, -1, 0, 5, 0, 2, 0, 6]
    assert a7.degree == 32 and a7.is_palindromic() and list(a7.coeffs[:17]) == half


def test_validate_alpha():
    assert validate_alpha(P5, IntPoly((1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1))).ok
    rep = validate_alpha(P5, IntPoly((1, 0, 0, 0, 0, 0, -1)))
    assert not rep.ok and "degree = d - 2s" in [c.name for c in rep.failures]
    assert validate_alpha(derive_parameters(4), IntPoly((1, 0, -1))).ok
    assert not validate_alpha(derive_parameters(4), IntPoly((1, 0, 1))).ok


def test_validation_failure_is_raised_with_report(monkeypatch):
    # a single 16-bit prime cannot hold the coefficients at n = 16, so the lift is wrong
    import poincare.alpha as mod

    real = mod.crt_lift
    monkeypatch.setattr(mod, "crt_lift", lambda res, primes: real(res[:1], primes[:1]))
    with pytest.raises(ValidationFailed) as exc:
        compute_alpha(derive_parameters(16))
    assert exc.value.report is not None and not exc.value.report.ok


def test_determinism():
    a = compute_alpha(derive_parameters(9), SolverConfig(seed=5))
    b = compute_alpha(derive_parameters(9), SolverConfig(seed=5))
    assert a == b and a.traces == b.traces


@pytest.mark.parametrize("n", range(3, 11))
def test_seed_independence(n):
    P = derive_parameters(n)
    a = compute_alpha(P, SolverConfig(seed=1)).poly
    b = compute_alpha(P, SolverConfig(seed=2024)).poly
    assert a == b


@pytest.mark.parametrize("n", range(3, 13))
def test_cross_prime_consistency(n):
    P = derive_parameters(n)
    lifted = compute_alpha(P).poly
    fresh = alpha_mod_prime(P, 65437, seed=99, prime_index=3)
    pad = list(lifted.reduce(65437)) + [0] * (P.alpha_deg + 1 - len(lifted))
    assert tuple(pad) == fresh.coeffs


def test_auto_policy_agrees_with_paper():
    P = derive_parameters(11)
    auto = compute_alpha(P, SolverConfig(primes=PrimeSet.auto(31)))
    assert auto.poly == compute_alpha(P).poly
    assert len(auto.primes) >= 2 and auto.primes[0] == 2**31 - 1


def test_parallel_primes_match_serial():
    P = derive_parameters(10)
    assert compute_alpha(P, SolverConfig(jobs=4)) == compute_alpha(P, SolverConfig(jobs=1))
