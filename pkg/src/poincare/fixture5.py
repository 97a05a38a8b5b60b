"""Explicit Bezout cofactors for the binary quintic, checked as exact polynomial identities."""

from __future__ import annotations

from dataclasses import dataclass

import sympy

z, t = sympy.symbols("z t")

PHI = z**7 * (z**2 - 1) * (1 - t**4) * (1 - t**6) * (1 - t**8)
P = (1 - t * z) * (1 - t * z**3) * (1 - t * z**5)
Q = (z - t) * (z**3 - t) * (z**5 - t)

A = ((1 - t**6 + t**12)
     - t * (1 + t**2 - t**6) * (1 - t**2 - t**6) * z
     + t**2 * (1 - t**6 + t**8) * z**2
     - t * (1 - t**4) * (1 - t**6 - t**8) * z**3
     + t**2 * (1 - t**4) * (1 + t**2 - t**8) * z**4
     - t**5 * (1 - t**2 + t**8) * z**5
     + t**2 * (1 + t**4 - t**6) * (1 - t**4 - t**6) * z**6
     - t**3 * (1 - t**6 + t**12) * z**7)

B = (t**3 * (1 - t**6 + t**12)
     - t**2 * (1 + t**4 - t**6) * (1 - t**4 - t**6) * z
     + t**5 * (1 - t**2 + t**8) * z**2
     - t**2 * (1 - t**4) * (1 + t**2 - t**8) * z**3
     + t * (1 - t**4) * (1 - t**6 - t**8) * z**4
     - t**2 * (1 - t**6 + t**8) * z**5
     + t * (1 + t**2 - t**6) * (1 - t**2 - t**6) * z**6
     - (1 - t**6 + t**12) * z**7)

M = 9


@dataclass(frozen=True)
class FixtureResult:
    bezout: bool
    reflection: bool
    lhs_terms: int
    rhs_terms: int

    @property
    def ok(self) -> bool:
        return self.bezout and self.reflection


def _terms(expr) -> int:
    return len(sympy.Poly(expr, z, t).terms()) if expr != 0 else 0


def check_fixture(a=A, b=B, p=P, q=Q, phi=PHI) -> FixtureResult:
    """a q + b p == phi, and b(z, t) == -z^(m-2) a(1/z, t)."""
    lhs = sympy.expand(a * q + b * p)
    rhs = sympy.expand(phi)
    reflected = sympy.expand(sympy.cancel(-z ** (M - 2) * a.subs(z, 1 / z)))
    return FixtureResult(
        bezout=sympy.expand(lhs - rhs) == 0,
        reflection=sympy.expand(reflected - b) == 0,
        lhs_terms=_terms(lhs),
        rhs_terms=_terms(rhs),
    )


def drop_term(expr, index: int = 0):
    """``expr`` with one monomial removed (fault injection)."""
    terms = sympy.Add.make_args(sympy.expand(expr))
    return sympy.Add(*(x for i, x in enumerate(terms) if i != index % len(terms)))


def alpha_zero():
    """Constant-in-z part of the printed cofactor, as a sympy expression in t."""
    return sympy.expand(A).subs(z, 0)
