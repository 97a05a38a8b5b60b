"""Assembly of P_n = A_n / B_n from alpha_0 and r_n, plus the structural checks on the result."""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .actors import Parameters, Parity, build_r, r_factors
from .alpha import AlphaPolynomial
from .checks import Report
from .errors import InexactDivision
from .intpoly import IntPoly


@dataclass(frozen=True)
class Factor:
    """``(1 + sign * t**j) ** power``; power -1 marks a factor divided out of r_n."""

    sign: int
    j: int
    power: int = 1

    @property
    def poly(self) -> IntPoly:
        return IntPoly.binomial(self.j, self.sign)

    def descriptor(self) -> dict:
        body = "t" if self.j == 1 else f"t^{self.j}"
        return {"factor": f"1{'+' if self.sign > 0 else '-'}{body}", "sign": self.sign,
                "j": self.j, "power": self.power}

    @classmethod
    def from_descriptor(cls, d: dict) -> Factor:
        return cls(int(d["sign"]), int(d["j"]), int(d.get("power", 1)))


@dataclass(frozen=True)
class PoincareRational:
    params: Parameters
    numerator: IntPoly
    denominator: IntPoly
    factors: tuple[Factor, ...]

    @property
    def kind(self) -> str:
        return self.params.parity.value

    def factored_denominator(self) -> IntPoly:
        out = IntPoly.one()
        for f in self.factors:
            if f.power > 0:
                out = out * IntPoly.product([f.poly] * f.power)
        for f in self.factors:
            if f.power < 0:
                for _ in range(-f.power):
                    out = out.exact_div(f.poly, f"denominator factor {f.descriptor()['factor']}")
        return out


@dataclass(frozen=True)
class CoefficientTable:
    n: int
    delta: int
    half: tuple[int, ...]

    def full(self) -> IntPoly:
        """Palindromic reflection back to the whole numerator."""
        h = list(self.half)
        return IntPoly(tuple(h + h[-2::-1]))


def denominator_factors(params: Parameters) -> tuple[Factor, ...]:
    factors = [Factor(sign, j) for sign, j in r_factors(params)]
    if params.parity is Parity.EVEN4:
        factors.append(Factor(1, params.s - 1, -1))
    return tuple(factors)


def assemble(params: Parameters, alpha: AlphaPolynomial | IntPoly, r: IntPoly | None = None) -> PoincareRational:
    """Divide out the parity-dependent factors; every division is checked exact."""
    a0 = alpha.poly if isinstance(alpha, AlphaPolynomial) else alpha
    r = build_r(params) if r is None else r
    s = params.s
    if params.parity is Parity.ODD:
        num, den = a0, r
    else:
        num = a0.exact_div(IntPoly.binomial(1), "alpha_0 by (1-t)")
        den = r
        if params.parity is Parity.EVEN4:
            extra = IntPoly.binomial(s - 1, +1)
            num = num.exact_div(extra, f"alpha_0/(1-t) by (1+t^{s - 1})")
            den = r.exact_div(extra, f"r_{params.n} by (1+t^{s - 1})")
    return PoincareRational(params, num, den, denominator_factors(params))


def from_half_table(params: Parameters, half) -> PoincareRational:
    """Rebuild a series from a stored half table (the denominator is determined by n)."""
    table = CoefficientTable(params.n, params.delta, tuple(int(c) for c in half))
    den = build_r(params)
    if params.parity is Parity.EVEN4:
        den = den.exact_div(IntPoly.binomial(params.s - 1, +1))
    return PoincareRational(params, table.full(), den, denominator_factors(params))


def half_table(series: PoincareRational) -> CoefficientTable:
    A = series.numerator
    if A.degree % 2 or not A.is_palindromic():
        raise ValueError(f"numerator for n={series.params.n} is not an even-degree palindrome")
    delta = A.degree // 2
    return CoefficientTable(series.params.n, delta, A.coeffs[:delta + 1])


def _gcd_is_one(a: IntPoly, b: IntPoly) -> tuple[bool, str]:
    t = sympy.Symbol("t")
    pa = sympy.Poly(list(reversed(a.coeffs)), t, domain="ZZ")
    pb = sympy.Poly(list(reversed(b.coeffs)), t, domain="ZZ")
    g = sympy.gcd(pa, pb)
    return g.degree() == 0, f"gcd degree {g.degree()}"


def structural_checks(series: PoincareRational, with_gcd: bool = True) -> Report:
    P = series.params
    n = P.n
    A, B = series.numerator, series.denominator
    rep = Report(f"structural checks for n={n}")
    rep.add("A(0) = B(0) = 1", A[0] == 1 and B[0] == 1)
    rep.add("factored denominator = B", series.factored_denominator() == B)
    pal = A.is_palindromic() and A.degree % 2 == 0
    rep.add("A palindromic of even degree", pal)
    rep.add("delta formula", A.degree == 2 * P.delta, f"deg A = {A.degree}, 2*delta = {2 * P.delta}")
    rep.add("deg A - deg B = -(n+1)", A.degree - B.degree == -(n + 1), f"{A.degree} - {B.degree}")
    one_minus_t = IntPoly.binomial(1)
    pole = B.multiplicity(one_minus_t)
    rep.add("pole order n-2 at t=1", pole == n - 2 and A(1) != 0, f"(1-t)-multiplicity {pole}, A(1) = {A(1)}")
    if with_gcd:
        ok, detail = _gcd_is_one(A, B)
        rep.add("gcd(A, B) = 1", ok, detail)
    if n % 2 and pal:
        c = A.coeffs[:P.delta + 1]
        nonzero = [i for i in range(len(c)) if (i % 2 or i == 2) and c[i]]
        rep.add("c_i = 0 for odd i and i = 2", not nonzero, f"nonzero at {nonzero}" if nonzero else "")
        if P.delta >= 4:
            rep.add("c_4 = floor((n-3)/6)", c[4] == (n - 3) // 6, f"c_4 = {c[4]}")
        # sign properties quoted without proof; reported as warnings only
        for i, lo in ((4, 0), (8, 0), (6, 15), (10, 9)):
            if n >= lo and P.delta >= i:
                rep.add(f"c_{i} >= 0", c[i] >= 0, f"c_{i} = {c[i]}", soft=True)
    return rep
