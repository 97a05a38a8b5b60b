"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InexactDivision


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in t; ``coeffs[i]`` is the coefficient of t**i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def binomial(cls, j: int, sign: int = -1) -> IntPoly:
        """``1 + sign * t**j``; j = 0 is rejected since it degenerates."""
        if j <= 0:
            raise ValueError("exponent must be positive")
        c = [0] * (j + 1)
        c[0] = 1
        c[j] += sign
        return cls(c)

    @classmethod
    def product(cls, factors: Iterable[IntPoly]) -> IntPoly:
        out = cls.one()
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self), len(other))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        # skip zero coefficients: the factors used here are very sparse
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x, mod: int | None = None):
        acc = 0
        if mod is None:
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        for c in reversed(self.coeffs):
            acc = (acc * x + c % mod) % mod
        return acc

    def reduce(self, mod: int) -> list[int]:
        """Coefficients as canonical residues mod ``mod`` (length preserved)."""
        return [c % mod for c in self.coeffs]

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division over Z; the divisor must have leading coefficient +-1."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) <= dd:
            return IntPoly(), IntPoly(rem)
        quo = [0] * (len(rem) - dd)
        dc = divisor.coeffs
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lead
            if q:
                quo[k - dd] = q
                for i, c in enumerate(dc):
                    if c:
                        rem[k - dd + i] -= q * c
        return IntPoly(quo), IntPoly(rem[:dd])

    def exact_div(self, divisor: IntPoly, what: str = "") -> IntPoly:
        """Quotient, re-verified by multiplication; raises on a nonzero remainder."""
        q, r = self.divmod(divisor)
        if r:
            raise InexactDivision(what or f"division by {divisor}", remainder=r)
        if q * divisor != self:
            raise InexactDivision(f"round trip failed for {what or divisor}", remainder=r)
        return q

    def multiplicity(self, divisor: IntPoly) -> int:
        """Largest e with divisor**e | self (self must be nonzero)."""
        if not self:
            raise ValueError("multiplicity of the zero polynomial")
        e, cur = 0, self
        while True:
            q, r = cur.divmod(divisor)
            if r:
                return e
            e, cur = e + 1, q

    def is_palindromic(self, sign: int = 1) -> bool:
        c = self.coeffs
        return all(c[len(c) - 1 - k] == sign * c[k] for k in range(len(c)))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def poly(coeffs: Sequence[int]) -> IntPoly:
    return IntPoly(tuple(coeffs))
