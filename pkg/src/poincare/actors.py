"""Integer invariants of the binary n-ic and point evaluation of the auxiliary polynomials.

The two bivariate actors are products of ``s`` binomials in ``t`` and a power of ``z``::

    p(z, t) = prod_i (1 - t z^e_i)        q(z, t) = prod_i (z^e_i - t)

with exponents ``e_i = 2i - 1`` (n odd) or ``e_i = 2i`` (n even), ``i = 1..s``.
They are only ever evaluated from this product form. The evaluators accept
plain ints, ``Fraction``, sympy symbols or numpy int64 arrays; pass ``mod``
to reduce every intermediate product into a prime field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .ffield import pow_mod
from .intpoly import IntPoly


class Parity(enum.Enum):
    ODD = "odd"
    EVEN2 = "even2"  # n = 2 mod 4
    EVEN4 = "even4"  # n = 0 mod 4


@dataclass(frozen=True)
class Parameters:
    n: int
    s: int
    m: int
    d: int
    alpha_deg: int
    delta: int
    parity: Parity

    @property
    def exponents(self) -> tuple[int, ...]:
        """z-exponents of the s binomial factors of p and q."""
        off = 1 if self.parity is Parity.ODD else 0
        return tuple(2 * i - off for i in range(1, self.s + 1))

    @property
    def unknowns(self) -> int:
        """Number of unknown z-coefficients of the cofactor, m - 1."""
        return self.m - 1


def derive_parameters(n: int) -> Parameters:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"degree n must be an integer >= 3, got {n!r}")
    if n % 2:
        s = (n + 1) // 2
        m = s * s
        d = 2 * s * (n - 2)
        delta = 2 * s * (s - 2)
        parity = Parity.ODD
    else:
        s = n // 2
        m = s * (s + 1)
        d = s * (n - 1)
        if n % 4 == 2:
            delta = (s * (2 * s - 3) - 1) // 2
            parity = Parity.EVEN2
        else:
            delta = s * (s - 2)
            parity = Parity.EVEN4
    return Parameters(n=n, s=s, m=m, d=d, alpha_deg=d - 2 * s, delta=delta, parity=parity)


def _mul(a, b, mod):
    return a * b if mod is None else a * b % mod


def eval_p(params: Parameters, z, t, mod: int | None = None):
    """``p(z, t)``: s multiplications by the power ladder plus s by the factors."""
    odd = params.parity is Parity.ODD
    step = _mul(z, z, mod)
    pw = z if odd else step
    acc = 1
    for _ in range(params.s):
        f = 1 - _mul(t, pw, mod)
        acc = _mul(acc, f if mod is None else f % mod, mod)
        pw = _mul(pw, step, mod)
    return acc


def eval_q(params: Parameters, z, t, mod: int | None = None):
    """``q(z, t)``; at z = 0 this is ``(-t)**s``."""
    odd = params.parity is Parity.ODD
    step = _mul(z, z, mod)
    pw = z if odd else step
    acc = 1
    for _ in range(params.s):
        f = pw - t
        acc = _mul(acc, f if mod is None else f % mod, mod)
        pw = _mul(pw, step, mod)
    return acc


@lru_cache(maxsize=64)
def _r_cached(n: int) -> IntPoly:
    if n % 2:
        return IntPoly.product(IntPoly.binomial(2 * i) for i in range(2, n))
    return IntPoly((1, 1)) * IntPoly.product(IntPoly.binomial(i) for i in range(2, n))


def build_r(params: Parameters) -> IntPoly:
    """Expanded ``r_n(t)``; degree ``params.d`` and constant term 1."""
    return _r_cached(params.n)


def r_factors(params: Parameters) -> list[tuple[int, int]]:
    """``r_n`` as a list of ``(sign, j)`` standing for ``1 + sign * t**j``."""
    n = params.n
    if n % 2:
        return [(-1, 2 * i) for i in range(2, n)]
    return [(1, 1)] + [(-1, i) for i in range(2, n)]


def eval_phi(params: Parameters, z, t, r: IntPoly | None = None, mod: int | None = None):
    """``z^(m-2) (z^2 - 1) r(t)``."""
    if r is None:
        r = build_r(params)
    zz = z * z if mod is None else z * z % mod
    if mod is None:
        zpow = z ** (params.m - 2)
        return zpow * (zz - 1) * r(t)
    zpow = pow_mod(z, params.m - 2, mod)
    return zpow * ((zz - 1) % mod) % mod * r(t, mod) % mod

