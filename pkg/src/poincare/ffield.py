"""Prime-field toolkit: dense solves, interpolation, seeded sampling and CRT lifting.

Field elements are canonical residues in ``[0, p)``. Vectorised routines work on
numpy ``int64`` arrays, which is exact as long as ``p < 2**31`` (a product of two
residues then stays below ``2**62``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
import sympy

from .errors import SingularMatrix
from .intpoly import IntPoly

PAPER_PRIMES = (65521, 65519, 65497, 65479, 65449, 65447, 65437)

MAX_MODULUS = 2**31


def pow_mod(x, e: int, mod: int):
    """``x**e % mod`` for ints and numpy int64 arrays alike (square and multiply)."""
    if isinstance(x, (int, np.integer)):
        return pow(int(x), e, mod)
    acc = np.ones_like(x)
    base = x % mod
    while e:
        if e & 1:
            acc = acc * base % mod
        base = base * base % mod
        e >>= 1
    return acc


@dataclass(frozen=True)
class PrimeField:
    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not (2 < p < MAX_MODULUS) or not sympy.isprime(p):
            raise ValueError(f"{p} is not an odd prime below 2**31")

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.modulus)

    def __int__(self) -> int:
        return self.modulus


class PrimePolicy(enum.Enum):
    PAPER_FAITHFUL = "paper"
    AUTO = "auto"


@dataclass(frozen=True)
class PrimeSet:
    """Ordered moduli plus the policy that chose them.

    For AUTO the list is open ended: :meth:`candidates` yields primes downwards
    from ``2**bits - 1`` and the engine stops once the lift stabilises.
    """

    policy: PrimePolicy
    moduli: tuple[int, ...] = PAPER_PRIMES
    bits: int = 31

    def __post_init__(self):
        if self.policy is PrimePolicy.PAPER_FAITHFUL and tuple(self.moduli) != PAPER_PRIMES:
            raise ValueError("paper policy uses exactly the seven 16-bit primes")
        if len(set(self.moduli)) != len(self.moduli):
            raise ValueError("moduli must be pairwise distinct")
        if not 3 <= self.bits <= 31:
            raise ValueError("prime bits must lie in 3..31")

    @classmethod
    def paper(cls) -> PrimeSet:
        return cls(PrimePolicy.PAPER_FAITHFUL)

    @classmethod
    def auto(cls, bits: int = 31) -> PrimeSet:
        return cls(PrimePolicy.AUTO, moduli=(), bits=bits)

    def candidates(self) -> Iterator[int]:
        if self.policy is PrimePolicy.PAPER_FAITHFUL:
            yield from self.moduli
            return
        p = 2**self.bits
        while True:
            p = sympy.prevprime(p)
            if p < 3:
                raise ValueError("ran out of primes below 2**bits")
            yield p


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the task named by ``key`` under ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), *key]))


def sample_distinct(rng: np.random.Generator, count: int, field: PrimeField | int,
                    forbidden: Iterable[int] = ()) -> list[int]:
    p = int(field)
    banned = {int(x) % p for x in forbidden}
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count + len(banned) > p:
        raise ValueError(f"cannot draw {count} distinct elements from a field of size {p}")
    out: list[int] = []
    seen = set(banned)
    while len(out) < count:
        for x in rng.integers(0, p, size=count - len(out)).tolist():
            if x not in seen:
                seen.add(x)
                out.append(x)
                if len(out) == count:
                    break
    return out


def solve_batch(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Solve the stacked systems ``a[i] x[i] = b[i]`` mod p.

    ``a`` has shape (T, k, k) and ``b`` (T, k). Returns ``(x, singular)`` where
    ``singular[i]`` flags systems with no unique solution (their ``x`` is junk).
    Pivoting takes the first nonzero entry of the column.
    """
    a = np.array(a, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    T, k, _ = a.shape
    singular = np.zeros(T, dtype=bool)
    for c in range(k):
        piv = a[:, c, c]
        for i in np.flatnonzero(piv == 0):
            nz = np.flatnonzero(a[i, c + 1:, c])
            if nz.size == 0:
                singular[i] = True
                a[i, c, c] = 1
                continue
            r = c + 1 + nz[0]
            a[i, [c, r]] = a[i, [r, c]]
            b[i, [c, r]] = b[i, [r, c]]
        inv = pow_mod(a[:, c, c], p - 2, p)
        a[:, c, c:] = a[:, c, c:] * inv[:, None] % p
        b[:, c] = b[:, c] * inv % p
        if c + 1 < k:
            f = a[:, c + 1:, c].copy()
            a[:, c + 1:, c:] = (a[:, c + 1:, c:] - f[:, :, None] * a[:, None, c, c:]) % p
            b[:, c + 1:] = (b[:, c + 1:] - f * b[:, c, None]) % p
    x = np.zeros((T, k), dtype=np.int64)
    for c in range(k - 1, -1, -1):
        tail = (a[:, c, c + 1:] * x[:, c + 1:]) % p
        x[:, c] = (b[:, c] - tail.sum(axis=1)) % p
    return x, singular


def residual_ok(a: np.ndarray, x: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Per-system check of ``a x == b`` mod p (sums of residues fit in int64)."""
    a = np.asarray(a, dtype=np.int64) % p
    prod = (a * x[:, None, :]) % p
    return (prod.sum(axis=2) % p) == (np.asarray(b, dtype=np.int64) % p)


def solve_linear(matrix: Sequence[Sequence[int]], rhs: Sequence[int], field: PrimeField | int) -> list[int]:
    """Solve one square system mod p; raises :class:`SingularMatrix` if not invertible."""
    p = int(field)
    a = np.asarray(matrix, dtype=np.int64)
    b = np.asarray(rhs, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.shape != (a.shape[0],):
        raise ValueError("expected a square matrix and a matching right-hand side")
    if a.shape[0] == 0:
        return []
    x, singular = solve_batch(a[None], b[None], p)
    if singular[0]:
        raise SingularMatrix(f"matrix is singular mod {p}")
    if not residual_ok(a[None], x, b[None], p).all():
        raise ArithmeticError("residual check failed")  # unreachable for exact arithmetic
    return x[0].tolist()


def interpolate(nodes: Sequence[tuple[int, int]], degree: int, field: PrimeField | int) -> list[int]:
    """Coefficients (low to high, length degree+1) of the interpolant through ``nodes``.

    Lagrange form: with ``M(t) = prod (t - tau_j)`` each basis polynomial is
    ``M(t) / (t - tau_j)`` scaled by ``1 / M'(tau_j)``; all synthetic divisions
    run simultaneously across nodes.
    """
    p = int(field)
    if len(nodes) != degree + 1:
        raise ValueError(f"need exactly {degree + 1} nodes, got {len(nodes)}")
    taus = np.array([int(t) % p for t, _ in nodes], dtype=np.int64)
    vals = np.array([int(v) % p for _, v in nodes], dtype=np.int64)
    if len(set(taus.tolist())) != len(taus):
        raise ValueError("interpolation nodes must be distinct")
    k = degree + 1
    # master polynomial, coefficients low to high
    master = np.zeros(k + 1, dtype=np.int64)
    master[0] = 1
    for tau in taus.tolist():
        shifted = np.concatenate(([0], master[:-1]))
        master = (shifted - tau * master) % p
    # quotients M(t)/(t - tau_j), one row per node
    quo = np.zeros((k, k), dtype=np.int64)
    quo[:, k - 1] = master[k]
    for i in range(k - 1, 0, -1):
        quo[:, i - 1] = (master[i] + taus * quo[:, i]) % p
    # M'(tau_j) = quotient_j evaluated at tau_j
    deriv = np.zeros(k, dtype=np.int64)
    for i in range(k - 1, -1, -1):
        deriv = (deriv * taus + quo[:, i]) % p
    w = vals * pow_mod(deriv, p - 2, p) % p
    return (((quo * w[:, None]) % p).sum(axis=0) % p).tolist()


def eval_mod(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def crt_lift(residues: Sequence[Sequence[int]], primes: Sequence[int] | PrimeSet) -> IntPoly:
    """Symmetric CRT lift of per-prime coefficient vectors to integer coefficients.

    Each output coefficient is the representative in ``(-M/2, M/2]`` with
    ``M`` the product of the moduli.
    """
    moduli = [int(p) for p in (primes.moduli if isinstance(primes, PrimeSet) else primes)]
    if len(residues) != len(moduli) or not moduli:
        raise ValueError("need one residue vector per prime")
    length = len(residues[0])
    if any(len(r) != length for r in residues):
        raise ValueError("residue vectors have inconsistent lengths")
    if len(set(moduli)) != len(moduli):
        raise ValueError("moduli must be distinct")
    # Garner-style accumulation: x = x_prev + M_prev * ((r - x_prev) / M_prev mod p)
    lifted = [int(v) % moduli[0] for v in residues[0]]
    big = moduli[0]
    for res, p in zip(residues[1:], moduli[1:]):
        inv = pow(big % p, -1, p)
        lifted = [x + big * (((int(r) - x) * inv) % p) for x, r in zip(lifted, res)]
        big *= p
    half = big // 2
    return IntPoly(tuple(x - big if x > half else x for x in lifted))


def lift_list(residues: Sequence[Sequence[int]], primes: Sequence[int]) -> list[int]:
    """Like :func:`crt_lift` but keeps trailing zeros (length preserved)."""
    out = crt_lift(residues, primes).to_list()
    return out + [0] * (len(residues[0]) - len(out))
