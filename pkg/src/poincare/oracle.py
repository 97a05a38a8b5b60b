"""Cayley-Sylvester dimension counts and series certification.

dim I_n^k is zero when nk is odd and otherwise N(n, k, nk/2) - N(n, k, nk/2 - 1),
where N(n, k, w) counts partitions of w into at most k parts, none larger than n.
Everything here uses exact Python integers and is independent of the modular engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InexactDivision
from .intpoly import IntPoly


def box_partition_table(n: int, K: int, W: int) -> np.ndarray:
    """Object array ``N[k, w]``: partitions of w into at most k parts, each <= n.

    Built from counts with exactly j parts by adding part sizes 1..n one at a time
    (unbounded multiplicity), then accumulated over j.
    """
    exact = np.zeros((K + 1, W + 1), dtype=object)
    exact[0, 0] = 1
    for size in range(1, n + 1):
        if size > W:
            break
        for j in range(1, K + 1):
            exact[j, size:] += exact[j - 1, :W + 1 - size]
    return np.cumsum(exact, axis=0)


def partition_count(n: int, k: int, w: int) -> int:
    """N(n, k, w); zero for negative w."""
    if w < 0:
        return 0
    return int(box_partition_table(n, k, w)[k, w])


def invariant_dim(n: int, k: int) -> int:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if (n * k) % 2:
        return 0
    w = n * k // 2
    return partition_count(n, k, w) - partition_count(n, k, w - 1)


def dimension_table(n: int, K: int) -> list[int]:
    """[dim I_n^0, ..., dim I_n^K] from a single partition table."""
    W = n * K // 2
    N = box_partition_table(n, K, W)
    dims = []
    for k in range(K + 1):
        if (n * k) % 2:
            dims.append(0)
            continue
        w = n * k // 2
        dims.append(int(N[k, w]) - (int(N[k, w - 1]) if w else 0))
    return dims


def expand_series(numerator: IntPoly, denominator: IntPoly, K: int) -> list[int]:
    """First K+1 Taylor coefficients of numerator/denominator (denominator(0) = 1)."""
    if denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    B = [(j, c) for j, c in enumerate(denominator.coeffs) if j and c]
    out: list[int] = []
    for k in range(K + 1):
        acc = numerator[k]
        for j, c in B:
            if j > k:
                break
            acc -= c * out[k - j]
        out.append(acc)
    return out


@dataclass(frozen=True)
class Certificate:
    n: int
    certified: bool
    depth: int
    first_bad: int | None = None
    expected: int | None = None
    got: int | None = None

    def __str__(self) -> str:
        if self.certified:
            return f"CERTIFIED n={self.n} K={self.depth}"
        return (f"MISMATCH n={self.n} at k={self.first_bad}: series gives {self.got}, "
                f"Cayley-Sylvester gives {self.expected}")


def certify(series) -> Certificate:
    """Compare the Taylor expansion with dimension counts through deg A + deg B.

    Two fractions whose numerator/denominator degrees are bounded by those of A/B
    and which agree to that order are equal, so a pass holds unconditionally.
    """
    A, B = series.numerator, series.denominator
    n = series.params.n
    K = A.degree + B.degree
    got = expand_series(A, B, K)
    want = dimension_table(n, K)
    for k, (g, w) in enumerate(zip(got, want)):
        if g != w:
            return Certificate(n, False, K, k, w, g)
    return Certificate(n, True, K)


def factors_poly(spec: Sequence[tuple[int, int]] | IntPoly) -> IntPoly:
    if isinstance(spec, IntPoly):
        return spec
    return IntPoly.product(IntPoly.binomial(j, sign) for sign, j in spec)


def howe_coefficient(series, denominator: Sequence[tuple[int, int]] | IntPoly, k: int) -> int:
    """Coefficient of t^k in the numerator of P_n rewritten over ``denominator``.

    ``denominator`` is an IntPoly or a list of ``(sign, j)`` for ``1 + sign*t^j``.
    The new numerator is A * denominator / B and must be a polynomial.
    """
    D = factors_poly(denominator)
    if D[0] != 1:
        raise ValueError("denominator must have constant term 1")
    num = (series.numerator * D).exact_div(series.denominator, "requested denominator is incompatible")
    return num[k]
