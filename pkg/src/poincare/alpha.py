"""Multi-modular computation of the constant-in-z cofactor coefficient alpha_0(t).

For a fixed prime and a node tau, the unknowns alpha_0(tau) .. alpha_{m-2}(tau)
satisfy, for every z,

    phi(z, tau) = sum_k alpha_k(tau) * (z^k q(z, tau) - z^(m-2-k) p(z, tau)),

so m - 1 random nonzero z-values give a square system. Only the k = 0 entry is
kept. Repeating over alpha_deg + 1 distinct nodes and interpolating yields
alpha_0 mod the prime; several primes are then lifted by CRT.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .actors import Parameters, Parity, build_r, eval_p, eval_phi, eval_q
from .checks import Report
from .errors import ExhaustedRetries, ValidationFailed
from .ffield import (
    PrimeField,
    PrimePolicy,
    PrimeSet,
    crt_lift,
    interpolate,
    residual_ok,
    sample_distinct,
    solve_batch,
    substream,
)
from .intpoly import IntPoly

# cap on T*k*k entries per batched elimination (memory bound)
BATCH_ENTRIES = 3_000_000


@dataclass(frozen=True)
class SolverConfig:
    seed: int = 42
    primes: PrimeSet = field(default_factory=PrimeSet.paper)
    max_resample_retries: int = 5
    max_tau_replacements: int = 10
    jobs: int = 1

    def __post_init__(self):
        if self.max_resample_retries < 1:
            raise ValueError("max_resample_retries must be >= 1")
        if self.max_tau_replacements < 0:
            raise ValueError("max_tau_replacements must be >= 0")


@dataclass(frozen=True)
class AlphaTrace:
    prime: int
    nodes: tuple[tuple[int, int], ...]
    coeffs: tuple[int, ...]
    timings: dict = field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class AlphaPolynomial:
    poly: IntPoly
    params: Parameters
    traces: tuple[AlphaTrace, ...]
    report: Report | None = field(default=None, compare=False, repr=False)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(tr.prime for tr in self.traces)


def build_system(params: Parameters, p: int, zetas: np.ndarray, taus: np.ndarray,
                 r: IntPoly | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Matrices (T, m-1, m-1) and right-hand sides (T, m-1) for the stacked nodes.

    ``zetas`` has shape (T, m-1), one row of z-samples per node in ``taus``.
    """
    r = build_r(params) if r is None else r
    k = params.m - 1
    z = np.asarray(zetas, dtype=np.int64) % p
    t = (np.asarray(taus, dtype=np.int64) % p)[:, None]
    pz = eval_p(params, z, t, mod=p)
    qz = eval_q(params, z, t, mod=p)
    rhs = eval_phi(params, z, t, r, mod=p)
    powers = np.empty(z.shape + (k,), dtype=np.int64)
    powers[..., 0] = 1
    for j in range(1, k):
        powers[..., j] = powers[..., j - 1] * z % p
    # column j: z^j q - z^(m-2-j) p ; reversing the power axis gives z^(m-2-j)
    mat = (powers * qz[..., None] % p - powers[..., ::-1] * pz[..., None] % p) % p
    return mat, rhs


def _solve_nodes(params: Parameters, p: int, taus: list[int], rngs: list[np.random.Generator],
                 retries: int, r: IntPoly, timings: dict) -> list[int | None]:
    """alpha_0(tau) for each node, or None where every resample stayed singular."""
    k = params.m - 1
    values: list[int | None] = [None] * len(taus)
    pending = list(range(len(taus)))
    chunk = max(1, BATCH_ENTRIES // max(1, k * k))
    for _attempt in range(retries + 1):
        if not pending:
            break
        still = []
        for start in range(0, len(pending), chunk):
            idx = pending[start:start + chunk]
            t0 = time.perf_counter()
            zetas = np.array([sample_distinct(rngs[i], k, p, forbidden=(0,)) for i in idx],
                             dtype=np.int64).reshape(len(idx), k)
            t1 = time.perf_counter()
            tau_arr = np.array([taus[i] for i in idx], dtype=np.int64)
            mat, rhs = build_system(params, p, zetas, tau_arr, r)
            t2 = time.perf_counter()
            x, singular = solve_batch(mat, rhs, p)
            singular |= ~residual_ok(mat, x, rhs, p).all(axis=1)
            t3 = time.perf_counter()
            timings["sampling"] = timings.get("sampling", 0.0) + t1 - t0
            timings["systems"] = timings.get("systems", 0.0) + t2 - t1
            timings["solves"] = timings.get("solves", 0.0) + t3 - t2
            for pos, i in enumerate(idx):
                if singular[pos]:
                    still.append(i)
                else:
                    values[i] = int(x[pos, 0])
        pending = still
    return values


def alpha_at(params: Parameters, field: PrimeField | int, tau: int, rng: np.random.Generator,
             retries: int = 5) -> int:
    """alpha_0(tau) mod p from one square solve (with up to ``retries`` resamples)."""
    p = int(field)
    if params.m - 1 > p - 1:
        raise ValueError("field too small for the required z-samples")
    val = _solve_nodes(params, p, [int(tau) % p], [rng], retries, build_r(params), {})[0]
    if val is None:
        raise ExhaustedRetries(f"singular systems at tau={tau} mod {p} after {retries} resamples")
    return val


def alpha_mod_prime(params: Parameters, field: PrimeField | int, seed: int = 42, prime_index: int = 0,
                    config: SolverConfig | None = None) -> AlphaTrace:
    """alpha_0 mod p from alpha_deg + 1 random nodes.

    Node ``j`` draws its z-samples from the substream ``(seed, prime_index, j)``;
    replacement nodes continue the numbering past alpha_deg.
    """
    config = config or SolverConfig(seed=seed)
    p = int(field)
    count = params.alpha_deg + 1
    if p <= count or p <= params.m:
        raise ValueError(f"prime {p} too small for n={params.n}")
    timings: dict = {}
    r = build_r(params)
    tau_rng = substream(seed, prime_index)
    taus = sample_distinct(tau_rng, count, p)
    used = set(taus)
    values = _solve_nodes(params, p, taus, [substream(seed, prime_index, j) for j in range(count)],
                          config.max_resample_retries, r, timings)
    next_node = count
    replacements = 0
    while any(v is None for v in values):
        for j, v in enumerate(values):
            if v is not None:
                continue
            if replacements >= config.max_tau_replacements:
                raise ExhaustedRetries(
                    f"n={params.n}, p={p}: still singular after {replacements} node replacements")
            (new_tau,) = sample_distinct(tau_rng, 1, p, forbidden=used)
            used.add(new_tau)
            replacements += 1
            taus[j] = new_tau
            values[j] = _solve_nodes(params, p, [new_tau], [substream(seed, prime_index, next_node)],
                                     config.max_resample_retries, r, timings)[0]
            next_node += 1
    nodes = tuple(zip(taus, values))
    t0 = time.perf_counter()
    coeffs = interpolate(nodes, params.alpha_deg, p)
    timings["interpolation"] = time.perf_counter() - t0
    return AlphaTrace(prime=p, nodes=nodes, coeffs=tuple(coeffs), timings=timings)


def _prime_task(args) -> AlphaTrace:
    params, p, idx, config = args
    return alpha_mod_prime(params, p, config.seed, idx, config)


def _run_primes(params: Parameters, primes: list[tuple[int, int]], config: SolverConfig) -> list[AlphaTrace]:
    tasks = [(params, p, idx, config) for idx, p in primes]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(config.jobs, len(tasks))) as ex:
            return list(ex.map(_prime_task, tasks))
    return [_prime_task(t) for t in tasks]


def _padded(coeffs, length):
    return list(coeffs) + [0] * (length - len(coeffs))


def compute_alpha(params: Parameters, config: SolverConfig | None = None,
                  validate: bool = True) -> AlphaPolynomial:
    """Lift alpha_0 over Z and validate it; raises ValidationFailed with the report."""
    config = config or SolverConfig()
    length = params.alpha_deg + 1
    crt_time = 0.0
    if config.primes.policy is PrimePolicy.PAPER_FAITHFUL:
        traces = _run_primes(params, list(enumerate(config.primes.moduli)), config)
        t0 = time.perf_counter()
        poly = crt_lift([_padded(tr.coeffs, length) for tr in traces], [tr.prime for tr in traces])
        crt_time = time.perf_counter() - t0
    else:
        traces = []
        previous = None
        gen = enumerate(config.primes.candidates())
        poly = None
        while poly is None:
            batch = [next(gen) for _ in range(max(1, config.jobs))]
            for tr in _run_primes(params, batch, config):
                traces.append(tr)
                t0 = time.perf_counter()
                cur = crt_lift([_padded(t.coeffs, length) for t in traces], [t.prime for t in traces])
                crt_time += time.perf_counter() - t0
                if previous is not None and cur == previous:
                    poly = cur
                    break
                previous = cur
    if traces:
        traces[0].timings["crt"] = crt_time
    report = validate_alpha(params, poly) if validate else None
    if report is not None and not report.ok:
        raise ValidationFailed(f"alpha_0 for n={params.n} failed validation", report)
    return AlphaPolynomial(poly=poly, params=params, traces=tuple(traces), report=report)


def validate_alpha(params: Parameters, alpha: IntPoly) -> Report:
    rep = Report(f"alpha_0 checks for n={params.n}")
    n, s = params.n, params.s
    rep.add("alpha(0) = 1", alpha[0] == 1, f"alpha(0) = {alpha[0]}")
    rep.add("degree = d - 2s", alpha.degree == params.alpha_deg,
            f"degree {alpha.degree}, expected {params.alpha_deg}")
    sign = (-1) ** (n + 1)
    D = params.alpha_deg
    bad = [k for k in range(D + 1) if alpha[D - k] != sign * alpha[k]]
    rep.add("reflection symmetry", not bad and alpha.degree <= D,
            "" if not bad else f"c[{D - bad[0]}] = {alpha[D - bad[0]]} vs sign*c[{bad[0]}] = {sign * alpha[bad[0]]}")
    if n % 2 == 0:
        at_one = alpha(1)
        rep.add("alpha(1) = 0", at_one == 0, f"alpha(1) = {at_one}")
    if params.parity is Parity.EVEN4:
        q, rem = alpha.divmod(IntPoly.binomial(1))
        if rem:
            rep.add("(1+t^(s-1)) divides alpha/(1-t)", False, "alpha not divisible by 1-t")
        else:
            _, rem2 = q.divmod(IntPoly.binomial(s - 1, +1))
            rep.add("(1+t^(s-1)) divides alpha/(1-t)", not rem2, f"remainder {rem2}" if rem2 else "")
    return rep
