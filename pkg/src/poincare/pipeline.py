"""End-to-end driver: alpha_0 -> assembled series -> checks, with optional result cache."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .actors import Parameters, derive_parameters
from .alpha import AlphaPolynomial, SolverConfig, compute_alpha
from .assemble import CoefficientTable, PoincareRational, assemble, from_half_table, half_table, structural_checks
from .checks import Report
from .tablefile import ResultCache, entry_from_json, entry_to_json


@dataclass
class Result:
    params: Parameters
    series: PoincareRational
    table: CoefficientTable
    report: Report
    seed: int
    primes: tuple[int, ...]
    wall_time: float
    timings: dict = field(default_factory=dict)
    cached: bool = False
    alpha: AlphaPolynomial | None = None  # None for cache hits

    def to_json(self) -> dict:
        return entry_to_json(self.series, self.table, self.seed, self.primes)


def compute(n: int, config: SolverConfig | None = None, cache: ResultCache | None = None) -> Result:
    """Compute and check P_n. Raises ValidationFailed / InexactDivision on conjecture failures."""
    config = config or SolverConfig()
    params = derive_parameters(n)
    policy = config.primes.policy.value
    if cache is not None:
        hit = cache.get(n, config.seed, policy)
        if hit is not None:
            entry, wall = hit
            _, half, seed, primes = entry_from_json(entry)
            series = from_half_table(params, half)
            report = structural_checks(series)
            if report.ok:
                return Result(params, series, half_table(series), report, seed, tuple(primes), wall, cached=True)
    start = time.perf_counter()
    alpha = compute_alpha(params, config)
    series = assemble(params, alpha)
    report = structural_checks(series)
    wall = time.perf_counter() - start
    timings: dict = {}
    for tr in alpha.traces:
        for key, val in tr.timings.items():
            timings[key] = timings.get(key, 0.0) + val
    result = Result(params, series, half_table(series), report, config.seed, alpha.primes, wall, timings,
                    alpha=alpha)
    if cache is not None and report.ok:
        cache.put(n, config.seed, policy, result.to_json(), wall)
    return result
