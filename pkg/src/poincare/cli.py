"""Command-line front end.

Exit codes: 0 ok, 1 a mathematical check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .alpha import SolverConfig
from .errors import ExhaustedRetries, InexactDivision, ValidationFailed
from .ffield import PrimeSet
from .oracle import certify
from .tablefile import ResultCache, TableFile, text_line

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _config(args, jobs: int | None = None) -> SolverConfig:
    primes = PrimeSet.paper() if args.primes == "paper" else PrimeSet.auto(args.prime_bits)
    return SolverConfig(seed=args.seed, primes=primes, jobs=args.jobs if jobs is None else jobs)


def _cache(args):
    return None if args.no_cache else ResultCache.from_env(args.cache_dir)


def _denominator_text(series) -> str:
    pos = "".join(f"({f.descriptor()['factor']})" for f in series.factors if f.power > 0)
    neg = "".join(f"({f.descriptor()['factor']})" for f in series.factors if f.power < 0)
    return f"B[{series.params.n}] = {pos}" + (f" / {neg}" if neg else "")


def _bench(label: str, timings: dict, extra: dict | None = None) -> None:
    parts = {**timings, **(extra or {})}
    body = " ".join(f"{k}={v:.3f}s" for k, v in parts.items())
    print(f"bench {label}: {body}", file=sys.stderr)


def _math_failure(n: int, exc: Exception) -> int:
    print(f"n={n}: {type(exc).__name__}: {exc}", file=sys.stderr)
    report = getattr(exc, "report", None)
    if report is not None:
        print(report, file=sys.stderr)
    rem = getattr(exc, "remainder", None)
    if rem is not None:
        print(f"  nonzero remainder: {rem}", file=sys.stderr)
    return EXIT_MATH


def _compute_one(args_tuple):
    from .pipeline import compute

    n, config, cache_dir = args_tuple
    cache = ResultCache(cache_dir) if cache_dir else None
    return compute(n, config, cache)


def cmd_compute(args) -> int:
    try:
        res = _compute_one((args.n, _config(args), _cache_dir(args)))
    except (ValidationFailed, InexactDivision, ExhaustedRetries) as exc:
        return _math_failure(args.n, exc)
    if args.emit == "json":
        print(json.dumps(res.to_json()))
    else:
        print(text_line(args.n, res.table.half))
        print(_denominator_text(res.series))
    if args.bench:
        _bench(f"n={args.n}", res.timings, {"total": res.wall_time})
    if not res.report.ok:
        print(res.report, file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def _cache_dir(args):
    c = _cache(args)
    return str(c.dir) if c else None


def _compute_range(args, ns):
    """Results in n order; ``--jobs`` fans whole degrees across worker processes."""
    cache_dir = _cache_dir(args)
    if args.jobs > 1 and len(ns) > 1:
        tasks = [(n, _config(args, jobs=1), cache_dir) for n in ns]
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            futures = [ex.submit(_compute_one, t) for t in tasks]
            for n, fut in zip(ns, futures):
                yield n, fut
    else:
        for n in ns:
            yield n, (n, _config(args, jobs=1), cache_dir)


def _resolve(item):
    if isinstance(item, tuple):
        return _compute_one(item)
    return item.result()


def cmd_table(args) -> int:
    if args.from_n > args.to_n:
        print("--from must not exceed --to", file=sys.stderr)
        return EXIT_USAGE
    table = TableFile(seed=args.seed, primes=args.primes)
    for n, item in _compute_range(args, list(range(args.from_n, args.to_n + 1))):
        try:
            res = _resolve(item)
        except (ValidationFailed, InexactDivision, ExhaustedRetries) as exc:
            return _math_failure(n, exc)
        if not res.report.ok:
            print(f"n={n}: structural checks failed", file=sys.stderr)
            print(res.report, file=sys.stderr)
            return EXIT_MATH
        table.entries[n] = res.to_json()
        table.wall_times[n] = res.wall_time
        if args.bench:
            _bench(f"n={n}", res.timings, {"total": res.wall_time, "cached": float(res.cached)})
    try:
        if args.out:
            table.write(args.out)
        else:
            sys.stdout.write(table.text())
        if args.figures:
            from .plotting import write_figures

            for p in write_figures(table.halves(), table.wall_times, args.figures):
                print(f"wrote {p}", file=sys.stderr)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        res = _compute_one((args.n, _config(args), _cache_dir(args)))
    except (ValidationFailed, InexactDivision, ExhaustedRetries) as exc:
        return _math_failure(args.n, exc)
    t0 = time.perf_counter()
    cert = certify(res.series)
    if args.bench:
        _bench(f"n={args.n}", res.timings, {"total": res.wall_time, "certify": time.perf_counter() - t0})
    print(cert)
    return EXIT_OK if cert.certified else EXIT_MATH


def cmd_fixture5(args) -> int:
    from . import fixture5

    a = fixture5.drop_term(fixture5.A, args.inject_fault) if args.inject_fault is not None else fixture5.A
    res = fixture5.check_fixture(a=a)
    if args.verbose:
        print(f"a*q + b*p: {res.lhs_terms} terms; phi: {res.rhs_terms} terms")
    print(f"bezout identity: {'ok' if res.bezout else 'FAILED'}")
    print(f"z-reflection b = -z^(m-2) a(1/z, t): {'ok' if res.reflection else 'FAILED'}")
    return EXIT_OK if res.ok else EXIT_MATH


def cmd_verify(args) -> int:
    try:
        stored = TableFile.load(args.against)
    except (OSError, ValueError, KeyError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    ns = sorted(stored.entries)
    bad = []
    halves = stored.halves()
    for n, item in _compute_range(args, ns):
        try:
            res = _resolve(item)
        except (ValidationFailed, InexactDivision, ExhaustedRetries) as exc:
            return _math_failure(n, exc)
        if list(res.table.half) != halves[n]:
            bad.append(n)
            print(f"A[{n}] differs", file=sys.stderr)
    print("verify: " + ("all entries match" if not bad else f"mismatch at n={bad}"))
    return EXIT_OK if not bad else EXIT_MATH


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--primes", choices=("paper", "auto"), default="paper")
    p.add_argument("--prime-bits", type=int, default=31)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bench", action="store_true", help="print per-phase wall times to stderr")
    p.add_argument("--cache-dir", default=None, help="overrides $POINCARE_CACHE_DIR")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--max-n", type=int, default=30)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poincare", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="numerator half-table and denominator for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("text", "json"), default="text")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="compute a range of n and write JSON + text")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--out", default=None, help="JSON path; the text table goes next to it")
    p.add_argument("--figures", default=None, help="directory for PNG figures")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", help="check the series against Cayley-Sylvester counts")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("fixture5", help="verify the explicit n=5 cofactor identities")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--inject-fault", type=int, default=None, metavar="TERM",
                   help="drop monomial TERM from the cofactor a before checking")
    p.set_defaults(func=cmd_fixture5)

    p = sub.add_parser("verify", help="diff a stored table against fresh results")
    p.add_argument("--against", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    lo = getattr(args, "n", None), getattr(args, "from_n", None), getattr(args, "to_n", None)
    max_n = getattr(args, "max_n", 30)
    for v in lo:
        if v is not None and not 3 <= v <= max_n:
            parser.error(f"n must lie in 3..{max_n}, got {v}")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    if getattr(args, "prime_bits", 31) not in range(3, 32):
        parser.error("--prime-bits must lie in 3..31")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
