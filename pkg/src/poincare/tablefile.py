"""Text and JSON renderings of coefficient tables, and the on-disk result cache.

Text lines look like ``A[5] = [1,0,0,0,0,0,-1]``. In JSON, integers beyond
53 bits are written as decimal strings so that every consumer reads them exactly.
"""

from __future__ import annotations

import json
import logging
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

SAFE_INT = 2**53
CACHE_ENV = "POINCARE_CACHE_DIR"


def int_out(x: int):
    return x if -SAFE_INT < x < SAFE_INT else str(x)


def int_in(x) -> int:
    return int(x)


def text_line(n: int, half) -> str:
    return f"A[{n}] = [" + ",".join(str(int(c)) for c in half) + "]"


_LINE = re.compile(r"A\[(\d+)\]\s*=\s*\[([^\]]*)\]")


def parse_text(text: str) -> dict[int, list[int]]:
    """Read ``A[n] = [...]`` records; whitespace and line breaks inside a list are ignored."""
    out = {}
    for m in _LINE.finditer(text):
        body = re.sub(r"\s+", "", m.group(2))
        out[int(m.group(1))] = [int(x) for x in body.split(",") if x]
    return out


def entry_to_json(series, table, seed: int, primes) -> dict:
    return {
        "n": series.params.n,
        "s": series.params.s,
        "delta": table.delta,
        "half": [int_out(c) for c in table.half],
        "denominator": {
            "kind": series.kind,
            "factors": [f.descriptor() for f in series.factors],
        },
        "seed": seed,
        "primes": [int(p) for p in primes],
    }


def entry_from_json(d: dict):
    from .actors import derive_parameters

    params = derive_parameters(int(d["n"]))
    half = [int_in(c) for c in d["half"]]
    return params, half, int(d.get("seed", 0)), [int(p) for p in d.get("primes", [])]


@dataclass
class TableFile:
    entries: dict[int, dict] = field(default_factory=dict)
    seed: int = 42
    primes: str = "paper"
    wall_times: dict[int, float] = field(default_factory=dict)
    version: str = __version__

    def to_json(self) -> dict:
        return {
            "tool_version": self.version,
            "seed": self.seed,
            "prime_policy": self.primes,
            "wall_time": {str(n): round(t, 6) for n, t in sorted(self.wall_times.items())},
            "entries": {str(n): self.entries[n] for n in sorted(self.entries)},
        }

    def text(self) -> str:
        return "".join(text_line(n, [int_in(c) for c in self.entries[n]["half"]]) + "\n"
                       for n in sorted(self.entries))

    def halves(self) -> dict[int, list[int]]:
        return {n: [int_in(c) for c in e["half"]] for n, e in self.entries.items()}

    def write(self, path: str | os.PathLike) -> tuple[Path, Path]:
        path = Path(path)
        text_path = path.with_suffix(".txt") if path.suffix != ".txt" else path.with_suffix(".table.txt")
        path.write_text(json.dumps(self.to_json(), indent=1) + "\n")
        text_path.write_text(self.text())
        return path, text_path

    @classmethod
    def load(cls, path: str | os.PathLike) -> TableFile:
        raw = json.loads(Path(path).read_text())
        entries = {int(n): e for n, e in raw["entries"].items()}
        for n, e in entries.items():
            if int(e["n"]) != n or int_in(e["half"][0]) != 1:
                raise ValueError(f"malformed entry for n={n}")
        return cls(entries=entries, seed=int(raw.get("seed", 42)), primes=raw.get("prime_policy", "paper"),
                   wall_times={int(n): float(t) for n, t in raw.get("wall_time", {}).items()},
                   version=raw.get("tool_version", __version__))


class ResultCache:
    """One JSON file per (n, tool version, prime policy, seed)."""

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)

    @classmethod
    def from_env(cls, override: str | None = None) -> ResultCache | None:
        d = override or os.environ.get(CACHE_ENV)
        return cls(d) if d else None

    def path(self, n: int, seed: int, policy: str) -> Path:
        return self.dir / f"A{n}-v{__version__}-{policy}-seed{seed}.json"

    def get(self, n: int, seed: int, policy: str):
        p = self.path(n, seed, policy)
        if not p.exists():
            return None
        try:
            raw = json.loads(p.read_text())
            return raw["entry"], float(raw["wall_time"])
        except (OSError, ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", p, exc)
            return None

    def put(self, n: int, seed: int, policy: str, entry: dict, wall_time: float) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        p = self.path(n, seed, policy)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps({"entry": entry, "wall_time": wall_time}))
        tmp.replace(p)
