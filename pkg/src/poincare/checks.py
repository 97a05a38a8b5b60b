from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    soft: bool = False  # warning-level: reported, never fatal


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "", soft: bool = False) -> bool:
        self.checks.append(Check(name, bool(ok), detail, soft))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks if not c.soft)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok and not c.soft]

    @property
    def warnings(self) -> list[Check]:
        return [c for c in self.checks if not c.ok and c.soft]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "PASS" if c.ok else ("WARN" if c.soft else "FAIL")
            out.append(f"{tag} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return out

    def __str__(self) -> str:
        return f"{self.subject}\n" + "\n".join("  " + x for x in self.lines())
