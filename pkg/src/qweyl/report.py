"""Pass/fail reports shared by the identity checks and the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Instance:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    name: str
    instances: list[Instance] = field(default_factory=list)
    note: str = ""

    def record(self, label: str, passed: bool, detail: str = "") -> bool:
        self.instances.append(Instance(label, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    @property
    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.passed]

    def merge(self, other: "CheckReport") -> None:
        self.instances.extend(other.instances)

    def lines(self) -> list[str]:
        out = []
        for inst in self.instances:
            status = "PASS" if inst.passed else "FAIL"
            tail = f"  ({inst.detail})" if inst.detail else ""
            out.append(f"{status} {self.name} {inst.label}{tail}")
        return out

    def summary(self) -> str:
        n = len(self.instances)
        bad = len(self.failures)
        status = "PASS" if bad == 0 else "FAIL"
        return f"{status} {self.name}: {n - bad}/{n} instances"
