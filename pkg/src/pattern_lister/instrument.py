"""Structural counters gathered during an instrumented run."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class Tally:
    k: int = 0
    nodes: dict = field(default_factory=lambda: defaultdict(lambda: defaultdict(int)))
    checks: dict = field(default_factory=lambda: defaultdict(lambda: [0, 0]))
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=lambda: defaultdict(list))

    def node(self, source, kind: str) -> None:
        self.nodes[source][kind] += 1

    def check(self, name: str, ok: bool, detail=None) -> None:
        self.checks[name][0 if ok else 1] += 1
        if not ok and len(self.failures) < 20:
            self.failures.append((name, detail))

    def record(self, name: str, value) -> None:
        self.stats[name].append(value)

    def finish_source(self, source, leaves: int) -> None:
        c = self.nodes[source]
        c["leaves"] = leaves
        self.check("binary_is_leaves_minus_one", c["binary"] == leaves - 1,
                   (source, c["binary"], leaves))
        self.check("internal_at_most_leaves_times_k", c["internal"] <= leaves * self.k,
                   (source, c["internal"], leaves))

    @property
    def ok(self) -> bool:
        return all(v[1] == 0 for v in self.checks.values())

    def summary(self) -> dict:
        return {
            "checks": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(self.checks.items())},
            "failures": [list(map(str, f)) for f in self.failures],
        }
