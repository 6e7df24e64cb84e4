"""Small JSON-friendly result records shared by the checks and the CLI."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


def _plain(obj):
    """Recursively convert sets/tuples/frozensets into sorted lists."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((_plain(v) for v in obj), key=repr)
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


@dataclass
class Report:
    """Outcome of one check: ``passed`` plus the first witness of failure."""
    name: str
    passed: bool
    witness: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return _plain(asdict(self))


@dataclass
class RunReport:
    command: list
    config: dict
    results: list
    timing: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def to_dict(self, with_timing=True):
        out = {
            "command": list(self.command),
            "config": _plain(self.config),
            "results": [r.to_dict() for r in self.results],
            "passed": self.passed,
        }
        if with_timing:
            out["timing"] = _plain(self.timing)
        return out

    def to_json(self, with_timing=True):
        return json.dumps(self.to_dict(with_timing), sort_keys=True, indent=2)
