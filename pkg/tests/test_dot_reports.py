import json

import pytest

from sasaki_lattice.checks import REGISTRY, run_check
from sasaki_lattice.config import RunConfig
from sasaki_lattice.constructors import boolean_algebra, mo
from sasaki_lattice.dot import export_dot, to_dot
from sasaki_lattice.errors import UnknownCheck
from sasaki_lattice.filters import enumerate_filters
from sasaki_lattice.reports import Report, RunReport


def test_dot_examples(tmp_path):
    d = to_dot(mo(2))
    assert d.count("[label=") == 6 and d.count("->") == 8
    assert to_dot(boolean_algebra(1)).count("[label=") == 2
    sf = to_dot(enumerate_filters(mo(2)))
    assert sf.count("[label=") == 10 and sf.count("fillcolor=gold") == 4
    p = tmp_path / "x.dot"
    assert export_dot(mo(2), p) == p.read_text()
    assert to_dot(mo(2)) == d
    with pytest.raises(TypeError):
        to_dot(42)


def test_report_serialization():
    r = Report("x", False, witness=(1, 2), details={"s": {3, 1}, "t": (1,)})
    d = r.to_dict()
    assert d == {"name": "x", "passed": False, "witness": [1, 2],
                 "details": {"s": [1, 3], "t": [1]}}
    assert not r
    rr = RunReport(["reproduce", "x"], {"seed": 1}, [r], {"x": 0.5})
    assert not rr.passed
    assert "timing" not in json.loads(rr.to_json(with_timing=False))


@pytest.mark.parametrize("check_id", sorted(set(REGISTRY) - {"atom-forcing"}))
def test_registry_checks_pass_and_are_reproducible(check_id):
    cfg = RunConfig()
    a, b = run_check(check_id, cfg), run_check(check_id, cfg)
    assert a.passed, a.witness
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("nope")
    with pytest.raises(KeyError):
        run_check("nope")
