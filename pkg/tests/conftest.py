from __future__ import annotations

import sys

import pytest
from hypothesis import settings

from scrollbei.polynomial import PolyRing

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def r3():
    """Q[x1..x4], the scroll ring for n = 3."""
    return PolyRing.scroll(3)


def mono(ring, **exps):
    """mono(ring, x2=2, x3=1) -> exponent tuple."""
    e = [0] * ring.num_vars
    for name, v in exps.items():
        e[ring.index(name)] = v
    return tuple(e)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
