from functools import lru_cache

import pytest

from heckesym.scalar import QS, QuadraticExtension
from heckesym.tlhecke import build_instance, example_instance


@lru_cache(maxsize=None)
def fleet(n, branch=-1, scalar_m=True):
    """Cached example instances; branch +1 for n = 2 lives over Q(s)(i)."""
    field = None
    if branch == 1 and n == 2:
        field = QuadraticExtension(QS, QS.parse("-1"))
    return example_instance(n, branch=branch, scalar_m=scalar_m, field=field)


@lru_cache(maxsize=None)
def n2_plain():
    """n = 2, v = (1, 1), u = (1/(1+q), q/(1+q)): z = (1, q), M not scalar."""
    q = QS.q
    return build_instance(2, [1 / (1 + q), q / (1 + q)], [1, 1], -1)


@pytest.fixture
def plain2():
    return n2_plain()


def pytest_terminal_summary(terminalreporter):
    import sys
    lines = []
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance"):
            lines = getattr(mod, "RESULTS", []) or lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
