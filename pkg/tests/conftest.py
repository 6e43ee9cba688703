import sys

import pytest

from crystal_tableaux import Tableau, make_type_spec


def tab(family, n, *rows):
    return Tableau(make_type_spec(family, n), tuple(tuple(r) for r in rows))


# family, n pairs exercised by the parametrized tests; D3 is the algebra D4
SMALL_TYPES = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3), ("G", 2)]


@pytest.fixture(params=SMALL_TYPES, ids=lambda p: f"{p[0]}{p[1]}")
def spec(request):
    return make_type_spec(*request.param)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
