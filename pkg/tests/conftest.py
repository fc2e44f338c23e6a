import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ncpart.category import ClosureConfig, closure_generate, load_category_file  # noqa: E402

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GENS = os.path.join(ROOT, "gens")

_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = ""
        if rep.failed:
            detail = str(rep.longrepr).strip().splitlines()[-1][:200]
        if _ACCEPTANCE.get(n, ("PASS",))[0] == "FAIL":
            return
        _ACCEPTANCE[n] = ("PASS" if rep.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        verdict, title, detail = _ACCEPTANCE[n]
        line = f"{verdict} criterion {n}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def gens_path(name: str) -> str:
    return os.path.join(GENS, f"{name}.gens")


_CACHE: dict = {}


def closure_of(name: str, budget: int):
    """Closure of a generator file from ``gens/``, shared across tests (read-only use)."""
    key = (name, budget)
    if key not in _CACHE:
        cs, gens = load_category_file(gens_path(name))
        _CACHE[key] = closure_generate(gens, ClosureConfig(point_budget=budget), cs)
    return _CACHE[key]
