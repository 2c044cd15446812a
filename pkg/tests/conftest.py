import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from qhawkdove import make_payoff_matrix  # noqa: E402

_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def fig2():
    return make_payoff_matrix(50, 100, 10)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def record_criterion():
    """Record one sub-check of an acceptance criterion for the terminal summary."""
    def record(number: int, name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.setdefault(number, []).append((name, bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        checks = _ACCEPTANCE[number]
        status = "PASS" if all(ok for _, ok, _ in checks) else "FAIL"
        failed = [f"{name} ({detail})" for name, ok, detail in checks if not ok]
        line = f"criterion {number}: {status}"
        if failed:
            line += " -- failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
