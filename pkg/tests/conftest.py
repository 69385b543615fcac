import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from unionint import _backend  # noqa: E402

KERNELS = sorted(_backend.available_backends())


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion; printed in the summary."""
    state = {}

    def record(label: str, ok: bool, detail: str = ""):
        state["line"] = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")

    yield record
    if "line" not in state:
        state["line"] = f"[FAIL] {request.node.name} -- did not finish"
    elif getattr(request.node, "rep_call_failed", False):
        state["line"] = state["line"].replace("[PASS]", "[FAIL]", 1)
    ACCEPTANCE_LINES.append(state["line"])
    print("\n" + state["line"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_failed = rep.failed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("C", 1)[1].split(" ", 1)[0])):
            terminalreporter.write_line(line)
