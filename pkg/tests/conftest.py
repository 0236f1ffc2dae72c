from __future__ import annotations

import sys

import pytest

from liftmrd import kernels


@pytest.fixture(params=sorted(kernels.AVAILABLE))
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    mod = kernels.get(request.param)
    monkeypatch.setattr(kernels, "backend", mod)
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    terminalreporter.write_line(f"kernel backend: {kernels.BACKEND_NAME}")
    for key in sorted(results):
        terminalreporter.write_line(results[key])
