from __future__ import annotations

import json
from pathlib import Path

import pytest

from milnorlink import data_path

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name, title): acceptance criterion a test belongs to")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    mark = getattr(report, "criterion", None)
    if mark is None:
        return
    name, title = mark
    entry = _criteria.setdefault(name, {"title": title, "passed": 0, "failed": []})
    if report.passed:
        entry["passed"] += 1
    else:
        entry["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        e = _criteria[name]
        status = "PASS" if not e["failed"] else "FAIL"
        line = f"{name} {status}  {e['title']}"
        if e["failed"]:
            line += f"  (failed: {', '.join(e['failed'])})"
        terminalreporter.write_line(line)


@pytest.fixture
def datafile():
    def get(name):
        return Path(str(data_path(name)))
    return get


@pytest.fixture
def load_json(datafile):
    def get(name):
        return json.loads(datafile(name).read_text())
    return get
