from pathlib import Path

import pytest

from solvcoh import linalg
from solvcoh.fixture import parse
from solvcoh.model import build_complex

FIXTURES = Path(__file__).parent / "fixtures"

GOOD = ["torus", "heisenberg", "kodaira_thurston", "semidirect", "iwasawa", "hyperelliptic", "inoue_heisenberg", "abelian3"]
BIGRADED = ["torus", "semidirect", "iwasawa", "hyperelliptic", "abelian3"]
SYMPLECTIC = ["torus", "kodaira_thurston", "semidirect", "hyperelliptic", "abelian3"]

_specs: dict = {}
_complexes: dict = {}
_acceptance: dict = {}


def load(name: str):
    if name not in _specs:
        _specs[name] = parse(FIXTURES / f"{name}.fixture")
    return _specs[name]


def complex_of(name: str):
    if name not in _complexes:
        _complexes[name] = build_complex(load(name))
    return _complexes[name]


@pytest.fixture(autouse=True)
def cross_check_eliminations(monkeypatch):
    # every rank in the suite is also computed fraction-free and compared
    monkeypatch.setattr(linalg, "CROSS_CHECK", True)
    yield


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when not in ("setup", "call"):
        return
    num, title = marker.args
    if rep.when == "setup" and rep.passed:
        return
    _acceptance[num] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        title, ok = _acceptance[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}")
