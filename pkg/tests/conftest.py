import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "scripts"))

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# one line per acceptance criterion, printed at the end of the run
CRITERIA: dict[str, str] = {}


@pytest.fixture(scope="session")
def streams():
    """Isomorphism-free graph6 files graphs1.g6 .. graphs9.g6 under data/."""
    from gen_noniso import ensure_streams

    return ensure_streams(9, ROOT / "data")


@pytest.fixture
def criterion():
    def record(key: str, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}"
        CRITERIA[key] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for key in sorted(CRITERIA, key=int):
            terminalreporter.write_line(CRITERIA[key])
