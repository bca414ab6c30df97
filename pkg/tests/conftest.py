import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, passed: bool, detail: str = ""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


S3_FACETS = "# boundary of the 4-simplex\n0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n"
S2_FACETS = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


@pytest.fixture
def s3_file(tmp_path):
    p = tmp_path / "s3.txt"
    p.write_text(S3_FACETS)
    return p


@pytest.fixture
def s2_file(tmp_path):
    p = tmp_path / "s2.txt"
    p.write_text(S2_FACETS)
    return p
