import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flagtrans.catalog import load  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return load()


@pytest.fixture(scope="session")
def catalog_json():
    import json
    from flagtrans.catalog import default_catalog_path
    return json.loads(default_catalog_path().read_text())


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
