import json
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def corpus_files():
    files = sorted((ROOT / "corpus").glob("*.set"))
    assert files, "corpus directory is empty"
    return files


@pytest.fixture(scope="session")
def report_schema():
    return json.loads((ROOT / "schemas" / "run_report.schema.json").read_text())
