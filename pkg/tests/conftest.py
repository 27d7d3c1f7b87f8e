import pytest

from fpmine import _backend
from fpmine.model import TransactionDatabase

EXAMPLE_ROWS = [["A", "C", "D"], ["B", "C", "E"], ["A", "B", "C", "E"], ["B", "E"]]
EXAMPLE_TEXT = "A,C,D\nB,C,E\nA,B,C,E\nB,E\n"


@pytest.fixture
def example_db():
    return TransactionDatabase.from_rows(EXAMPLE_ROWS)


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE_TEXT)
    return path


@pytest.fixture(params=[m.NAME for m in _backend.available()])
def backend(request, monkeypatch):
    """Run the test once per importable kernel implementation."""
    module = next(m for m in _backend.available() if m.NAME == request.param)
    monkeypatch.setattr(_backend, "kernels", module)
    return module
