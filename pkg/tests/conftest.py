import pytest

from esmine import parse_fimi

# Running example, items a..e mapped to 0..4.
A, B, C, D, E = range(5)
NAMES = "abcde"
TABLE1_TEXT = (
    "0 3 4\n"
    "1 2 3\n"
    "0 2 4\n"
    "0 2 3 4\n"
    "0 4\n"
    "0 2 3\n"
    "1 2\n"
    "0 2 3 4\n"
    "1 2 4\n"
    "0 3 4\n"
)


def letters(itemset):
    return "".join(NAMES[i] for i in sorted(itemset))


def items(word):
    return tuple(sorted(NAMES.index(ch) for ch in word))


@pytest.fixture
def table1():
    return parse_fimi(TABLE1_TEXT)


@pytest.fixture
def table1_file(tmp_path):
    path = tmp_path / "table1.dat"
    path.write_text(TABLE1_TEXT)
    return path


_acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, title, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
