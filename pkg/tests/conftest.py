import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

_ACCEPTANCE: list[tuple[int, str, str]] = []


@pytest.fixture
def criterion(request):
    """Record a ``PASS``/``FAIL``/``SKIP`` result for an acceptance criterion (``ok=None`` is a skip)."""
    def record(number, title, ok, detail=""):
        status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
        line = f"{status}  {title}"
        if detail:
            line += f"  [{detail}]"
        _ACCEPTANCE.append((number, status, line))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    """One verdict line per criterion, then its individual checks."""
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted({n for n, _, _ in _ACCEPTANCE}):
        rows = [(st, line) for n, st, line in _ACCEPTANCE if n == number]
        verdict = "FAIL" if any(st == "FAIL" for st, _ in rows) else "PASS"
        skipped = sum(st == "SKIP" for st, _ in rows)
        note = f", {skipped} stretch skipped" if skipped else ""
        terminalreporter.write_line(f"criterion {number}: {verdict}  ({len(rows)} checks{note})")
        for _, line in rows:
            terminalreporter.write_line(f"    {line}")
