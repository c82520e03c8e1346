"""Collects per-criterion verdicts from the acceptance suite and prints them at the end."""

VERDICTS: dict[int, bool] = {}


def record(criterion: int, ok: bool) -> None:
    VERDICTS[criterion] = VERDICTS.get(criterion, True) and ok
    print(f"{'PASS' if ok else 'FAIL'} criterion {criterion}")


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(VERDICTS):
        terminalreporter.write_line(f"{'PASS' if VERDICTS[c] else 'FAIL'} criterion {c}")
