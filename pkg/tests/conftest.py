"""Collects the one-line acceptance verdicts and prints them after the run."""

VERDICTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> bool:
    line = "%s criterion %d: %s" % ("PASS" if ok else "FAIL", number, detail)
    VERDICTS.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
