"""Shared test plumbing: collects acceptance-criterion verdicts and prints
one line per criterion in the terminal summary."""

acceptance_results: list[tuple[int, str, str]] = []


def record_criterion(number: int, description: str, passed: bool) -> None:
    acceptance_results.append((number, description, "PASS" if passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, verdict in sorted(acceptance_results):
        terminalreporter.write_line(f"{verdict}  criterion {number}: {description}")
