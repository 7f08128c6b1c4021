import helpers


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in helpers.ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
