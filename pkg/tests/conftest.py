import acceptance_report


def pytest_terminal_summary(terminalreporter):
    if not acceptance_report.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_report.ordered():
        terminalreporter.write_line(line)
