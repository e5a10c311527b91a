# Keeps the tests directory on sys.path so test modules can import corpus,
# and echoes the acceptance verdict lines after the run, outside capture.

import corpus


def pytest_terminal_summary(terminalreporter):
    if corpus.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in corpus.ACCEPTANCE_LINES:
            terminalreporter.line(line)
