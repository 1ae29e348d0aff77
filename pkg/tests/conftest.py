def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, (_, line, _) in sorted(test_acceptance.RESULTS.items()):
        terminalreporter.write_line(line)
