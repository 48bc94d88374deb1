from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

# (criterion label, passed) pairs recorded by test_acceptance.py
acceptance_log: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_log:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, ok in acceptance_log:
        terminalreporter.write_line(f"{label}: {'PASS' if ok else 'FAIL'}")
