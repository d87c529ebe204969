"""Prints one PASS/FAIL line per acceptance criterion at the end of the run.

Acceptance tests are named test_ac<k>_...; a criterion passes when all of its
tests pass.  Measured quantities recorded with ``record_property`` are echoed
next to the verdict.
"""

import re

_CRITERIA = {}
_DETAILS = {}
_NAME = re.compile(r"test_ac(\d+)_")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid.split("::")[-1])
    if m is None:
        return
    k = int(m.group(1))
    # an expected failure is reported as skipped with wasxfail; it is still a FAIL
    failed = report.failed or hasattr(report, "wasxfail")
    if report.when == "call" or failed:
        _CRITERIA[k] = _CRITERIA.get(k, True) and not failed
    if report.when == "call":
        _DETAILS.setdefault(k, []).extend(f"{name}={value:.3g}" if isinstance(value, float) else f"{name}={value}"
                                          for name, value in report.user_properties)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        extra = ", ".join(_DETAILS.get(k, []))
        line = f"criterion {k}: {'PASS' if _CRITERIA[k] else 'FAIL'}"
        terminalreporter.write_line(f"{line}  ({extra})" if extra else line)
