import pytest

CRITERIA = {
    1: "golden tables and worked examples",
    2: "cross-oracle equivalence at q = 1",
    3: "cross-oracle equivalence, q-deformed",
    4: "specialization q -> 1",
    5: "classical identities",
    6: "factorization and chromatic identities",
    7: "forest / broken-circuit bijection",
    8: "randomized property suite",
}

_results: dict[int, dict[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    bucket = _results.setdefault(crit, {"passed": [], "failed": [], "xfailed": [], "instances": [0, 0]})
    inst = dict(report.user_properties).get("instances")
    if inst is not None and report.when == "call":
        bucket["instances"][0] += inst[0]
        bucket["instances"][1] += inst[1]
    name = report.nodeid.split("::")[-1]
    if hasattr(report, "wasxfail"):
        if report.when == "call" or report.skipped:
            bucket["xfailed"].append(name)
    elif report.failed:
        bucket["failed"].append(name)
    elif report.when == "call" and report.passed:
        bucket["passed"].append(name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit, title in CRITERIA.items():
        b = _results.get(crit)
        if b is None:
            tr.write_line(f"criterion {crit} ({title}): NOT RUN")
            continue
        ok = not b["failed"]
        total = len(b["passed"]) + len(b["failed"])
        line = f"criterion {crit} ({title}): {'PASS' if ok else 'FAIL'} [{len(b['passed'])}/{total} checks]"
        if b["instances"][1]:
            line += f" [{b['instances'][0]}/{b['instances'][1]} suite instances]"
        if b["xfailed"]:
            line += f"; {len(b['xfailed'])} printed value(s) known to disagree, see README errata"
        if b["failed"]:
            line += " failing: " + ", ".join(b["failed"])
        tr.write_line(line)
