import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from svnfilter import SVNSet, Universe  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
WORKSPACES = ROOT / "workspaces"

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

U2 = Universe(["a", "b"])
U3 = Universe(["a", "b", "c"])


def to_svn(universe, rows):
    return SVNSet(universe, rows)


def to_dict(a):
    return a.as_dict()


grades = st.one_of(
    st.sampled_from([Fraction(0), Fraction(1)]),
    st.fractions(min_value=0, max_value=1, max_denominator=12),
)
triples = st.tuples(grades, grades, grades)


def svn_sets(universe=U2):
    return st.lists(triples, min_size=len(universe), max_size=len(universe)).map(
        lambda rows: SVNSet(universe, rows))


def families(universe=U2, min_size=1, max_size=4):
    return st.lists(svn_sets(universe), min_size=min_size, max_size=max_size)


@pytest.fixture
def workspaces_dir():
    return WORKSPACES


class TimedReport:
    """The default-budget report plus wall time per claim."""

    def __init__(self, report, seconds):
        self.report = report
        self.seconds = seconds

    def __getattr__(self, name):
        return getattr(self.report, name)


@pytest.fixture(scope="session")
def default_report():
    """The full registry checked once at the default budget (shared by several modules)."""
    from svnfilter.verifier import Report, SearchConfig, all_claims, run_suite

    cfg = SearchConfig()
    verdicts, seconds = [], {}
    for claim in all_claims():
        start = time.perf_counter()
        verdicts.extend(run_suite(cfg, [claim.tag]).verdicts)
        seconds[claim.tag] = time.perf_counter() - start
    return TimedReport(Report(cfg, tuple(verdicts)), seconds)


# ---------------------------------------------------------------- acceptance summary

CRITERIA = {
    1: "table reproduction",
    2: "lattice-law suite",
    3: "filter-construction suite",
    4: "intensional/extensional agreement",
    5: "ultrafilter machinery",
    6: "claims-under-test regression",
    7: "CLI contract",
}
SUITE_LIMIT = 600.0
_outcomes: dict[int, list[tuple[str, bool]]] = {}
_started = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    elapsed = time.perf_counter() - _started
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n} ({title}): not run")
            continue
        failed = [name for name, ok in results if not ok]
        notes = []
        if n == 6:
            notes.append(f"suite wall time {elapsed:.0f}s, limit {SUITE_LIMIT:.0f}s")
            if elapsed > SUITE_LIMIT:
                failed.append("suite runtime")
        verdict = "FAIL" if failed else "PASS"
        detail = f"{len(results) - len(failed)}/{len(results)} checks passed"
        if failed:
            detail += "; failed: " + ", ".join(failed)
        if notes:
            detail += "; " + "; ".join(notes)
        tr.write_line(f"criterion {n} ({title}): {verdict} ({detail})")
