import pytest

from dagcat import cob2

EULER_LOG = {"compositions": 0, "violations": []}

_compose = cob2.compose


def _checked_compose(mp, m):
    out = _compose(mp, m)
    EULER_LOG["compositions"] += 1
    if out.euler != mp.euler + m.euler:
        EULER_LOG["violations"].append((repr(mp), repr(m), repr(out)))
    return out


@pytest.fixture(autouse=True, scope="session")
def euler_additivity_everywhere():
    """Every gluing in the suite goes through an additivity check."""
    cob2.compose = _checked_compose
    yield EULER_LOG
    cob2.compose = _compose
    assert not EULER_LOG["violations"], EULER_LOG["violations"][:3]


# criterion number -> (status, detail); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    if 8 in ACCEPTANCE:
        # additivity covers every gluing of the whole run, so settle it last
        status, detail = ACCEPTANCE[8]
        ok = not EULER_LOG["violations"] and EULER_LOG["compositions"] > 0
        ACCEPTANCE[8] = (status if ok else "FAIL",
                         f"{detail}; chi additive on all {EULER_LOG['compositions']} gluings"
                         if ok else f"{detail}; {len(EULER_LOG['violations'])} chi violations")
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number}: {detail}")
