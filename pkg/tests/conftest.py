import pytest

import wsadist as w

ALPHABET = "aA9(),$ "


@pytest.fixture(scope="session")
def unit():
    return w.unit_model()


@pytest.fixture(scope="session")
def appendix():
    return w.appendix_model()


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # first call JIT-compiles the DP kernel; keep that cost out of
    # individual tests (hypothesis deadlines, perf assertions)
    m = w.unit_model()
    w.levenshtein_standard("warm", "up", m)
    w.levenshtein_ws_agnostic("warm", "up", m)
