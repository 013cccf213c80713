import pytest

from acmbundles.lie import FlagSpace, LieType

_RESULTS = pytest.StashKey[list]()


def all_spaces(max_rank, min_rank=2):
    """Every supported (type, n, k) with n <= max_rank; D's k=n-1 is left out."""
    out = []
    for lt in LieType:
        lo = max(min_rank, 4 if lt is LieType.D else 2)
        for n in range(lo, max_rank + 1):
            for k in range(1, n + 1):
                if lt is LieType.D and k == n - 1:
                    continue
                out.append(FlagSpace(lt, n, k))
    return out


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: criterion(label, passed, detail)."""
    def record(label, passed, detail=""):
        request.config.stash[_RESULTS].append((label, passed, detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(_RESULTS, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in rows:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
