import pytest

from ruukin.model import Design


@pytest.fixture(scope="session")
def pars():
    return Design.builtin("pars")


@pytest.fixture(scope="session")
def pars2():
    return Design.builtin("pars2")


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("ruukin-cache")


@pytest.fixture(scope="session")
def output_factorization():
    from ruukin.singularity import output_det_translational

    return output_det_translational(None)


@pytest.fixture(scope="session")
def eliminant(pars, cache_dir):
    from ruukin.singularity import output_eliminant

    return output_eliminant(pars, "s1", cache_dir=cache_dir)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def report(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
