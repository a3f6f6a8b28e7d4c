import pytest
from hypothesis import settings

from fuskit.catalog import alt, make_named_group, psl2, sym
from fuskit.fusion import fusion_from_group
from fuskit.permgroup import Subgroup, parse_cycles

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def perm(text, degree):
    return parse_cycles(text, degree)


def sub(G, *cycles):
    return Subgroup(G, [parse_cycles(c, G.degree) for c in cycles])


@pytest.fixture(scope="session")
def S4():
    return sym(4)


@pytest.fixture(scope="session")
def A4():
    return alt(4)


@pytest.fixture(scope="session")
def F_S4():
    """F_{D8}(S4)."""
    return fusion_from_group(sym(4), 2)


@pytest.fixture(scope="session")
def F_A4_2():
    return fusion_from_group(alt(4), 2)


@pytest.fixture(scope="session")
def F_A4_3():
    return fusion_from_group(alt(4), 3)


@pytest.fixture(scope="session")
def L217():
    return psl2(17)


@pytest.fixture(scope="session")
def F_L217(L217):
    return fusion_from_group(L217, 2)


@pytest.fixture(scope="session")
def corpus_groups():
    from fuskit.catalog import CORPUS
    return [make_named_group(name) for name in CORPUS]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
