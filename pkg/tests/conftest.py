import pytest

from pi2.presentation import load_corpus, make_presentation


@pytest.fixture(scope="session")
def threelines():
    return load_corpus("threelines")


@pytest.fixture(scope="session")
def a3():
    return load_corpus("a3")


@pytest.fixture(scope="session")
def commutative3():
    return load_corpus("commutative3")


@pytest.fixture(scope="session")
def free2():
    return make_presentation(["a", "b"], [])


@pytest.fixture(scope="session")
def doubled():
    """Two copies of the three-lines relations on disjoint letters, made to commute."""
    rels = [("A", "123", "132"), ("B", "123", "312"), ("C", "123", "231"),
            ("D", "456", "465"), ("E", "456", "645"), ("F", "456", "564")]
    rels += [(f"K{i}{j}", i + j, j + i) for i in "123" for j in "456"]
    return make_presentation(list("123456"), rels)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
