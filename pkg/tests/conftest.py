import pytest

from smalloverlap.presentation import parse_presentation

P1_TEXT = "generators: a b c d\nrelation: a b = c d\n"
P2_TEXT = "generators: a b e f\nrelation: a e b = a f b\n"
P4_TEXT = "generators: a b e f\nrelation: a b e = f a b\n"
# C(3) but not C(4): dcd = d.c.d is a product of three pieces
C3_TEXT = "generators: a b c d\nrelation: a b c = d c d\n"
FREE_TEXT = "generators: a b\n"


@pytest.fixture(scope="session")
def p1():
    return parse_presentation(P1_TEXT)


@pytest.fixture(scope="session")
def p2():
    return parse_presentation(P2_TEXT)


@pytest.fixture(scope="session")
def p4():
    return parse_presentation(P4_TEXT)


@pytest.fixture(scope="session")
def p_c3():
    return parse_presentation(C3_TEXT)


@pytest.fixture(scope="session")
def free():
    return parse_presentation(FREE_TEXT)
