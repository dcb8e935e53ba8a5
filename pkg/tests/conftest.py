import pytest

from detfold.algebra import QQ, VARS_X, MultiPoly, parse_poly


@pytest.fixture
def P():
    def parse(text, field=QQ):
        return parse_poly(text, VARS_X, field)

    return parse


@pytest.fixture
def zero_poly():
    return MultiPoly.zero(QQ, VARS_X)
