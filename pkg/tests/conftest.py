import pytest

from sylvsums.arith import UniPoly


@pytest.fixture
def x():
    return UniPoly.x()
