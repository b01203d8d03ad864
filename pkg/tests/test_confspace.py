import pytest

from clusterpolylog import confspace as CS
from clusterpolylog import words as W


@pytest.mark.parametrize("n,p", [(1, 3), (2, 3), (2, 4), (3, 4)])
def test_conf_dimension(n, p):
    assert CS.conf_space(n, p).rank == CS.conf_dimension_expected(n, p)


def test_arnold_relation_rank():
    # one three-term relation per triple of points
    assert CS.arnold_space(4).rank == 4
    assert CS.arnold_space(5).rank == 10


def test_iterated_integral_symbols_integrable():
    for seq in [(0, 1, 2, 3), (0, 1, 1, 2, 3), (0, 2, 1, 3, 1)]:
        assert CS.integrable_conf(W.theta(CS.ii_symbol(seq)))


def test_nonintegrable_detected():
    assert not CS.integrable_conf({((0, 1), (2, 3)): 1})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_inv_dimension(n, m):
    assert CS.inv_space(n, m).rank == CS.inv_dimension_expected(n, m)


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (3, 3)])
def test_a_elem_translation(n, m):
    assert CS.a_elem_translation_identity(n, m)


@pytest.mark.parametrize("n,p,i", [(2, 4, 0), (2, 4, 3), (3, 4, 1)])
def test_exactness_shadow(n, p, i):
    assert CS.exactness_shadow(n, p, i)
