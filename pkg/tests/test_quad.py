import pytest

from clusterpolylog import corr as C
from clusterpolylog import quad as Q
from clusterpolylog.points import xs


def test_sequence_counts():
    # sequences have length n+k+1
    assert sorted(s for s, _ in Q.enum_sequences(0, 0)) == [(0,), (1,)]
    assert all(len(s) == 3 for s, _ in Q.enum_sequences(1, 1))
    assert len(Q.enum_sequences(1, 0, symmetrized=True)) >= len(Q.enum_sequences(1, 0))
    assert Q.enum_sequences(-1, 0) == []


def test_weight_below_depth_rejected():
    with pytest.raises(ValueError):
        Q.qli(1, xs(6))
    with pytest.raises(ValueError):
        Q.qli(2, xs(3))


def test_depth_zero_is_a_correlator():
    a, b = xs(2)
    assert Q.qli(1, [a, b]) == C.cor(a, b)


@pytest.mark.parametrize("w,n", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_symmetrized_expansion(w, n):
    P = xs(2 * n + 2)
    assert C.symbol(Q.qli_sym(w, P)) == C.symbol(Q.qli_sym_via_pairs(w, P))


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
def test_coproduct(n, k):
    assert Q.qli_coproduct_check(n, k)


@pytest.mark.parametrize("N", range(1, 9))
def test_psi_identity(N):
    assert Q.psi_identity_check(N, N + 4)


@pytest.mark.parametrize("n,N", [(2, 4), (2, 5), (3, 5)])
def test_main_equation(n, N):
    assert not C.symbol(Q.main_equation_lhs(n, N))


def test_main_equation_boundary():
    with pytest.raises(ValueError):
        Q.main_equation_lhs(3, 4)


@pytest.mark.parametrize("n,m", [(2, 4), (2, 5), (3, 5)])
def test_qli_dimension(n, m):
    assert Q.qli_dimension(n, m) == Q.qli_dimension_expected(n, m)


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_cluster_properties(n, k):
    assert Q.cluster_properties(n, k) == (True, True, True)


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (2, 0), (1, 2), (2, 1)])
def test_cyclic_shift_sign(n, k):
    assert Q.cyclic_symmetry_sign(n, k) == (-1) ** (n + k + 1)
    assert Q.cyclic_symmetry_sign(n, k, projected=True) == (-1) ** (n + k + 1)
