import pytest

from clusterpolylog import cluster as CL
from clusterpolylog import corr as C
from clusterpolylog import quad as Q


def test_chord_geometry():
    assert CL.crossing((0, 2), (1, 3))
    assert not CL.crossing((0, 2), (2, 4))
    assert CL.weakly_separated((0, 2), (2, 4))
    assert not CL.weakly_separated((0, 2), (1, 3))
    assert len(CL.chords(6)) == 15


def test_cl2_rank_matches_cl_dimension():
    # integrable pairs at weight two: exchange relations
    assert CL.cl2_space(5).rank == CL.cl_dimension_expected(2, 5)


@pytest.mark.parametrize("n,P", [(2, 5), (2, 6), (3, 6)])
def test_cl_dimension(n, P):
    assert CL.cl_space(n, P).rank == CL.cl_dimension_expected(n, P)


def test_cl_contains_qli_symbols():
    s = CL.cl_space(2, 6)
    q = Q.qli_span(2, 5)
    for r in q.rows():
        assert s.contains(CL.to_plucker(r.d))


def test_guard_raises():
    with pytest.raises(CL.TooLarge):
        CL.cl_space(4, 8, guard=1000)


def test_nonadjacent_rejected():
    assert not CL.adjacent({((0, 2), (1, 3)): 1})
    assert CL.adjacent({((0, 2), (0, 3)): 1})


def test_torus_invariance_detects_weight():
    assert not CL.torus_invariant({((0, 1),): 1}, 4)


def test_dynkin_rep_is_a_representative():
    from clusterpolylog import words as W
    from clusterpolylog.points import xs
    s = C.symbol(C.cor(*xs(4)))
    assert W.nf(CL.dynkin_rep(s)) == s.d
