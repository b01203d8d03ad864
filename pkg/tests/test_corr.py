import random
from itertools import permutations, product

import pytest

from clusterpolylog import corr as C
from clusterpolylog import words as W
from clusterpolylog.points import INF, ONE, ZERO, param, xs

X = xs(6)


def test_cyclic_invariance_and_constants():
    a, b, c = X[:3]
    assert C.cor(a, b, c) == C.cor(b, c, a) == C.cor(c, a, b)
    assert not C.cor(a, a, a)
    assert C.canon((a,)) is None
    with pytest.raises(ValueError):
        C.cor(a)


def test_cojacobi_exhaustive_small():
    for w in (2, 3):
        for t in product(X[:w + 1], repeat=w + 1):
            t = C.canon(t)
            if t is not None:
                assert not C.cojacobi_term(t)


def test_symbol_routes_agree():
    for pts in [X[:3], X[:4], (X[0], X[1], X[0], X[2]), X[:5]]:
        t = C.canon(pts)
        s = C.symbol_term(t)
        assert s == W.nf(C.symbol_by_solve(t))
        assert s == C.cor_symbol_via_ii(pts)


def test_symbol_compatible_with_cobracket():
    rng = random.Random(7)
    for w in (2, 3, 4):
        for _ in range(5):
            assert C.check_symbol_compatible(C.cor(*(rng.choice(X[:5]) for _ in range(w + 1))))


@pytest.mark.parametrize("w", [2, 3, 4])
def test_specialization_commutes(w):
    rng = random.Random(w)
    for _ in range(15):
        c = C.random_deformed_correlator(rng, w)
        assert C.specialization_commutes(c, "0")
        assert C.specialization_commutes(c, "inf")


@pytest.mark.parametrize("m,n", [(0, 2), (0, 3), (1, 3), (1, 4)])
def test_correlator_relation(m, n):
    assert not C.symbol(C.correlator_relation(m, n))


def test_five_term_sign_action():
    base = C.symbol(C.li2_cross_ratio(*X[1:5]))
    from clusterpolylog.gangl import perm_sign
    for p in permutations(range(4)):
        assert C.symbol(C.li2_cross_ratio(*[X[1 + i] for i in p])) == base * perm_sign(p)


def test_cor_is_minus_li2():
    assert C.symbol(C.cor(*X[:3])) == -C.symbol(C.li2_cross_ratio(INF, *X[:3]))


def test_li11_is_minus_li2():
    a = param("a")
    assert C.symbol(C.multiple_li(1, [1], [a])) == -C.symbol(C.li(2, a))


@pytest.mark.parametrize("k", [2, 3])
def test_delta_bar_on_li_k_ones(k):
    a = [param("a%d" % i) for i in range(k)]
    lhs = C.delta_bar_iterated(C.multiple_li(k, [1] * k, a), k)
    rhs = C.b2_tensor(*[C.li(2, ai) for ai in a])
    assert lhs == -rhs


def test_delta_bar_weight_guard():
    with pytest.raises(ValueError):
        C.delta_bar_iterated(C.cor(*X[:4]), 2)


def test_term_parse_round_trip():
    t = C.canon((X[0], ZERO, ONE, X[2]))
    assert C.parse_term(C.term_str(t)) == t
