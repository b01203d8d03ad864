from math import comb

from hypothesis import given, settings, strategies as st

from clusterpolylog import words as W
from clusterpolylog.exactalg import Rat, add_into

word = st.lists(st.sampled_from("abc"), min_size=1, max_size=4).map(tuple)


def necklace(k, n):
    from sympy import divisors, mobius
    return sum(mobius(d) * k ** (n // d) for d in divisors(n)) // n


@given(word, word)
def test_shuffle_count(u, v):
    assert sum(W.shuffle(u, v).values()) == comb(len(u) + len(v), len(u))
    assert W.shuffle(u, v) == W.shuffle_rec(u, v)


@given(word, word)
def test_shuffles_vanish_in_colie(u, v):
    assert W.nf(W.shuffle(u, v)) == {}


@given(st.lists(st.sampled_from("abcd"), min_size=2, max_size=5).map(tuple))
def test_deconcatenation_coassociative(w):
    left, right = {}, {}
    for (a, b), c in W.deconcatenate({w: 1}).items():
        for (a1, a2), d in W.deconcatenate({a: 1}).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * d
        for (b1, b2), d in W.deconcatenate({b: 1}).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * d
    assert left == right


def test_lyndon_counts():
    for k in (2, 3):
        for n in range(1, 6):
            ws = W.lyndon_words("abc"[:k], n)
            assert len(ws) == necklace(k, n)
            assert all(W.is_lyndon(w) for w in ws)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.lists(st.sampled_from("abcd"), min_size=2, max_size=5).map(tuple),
                       st.integers(-3, 3).filter(bool), max_size=5))
def test_normal_form_idempotent_and_lyndon(t):
    n = W.nf(t)
    assert W.nf(n) == n
    assert all(W.is_lyndon(w) for w in n)


def test_theta_scales_by_weight():
    for w in [("a", "b"), ("a", "b", "c"), ("b", "a", "c", "a")]:
        lhs = W.nf(W.theta({w: 1}))
        rhs = {k: len(w) * c for k, c in W.nf({w: 1}).items()}
        assert lhs == rhs


def test_from_last_letter_inverts():
    x = W.nf({("a", "b", "c"): 2, ("a", "c", "c"): -1, ("b", "b", "c"): 1})
    assert W.from_last_letter(W.last_letter_part(x), 3) == x


def test_cobracket_injective_low_weight():
    for n in range(2, 6):
        assert W.cobracket_injective("abc", n)


def test_cojacobi_on_colie():
    def delta(y):
        return W.colie_cobracket({y: Rat(1)}).d if len(y) > 1 else {}
    for w in W.lyndon_words("abc", 4):
        assert W.cojacobi(delta, tuple(w)) == {}
