import pytest

from clusterpolylog import gangl as G
from clusterpolylog.exactalg import Rat


def test_pf_letter_sign_and_degeneracy():
    assert G.pf_letter(0, 1, 2, 3) == {((0, 1, 2, 3),): Rat(1)}
    assert G.pf_letter(1, 0, 2, 3) == {((0, 1, 2, 3),): Rat(-1)}
    assert G.pf_letter(0, 0, 2, 3) == {}


def test_perm_parsing_and_composition():
    p = G.parse_perm("(01)(23)")
    assert G.compose(p, p).get(0, 0) == 0
    assert G.parse_perm("(0,4)") == G.parse_perm("(04)")
    assert G.parse_perm(G.perm_str(G.parse_perm("(123)"))) == G.parse_perm("(123)")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_s_expansion(k):
    assert G.s_expansion_identity(k)


def test_expr_parses_products():
    v = G.expr("[0,1,2,3]*[0,1,2,4]-[0,1,2,4]*[0,1,2,3]")
    assert v == G.expr("2*[0,1,2,3]*[0,1,2,4]")


def test_bracket_relabelling():
    b = G.bracket(range(7))
    g = dict(zip(range(7), (1, 0, 2, 3, 4, 5, 6)))
    assert G.relabel_tensor(b, g) == G.bracket((1, 0, 2, 3, 4, 5, 6))


def test_ledger_membership_and_replay():
    L = G.ZeroLedger()
    z = G.expr("[0,1,2,3]*[0,1,2,4]")
    e = L.add("Z", [z], "assumed zero")
    claim = G.expr("3*[0,1,2,3]*[0,1,2,4]")
    a = G.check_equiv(claim, L, [(e, None)], "scaled")
    assert a.verdict and G.replay(a, L, claim)
    b = G.check_equiv(G.expr("[0,1,2,3]*[0,1,2,5]"), L, [(e, None)], "other")
    assert not b.verdict


def test_ledger_rejects_relabelled_use_without_relabelling():
    L = G.ZeroLedger()
    e = L.add("Z", [G.expr("[0,1,2,3]*[0,1,2,4]")], "assumed zero")
    claim = G.expr("[0,1,2,3]*[0,1,2,5]")
    assert not G.check_equiv(claim, L, [(e, None)], "plain").verdict
    assert G.check_equiv(claim, L, [(e, {4: 5})], "relabelled").verdict


def test_generated_group_order():
    assert len(G.generated_group(["(01)", "(12)"], range(3))) == 6


def test_kummer():
    assert G.kummer_check()


def test_suite4():
    r = G.gangl_suite4()
    assert r.passed, r.failures()
    ids = [a.step_id for a in r.audits]
    assert "parity" in ids and "kummer-li3" in ids


@pytest.mark.parametrize("n", [5, 7, 9])
def test_product_expansion_matches_recursion(n):
    from clusterpolylog.exactalg import add_into
    from clusterpolylog import words as W
    tot = {}
    for c, f in G.s_products(range(n)):
        add_into(tot, G.eval_product(f), c)
    assert W.nf(tot) == G.build_s(range(n))


def test_qsq_reorderings():
    f = [("S", (0, 1, 2, 3, 4)), ("Q", (0, 1, 2, 5)), ("Q", (0, 1, 5, 6))]
    assert G.qsq_reorderings(f) == [((0, 1, 2, 5), (0, 1, 2, 3, 4), (0, 1, 5, 6)),
                                    ((0, 1, 5, 6), (0, 1, 2, 3, 4), (0, 1, 2, 5))]
    assert G.qsq_reorderings([("Q", (0, 1, 2, 3))]) == []
