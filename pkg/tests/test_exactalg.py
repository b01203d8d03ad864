from hypothesis import given, settings, strategies as st

from clusterpolylog.exactalg import LinSpace, Rat, nullspace, rank, rat, rat_str, solve, intersect, span_sum

vec = st.dictionaries(st.sampled_from("abcdef"), st.integers(-4, 4).filter(bool), max_size=4)


def test_rat_round_trip():
    for s in ["0", "3", "-7/4", "1/3"]:
        assert rat_str(rat(s)) == s


def test_dependent_row_rejected():
    s = LinSpace()
    assert s.add({"a": 1, "b": 2})
    assert not s.add({"a": 2, "b": 4})
    assert s.rank == 1
    assert s.contains({"a": -3, "b": -6})
    assert not s.contains({"a": 1})


def test_nullspace_and_solve():
    (k,) = nullspace([{"a": 1, "b": -1}], ["a", "b"])
    assert k["a"] == k["b"] == 1
    sol = solve([{"x": 1, "y": 1}, {"y": 1}], {0: 2, 1: 3}, ["x", "y"])
    assert sol == {"x": Rat(-1), "y": Rat(3)}
    assert solve([{"x": 1}, {"x": 2}], {0: 1, 1: 1}, ["x"]) is None


def test_sum_and_intersection():
    a = LinSpace([{"a": 1}, {"b": 1}])
    b = LinSpace([{"b": 1, "c": 1}, {"c": 1, "d": 1}])
    assert span_sum(a, b).rank == 4
    i = intersect(LinSpace([{"a": 1}, {"b": 1, "c": 1}]), LinSpace([{"b": 1, "c": 1}, {"d": 1}]))
    assert i.rank == 1 and i.contains({"b": 2, "c": 2})


@settings(max_examples=60, deadline=None)
@given(st.lists(vec, max_size=7))
def test_reduced_form_invariants(rows):
    s = LinSpace()
    for r in rows:
        s.add(r)
    assert s.rank == rank(rows)
    piv = [min(r.d) for r in s.rows()] if s.rank else []
    for r in s.rows():
        for p in piv:
            if p != min(r.d):
                assert p not in r.d
    for r in rows:
        assert s.contains(r)


@settings(max_examples=40, deadline=None)
@given(st.lists(vec, min_size=1, max_size=5), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_membership_of_combinations(rows, cs):
    s = LinSpace(rows)
    comb = {}
    for r, c in zip(rows, cs):
        for k, v in r.items():
            comb[k] = comb.get(k, 0) + c * v
    assert s.contains({k: v for k, v in comb.items() if v})
