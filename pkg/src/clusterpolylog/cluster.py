"""Type A cluster combinatorics on a polygon and cluster integrable symbols.

Cluster variables of Gr(2, P) are the Plücker coordinates Δ_ij, i.e. chords
(i, j) of a P-gon; two of them lie in a common cluster iff the chords do not
cross.  Tensors over the chord alphabet are dicts word -> Rat where each
letter is a chord (i, j) with i < j.
"""
from __future__ import annotations

import re
from itertools import combinations

from .exactalg import Rat, ZERO, LinSpace, SparseVec, add_into, add_term, nullspace
from . import words as W


class TooLarge(RuntimeError):
    """A resource guard was exceeded."""


def _sv(d):
    v = SparseVec()
    v.d = d
    return v


def _d(v):
    return v.d if isinstance(v, SparseVec) else v


def chords(P: int):
    return list(combinations(range(P), 2))


def crossing(c1, c2) -> bool:
    (i, j), (k, l) = c1, c2
    return (i < k < j < l) or (k < i < l < j)


def weakly_separated(c1, c2) -> bool:
    return not crossing(c1, c2)


def adjacent_letters(letters) -> bool:
    ls = list(set(letters))
    return all(weakly_separated(a, b) for a, b in combinations(ls, 2))


def adjacent(t) -> bool:
    """Every word of t uses pairwise weakly separated chords."""
    if isinstance(t, (tuple, list)):
        return adjacent_letters(t)
    return all(adjacent_letters(w) for w in _d(t))


def is_side(c, P) -> bool:
    i, j = c
    return j - i == 1 or (i == 0 and j == P - 1)


# ---------------------------------------------------------------------------
# exchange relations

def exchange_pair(i, j, k, l):
    """(M1/aa', M2/aa') for Δ_ik Δ_jl = Δ_ij Δ_kl + Δ_il Δ_jk, in log coordinates."""
    m1 = {(i, j): Rat(1), (k, l): Rat(1), (i, k): Rat(-1), (j, l): Rat(-1)}
    m2 = {(i, l): Rat(1), (j, k): Rat(1), (i, k): Rat(-1), (j, l): Rat(-1)}
    return m1, m2


def cl2_generators(P: int):
    return [W.wedge(*exchange_pair(*q)) for q in combinations(range(P), 4)]


_CL2 = {}


def cl2_space(P: int) -> LinSpace:
    if P < 4:
        raise ValueError("need at least 4 points")
    s = _CL2.get(P)
    if s is None:
        s = _CL2[P] = LinSpace(cl2_generators(P))
    return s


# ---------------------------------------------------------------------------
# predicates

def deg(p, c) -> int:
    return 1 if p in c else 0


def torus_invariant(t, P=None) -> bool:
    t = _d(t)
    if not t:
        return True
    if P is None:
        P = 1 + max(max(c) for w in t for c in w)
    n = len(next(iter(t)))
    for s in range(n):
        for p in range(P):
            acc = {}
            for w, c in t.items():
                if p in w[s]:
                    add_term(acc, w[:s] + w[s + 1:], c)
            if acc:
                return False
    return True


def slot_wedges(t, s) -> dict:
    """{(prefix, suffix): Λ² element} for slots s, s+1."""
    out = {}
    for w, c in _d(t).items():
        a, b = w[s], w[s + 1]
        if a == b:
            continue
        k, sg = W.wedge_key(a, b)
        add_term(out.setdefault((w[:s], w[s + 2:]), {}), k, sg * c)
    return out


def integrable_cluster(t, P=None) -> bool:
    t = _d(t)
    if not t:
        return True
    if P is None:
        P = 1 + max(max(c) for w in t for c in w)
    n = len(next(iter(t)))
    if n < 2:
        raise ValueError("weight >= 2")
    cl2 = cl2_space(P)
    for s in range(n - 1):
        for v in slot_wedges(t, s).values():
            if v and not cl2.contains(v):
                return False
    return True


_LETTER = re.compile(r"^w\{x(\d+),x(\d+)\}$")


def to_plucker(s) -> dict:
    """Substitute w{x_i,x_j} -> Δ_ij letterwise; the result is a tensor."""
    memo = {}

    def conv(a):
        r = memo.get(a)
        if r is None:
            m = _LETTER.match(a)
            if not m:
                raise ValueError("letter %s is not a difference of two points" % a)
            i, j = sorted((int(m.group(1)), int(m.group(2))))
            r = memo[a] = (i, j)
        return r

    out = {}
    for w, c in _d(s).items():
        add_term(out, tuple(conv(a) for a in w), c)
    return out


def dynkin_rep(x) -> dict:
    """θ*(x)/n: a representative of the CoLie class x that commutes with every
    linear change of letters (in particular it keeps slotwise torus
    invariance); used where a tensor, not a class, is inspected."""
    x = _d(x)
    if not x:
        return {}
    n = len(next(iter(x)))
    return {w: c / n for w, c in W.theta(x).items()}


# ---------------------------------------------------------------------------
# CL_n by weight-by-weight construction

def count_admissible(n, P, limit):
    """Number of length-n chord words with pairwise weakly separated letters;
    raises TooLarge once ``limit`` is exceeded."""
    cs = chords(P)
    comp = {a: [b for b in cs if weakly_separated(a, b)] for a in cs}
    count = 0

    def rec(used, k):
        nonlocal count
        if k == n:
            count += 1
            if count > limit:
                raise TooLarge("more than %d admissible words" % limit)
            return
        cand = cs if not used else [b for b in cs if all(weakly_separated(b, u) for u in used)]
        for b in cand:
            rec(used | {b}, k + 1)

    rec(frozenset(), 0)
    return count


def _restrict(basis, bad_words):
    """Combinations of basis tensors vanishing on every word in bad_words."""
    rows = {}
    for idx, v in enumerate(basis):
        for w, c in v.items():
            if w in bad_words:
                rows.setdefault(w, {})[idx] = c
    if not rows:
        return list(basis)
    ns = nullspace(list(rows.values()), range(len(basis)))
    out = []
    for comb_ in ns:
        t = {}
        for idx, c in comb_.items():
            add_into(t, basis[idx], c)
        if t:
            out.append(t)
    return out


def _weight_one(P):
    cs = chords(P)
    rows = [{(c,): Rat(1) for c in cs if p in c} for p in range(P)]
    return [v for v in nullspace(rows, [(c,) for c in cs])]


def _cl2_functionals(P):
    """φ(κ) for each pair κ: coordinates of κ modulo CL2 on non-pivot pairs."""
    cl2 = cl2_space(P)
    piv = set(cl2._rows)

    def phi(k):
        if k in piv:
            return {q: -c for q, c in cl2._rows[k].items() if q != k}
        return {k: Rat(1)}
    return phi


_XCACHE = {}


def integrable_tensors(n: int, P: int, guard=2_000_000, torus=True):
    """Basis of adjacent, integrable (and slotwise torus invariant) tensors."""
    key = (n, P, torus)
    if key in _XCACHE:
        return _XCACHE[key]
    count_admissible(n, P, guard)
    cs = chords(P)
    if n == 1:
        X = _weight_one(P) if torus else [{(c,): Rat(1)} for c in cs]
        _XCACHE[key] = X
        return X
    prev = integrable_tensors(n - 1, P, guard, torus)
    phi = _cl2_functionals(P)
    words = set()
    for v in prev:
        words.update(v)
    Y = {}
    for a in cs:
        bad = {w for w in words if any(crossing(a, b) for b in w)}
        Y[a] = _restrict(prev, bad)
    rows = {}
    for a in cs:
        for idx, v in enumerate(Y[a]):
            var = (a, idx)
            if torus:
                for p in a:
                    for w, c in v.items():
                        add_term(rows.setdefault(("t", p, w), {}), var, c)
            for w, c in v.items():
                b = w[-1]
                if b == a:
                    continue
                k, sg = W.wedge_key(b, a)
                for q, f in phi(k).items():
                    add_term(rows.setdefault(("i", w[:-1], q), {}), var, sg * c * f)
    variables = [(a, idx) for a in cs for idx in range(len(Y[a]))]
    sol = nullspace([r for r in rows.values() if r], variables)
    X = []
    for s in sol:
        t = {}
        for (a, idx), c in s.items():
            for w, d in Y[a][idx].items():
                add_term(t, w + (a,), c * d)
        if t:
            X.append(t)
    _XCACHE[key] = X
    return X


def cl_space(n: int, P: int, guard=2_000_000) -> LinSpace:
    """CL_n(M_{0,P}): the CoLie image of adjacent integrable torus-invariant tensors."""
    if n < 2:
        raise ValueError("n >= 2")
    X = integrable_tensors(n, P, guard)
    s = LinSpace()
    for t in X:
        v = W.nf(t)
        if v:
            s.add(v)
    return s


def cl_dimension_expected(n: int, P: int) -> int:
    from math import comb
    return sum(comb(P - 1, j) for j in range(3, n + 2))


# ---------------------------------------------------------------------------
# functoriality on chords

def map_chords(t, alpha) -> dict:
    """α(Δ_ij) = Δ_{α(i)α(j)}, zero if α(i) = α(j)."""
    out = {}
    for w, c in _d(t).items():
        nw = []
        for (i, j) in w:
            a, b = alpha(i), alpha(j)
            if a == b:
                nw = None
                break
            nw.append((min(a, b), max(a, b)))
        if nw is not None:
            add_term(out, tuple(nw), c)
    return out
