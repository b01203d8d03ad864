"""Tensor words and the cofree Lie coalgebra.

A word is a tuple of letters; letters of one computation must be mutually
comparable with ``<``.  Tensors are dicts ``word -> Rat``.

CoLie(A) is T(A) modulo the span of nontrivial shuffle products.  Lyndon
words form a basis of the quotient (Radford), and a non-Lyndon word w with
Lyndon factorisation l1 >= l2 >= ... >= lk is the lexicographically largest
word of l1 ⧢ ... ⧢ lk, occurring with a positive coefficient.  Rewriting w
in terms of the smaller words of that product gives a terminating,
deterministic reduction to Lyndon words: this is the normal form.
"""
from __future__ import annotations

import sys
from itertools import combinations

from .exactalg import Rat, ZERO, SparseVec, add_into, add_term, scaled, skey

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _d(t):
    return t.d if isinstance(t, SparseVec) else t


# ---------------------------------------------------------------------------
# shuffles

def shuffle(u, v) -> dict:
    """u ⧢ v as a dict word -> int."""
    u, v = tuple(u), tuple(v)
    n, m = len(u), len(v)
    out = {}
    for pos in combinations(range(n + m), n):
        w = [None] * (n + m)
        ps = set(pos)
        i = j = 0
        for p in range(n + m):
            if p in ps:
                w[p] = u[i]
                i += 1
            else:
                w[p] = v[j]
                j += 1
        w = tuple(w)
        out[w] = out.get(w, 0) + 1
    return out


def shuffle_rec(u, v) -> dict:
    """Recursive definition, kept as an oracle for :func:`shuffle`."""
    u, v = tuple(u), tuple(v)
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    for w, c in shuffle_rec(u[1:], v).items():
        k = (u[0],) + w
        out[k] = out.get(k, 0) + c
    for w, c in shuffle_rec(u, v[1:]).items():
        k = (v[0],) + w
        out[k] = out.get(k, 0) + c
    return out


def shuffle_vec(s, t) -> dict:
    """Bilinear shuffle of two tensors."""
    out = {}
    for u, a in _d(s).items():
        for v, b in _d(t).items():
            for w, c in shuffle(u, v).items():
                add_term(out, w, a * b * c)
    return out


def concat(s, t) -> dict:
    out = {}
    for u, a in _d(s).items():
        for v, b in _d(t).items():
            add_term(out, u + v, a * b)
    return out


def deconcatenate(t) -> dict:
    """Reduced deconcatenation: dict (left, right) -> coeff, both nonempty."""
    out = {}
    for w, c in _d(t).items():
        for i in range(1, len(w)):
            add_term(out, (w[:i], w[i:]), c)
    return out


# ---------------------------------------------------------------------------
# Lyndon words

def lyndon_factorization(w):
    """Duval's algorithm: w = l1 l2 ... lk with l1 >= l2 >= ... Lyndon."""
    w = tuple(w)
    n = len(w)
    out = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def is_lyndon(w) -> bool:
    return len(w) > 0 and len(lyndon_factorization(w)) == 1


def lyndon_words(alphabet, n):
    """All Lyndon words of length n over a sorted alphabet (Duval's generator)."""
    a = sorted(alphabet)
    k = len(a)
    if n == 0 or k == 0:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append(tuple(a[i] for i in w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


# ---------------------------------------------------------------------------
# CoLie normal form

_NF = {}


def clear_caches():
    _NF.clear()
    _THETA.clear()


def nf_word(w) -> dict:
    """Normal form of a single word (memoised)."""
    r = _NF.get(w)
    if r is not None:
        return r
    fac = lyndon_factorization(w)
    if len(fac) == 1:
        r = {w: Rat(1)}
    else:
        p = {fac[0]: 1}
        for l in fac[1:]:
            q = {}
            for u, a in p.items():
                for v, b in shuffle(u, l).items():
                    q[v] = q.get(v, 0) + a * b
            p = q
        c = Rat(p.pop(w))
        r = {}
        for v, a in p.items():
            if a:
                add_into(r, nf_word(v), -a / c)
    _NF[w] = r
    return r


def weights(t) -> set:
    return {len(w) for w in _d(t)}


def colie_project(t) -> SparseVec:
    """Normal form of t in CoLie; t must be homogeneous of weight >= 1."""
    t = _d(t)
    ws = weights(t)
    if len(ws) > 1:
        raise ValueError("inhomogeneous tensor (weights %s)" % sorted(ws))
    if 0 in ws:
        raise ValueError("the empty word is not in CoLie")
    out = {}
    for w, c in t.items():
        add_into(out, nf_word(w), c)
    return _sv(out)


def _sv(d) -> SparseVec:
    v = SparseVec()
    v.d = d
    return v


def nf(t) -> dict:
    """Normal form as a raw dict (no homogeneity check)."""
    out = {}
    for w, c in _d(t).items():
        add_into(out, nf_word(w), c)
    return out


# ---------------------------------------------------------------------------
# wedges

def wedge_key(a, b):
    """Canonical key and sign for a ∧ b of basis elements (None if a == b)."""
    if a == b:
        return None, 0
    try:
        lt = a < b
    except TypeError:
        lt = skey(a) < skey(b)
    if lt:
        return (a, b), 1
    return (b, a), -1


def wedge(x, y, c=1, acc=None) -> dict:
    """acc += c * x∧y, bilinear over the basis symbols of x and y."""
    acc = {} if acc is None else acc
    for a, p in _d(x).items():
        for b, q in _d(y).items():
            if a == b:
                continue
            k, s = wedge_key(a, b)
            add_term(acc, k, s * c * p * q)
    return acc


def wedge_basis(x, y) -> SparseVec:
    return _sv(wedge(x, y))


def wedge3_key(a, b, c):
    ks = [a, b, c]
    if a == b or b == c or a == c:
        return None, 0
    order = sorted(range(3), key=lambda i: skey(ks[i]))
    sign = 1
    o = list(order)
    for i in range(3):
        for j in range(i + 1, 3):
            if o[i] > o[j]:
                sign = -sign
    return tuple(ks[i] for i in order), sign


def colie_cobracket(c) -> SparseVec:
    """δ on CoLie: deconcatenation, antisymmetrised, both sides in normal form.

    Output keys are pairs (u, v) of Lyndon words."""
    out = {}
    for w, a in nf(c).items():
        n = len(w)
        if n < 2:
            raise ValueError("cobracket of a weight-one element")
        for i in range(1, n):
            wedge(nf_word(w[:i]), nf_word(w[i:]), a, out)
    return _sv(out)


def cobracket_raw(c) -> dict:
    """δ on a tensor already in normal form (no weight check)."""
    out = {}
    for w, a in _d(c).items():
        for i in range(1, len(w)):
            wedge(nf_word(w[:i]), nf_word(w[i:]), a, out)
    return out


def wedge_of_maps(delta: dict, f, g=None) -> dict:
    """(f∧g)(Σ c y∧z) where f, g map basis symbols to vectors."""
    g = g or f
    out = {}
    for (y, z), c in _d(delta).items():
        fy, gz = f(y), g(z)
        if fy and gz:
            wedge(fy, gz, c, out)
    return out


def cojacobi(delta_of, x) -> dict:
    """Alt3 (δ⊗id)δ(x) in Λ³; zero for a Lie coalgebra.

    delta_of(y) must return a dict of wedge pairs for a basis symbol y."""
    out = {}
    for (y, z), c in delta_of(x).items():
        for (a, b), d in delta_of(y).items():
            k, s = wedge3_key(a, b, z)
            if k:
                add_term(out, k, s * c * d)
        for (a, b), d in delta_of(z).items():
            k, s = wedge3_key(a, b, y)
            if k:
                add_term(out, k, -s * c * d)
    return out


# ---------------------------------------------------------------------------
# dual Dynkin operator

_THETA = {}


def theta_word(w) -> dict:
    """θ*(w), adjoint of left-normed bracketing: θ*(b1..bn) =
    θ*(b1..b_{n-1})·bn − θ*(b2..bn)·b1.  It kills shuffles and satisfies
    θ*(x) ≡ n·x modulo shuffles in weight n."""
    r = _THETA.get(w)
    if r is not None:
        return r
    if len(w) == 1:
        r = {w: Rat(1)}
    else:
        r = {}
        for u, c in theta_word(w[:-1]).items():
            add_term(r, u + w[-1:], c)
        for u, c in theta_word(w[1:]).items():
            add_term(r, u + w[:1], -c)
    _THETA[w] = r
    return r


def theta(t) -> dict:
    out = {}
    for w, c in _d(t).items():
        add_into(out, theta_word(w), c)
    return out


def from_last_letter(u: dict, n: int) -> dict:
    """The CoLie element x of weight n whose (n−1,1) cobracket component is
    Σ_a u[a] ⊗ a; u maps letters to normal-form tensors of weight n−1.

    Uses x ≡ θ*(x)/n and θ*(x) = Σ_a θ*(u[a])·a."""
    big = {}
    for a, t in u.items():
        for w, c in t.items():
            for v, d in theta_word(w).items():
                add_term(big, v + (a,), c * d)
    return scaled(nf(big), Rat(1, n))


def last_letter_part(x) -> dict:
    """(n−1,1) component of δ(x): letter -> tensor (normal form)."""
    u = {}
    for w, c in nf(x).items():
        if len(w) < 2:
            raise ValueError("weight-one element")
        a = w[-1]
        add_into(u.setdefault(a, {}), nf_word(w[:-1]), c)
        a = w[0]
        add_into(u.setdefault(a, {}), nf_word(w[1:]), -c)
    return {a: t for a, t in u.items() if t}


def word_str(w, letter_str=str) -> str:
    return "[" + "|".join(letter_str(a) for a in w) + "]"


def cobracket_injective(alphabet, n: int) -> bool:
    """δ is injective on CoLie_n over the alphabet (checked on the Lyndon basis)."""
    from .exactalg import LinSpace
    basis = lyndon_words(alphabet, n)
    s = LinSpace()
    for l in basis:
        s.add(_d(colie_cobracket(nf_word(tuple(l)))))
    return s.rank == len(basis)
