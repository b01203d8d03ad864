"""Quadrangular polylogarithms.

QLi_{n+k}(x0..x_{2n+1}) = (−1)^{n+1} Σ_{s ∈ C_{n,k}} sign(s) Cor(x_{s0},…,x_{s_{n+k}}),
and QLi^sym is the same sum over the larger set C̃_{n,k}.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb

from .exactalg import Rat, LinSpace, SparseVec, add_into, add_term
from . import corr as C
from . import words as W


def _sv(d):
    v = SparseVec()
    v.d = d
    return v


# ---------------------------------------------------------------------------
# sequences

def seq_sign(s) -> int:
    return -1 if sum(1 for i in s if i % 2 == 0) % 2 else 1


def enum_sequences(n: int, k: int, symmetrized: bool = False):
    """[(s, sign(s))] for s in C̃_{n,k} (symmetrized) or C_{n,k}."""
    if n < 0 or k < 0:
        return []
    out = []
    for s in combinations_with_replacement(range(2 * n + 2), n + k + 1):
        evens = [i for i in s if i % 2 == 0]
        if len(evens) != len(set(evens)):
            continue
        if not symmetrized:
            hit = {i // 2 for i in s}
            if len(hit) != n + 1:
                continue
        out.append((s, seq_sign(s)))
    return out


def _depth(points):
    if len(points) % 2 or len(points) < 2:
        raise ValueError("need an even number (>= 2) of points")
    return len(points) // 2 - 1


def _qsum(weight, points, symmetrized):
    points = list(points)
    n = _depth(points)
    k = weight - n
    if k < 0 or weight < 1:
        raise ValueError("weight %d below depth %d" % (weight, n))
    out = {}
    sg = (-1) ** (n + 1)
    for s, e in enum_sequences(n, k, symmetrized):
        t = C.canon(tuple(points[i] for i in s))
        if t is not None:
            add_term(out, t, sg * e)
    return _sv(out)


def qli(weight: int, points) -> SparseVec:
    return _qsum(weight, points, False)


def qli_sym(weight: int, points) -> SparseVec:
    return _qsum(weight, points, True)


def qli_signed(s: int, weight: int, points) -> SparseVec:
    """QLi^{(−)^s}: QLi itself for even s, −QLi of the cyclic shift for odd s."""
    points = list(points)
    if s % 2 == 0:
        return qli(weight, points)
    return -qli(weight, points[1:] + points[:1])


def qli_sym_via_pairs(weight: int, points) -> SparseVec:
    """Right side of the subset-of-pairs expansion of QLi^sym."""
    points = list(points)
    n = _depth(points)
    out = SparseVec()
    for r in range(0, n + 1):
        if weight < r:
            continue
        for sub in combinations(range(n + 1), r + 1):
            pts = [p for i in sub for p in (points[2 * i], points[2 * i + 1])]
            out = out + qli(weight, pts) * ((-1) ** (n - r))
    return out


# ---------------------------------------------------------------------------
# coproduct structure

def _graded(points, total, signed_shift=None):
    """{weight: CorVec} for the generating function QLi(points), weights 1..total."""
    out = {}
    n = _depth(points)
    for w in range(max(n, 1), total + 1):
        v = qli(w, points) if signed_shift is None else qli_signed(signed_shift, w, points)
        if v:
            out[w] = v
    return out


def coproduct_rhs(n: int, k: int, points) -> dict:
    """Σ_{i<j, j−i odd} S(QLi^{(−)^i}(inner)) ∧ S(QLi(outer)), weight n+k part.

    The inner factor comes first: with δ induced by deconcatenation,
    δ(w1…wn) = Σ (w1…wi) ∧ (wi+1…wn), this is the order in which the
    identity holds."""
    points = list(points)
    total = n + k
    out = {}
    for i in range(2 * n + 2):
        for j in range(i + 1, 2 * n + 2, 2):
            outer = points[:i + 1] + points[j:]
            inner = points[i:j + 1]
            go = _graded(outer, total - 1)
            gi = _graded(inner, total - 1, signed_shift=i)
            for w1, a in go.items():
                b = gi.get(total - w1)
                if b is None:
                    continue
                W.wedge(C.symbol(b).d, C.symbol(a).d, 1, out)
    return out


def qli_coproduct_check(n: int, k: int, points=None) -> bool:
    from .points import xs
    points = list(points) if points is not None else xs(2 * n + 2)
    lhs = W.cobracket_raw(C.symbol(qli(n + k, points)).d) if n + k >= 2 else {}
    return lhs == coproduct_rhs(n, k, points)


# ---------------------------------------------------------------------------
# the main functional equation

def increasing_even_tuples(N: int, min_size=2, max_size=None):
    max_size = N + 1 if max_size is None else max_size
    for size in range(min_size, max_size + 1, 2):
        for t in combinations(range(N + 1), size):
            yield t


def main_equation_lhs(n: int, N: int, points=None, prefactor: bool = False) -> SparseVec:
    """Σ_{i0<…<i_{2r+1} ≤ N} (−1)^{Σ i} QLi^sym_n(x_{i0},…,x_{i_{2r+1}}).

    With ``prefactor=False`` each QLi^sym is taken without its (−1)^{r+1}
    normalisation, which is the form whose generating function is Ψ; with
    ``prefactor=True`` the normalised QLi^sym is used."""
    from .points import xs
    if not n < N - 1:
        raise ValueError("need n < N-1")
    points = list(points) if points is not None else xs(N + 1)
    out = SparseVec()
    for t in increasing_even_tuples(N):
        r = len(t) // 2 - 1
        if n < r:
            continue
        v = qli_sym(n, [points[i] for i in t])
        sg = (-1) ** sum(t)
        if not prefactor:
            sg *= (-1) ** (r + 1)
        out = out + v * sg
    return out


# ---------------------------------------------------------------------------
# Ψ

def _pmul(a: dict, b: dict, cap=None) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            if cap is not None and sum(m) > cap:
                continue
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _padd(a: dict, b: dict, c=1):
    for m, v in b.items():
        w = a.get(m, 0) + c * v
        if w:
            a[m] = w
        else:
            a.pop(m, None)


def _mono(nv, i=None):
    m = [0] * nv
    if i is not None:
        m[i] = 1
    return tuple(m)


def _one_minus(nv, i):
    return {_mono(nv): 1, _mono(nv, i): -1}


def _geometric(nv, i, cap):
    out = {}
    for e in range(cap + 1):
        m = [0] * nv
        m[i] = e
        out[tuple(m)] = 1
    return out


def psi_numerator_sum(N: int) -> dict:
    """Ψ·∏_{i=1..N}(1−t_i) as an exact polynomial (empty tuple included)."""
    nv = N + 1
    total = {}
    for size in range(0, N + 2, 2):
        for t in combinations(range(N + 1), size):
            odd = set(t[1::2])
            term = {_mono(nv): (-1) ** sum(t)}
            for i in t[0::2]:
                term = _pmul(term, _one_minus(nv, i))
            for j in range(1, N + 1):
                if j not in odd:
                    term = _pmul(term, _one_minus(nv, j))
            _padd(total, term)
    return total


def psi_rhs(N: int) -> dict:
    nv = N + 1
    out = {_mono(nv): 1}
    for i in range(N):
        out = _pmul(out, {_mono(nv, i): 1, _mono(nv, i + 1): -1})
    return out


def psi_low_degree(N: int, cap: int) -> dict:
    """Power series Ψ truncated at total degree ``cap``."""
    nv = N + 1
    total = {}
    for size in range(0, N + 2, 2):
        for t in combinations(range(N + 1), size):
            term = {_mono(nv): (-1) ** sum(t)}
            for i in t[0::2]:
                term = _pmul(term, _one_minus(nv, i), cap)
            for i in t[1::2]:
                term = _pmul(term, _geometric(nv, i, cap), cap)
            _padd(total, term)
    return total


def psi_identity_check(N: int, degree_bound: int) -> bool:
    if N < 1:
        raise ValueError("N >= 1")
    lhs = {m: c for m, c in psi_numerator_sum(N).items() if sum(m) <= degree_bound}
    rhs = {m: c for m, c in psi_rhs(N).items() if sum(m) <= degree_bound}
    low = psi_low_degree(N, N - 1)
    return lhs == rhs and not low


# ---------------------------------------------------------------------------
# dimensions

def qli_tuples(m: int, n: int):
    """Increasing even-size tuples from 0..m usable in weight n (r <= n)."""
    for t in increasing_even_tuples(m, 2, min(m + 1, 2 * n + 2)):
        yield t


def qli_span(n: int, m: int, points=None, keep=None) -> LinSpace:
    from .points import xs
    points = list(points) if points is not None else xs(m + 1)
    s = LinSpace()
    for t in qli_tuples(m, n):
        if keep is not None and not keep(t):
            continue
        v = C.symbol(qli(n, [points[i] for i in t]))
        if v:
            s.add(v.d)
    return s


def qli_dimension(n: int, m: int) -> int:
    if n < 2:
        raise ValueError("n >= 2")
    return qli_span(n, m).rank


def qli_dimension_expected(n: int, m: int) -> int:
    return sum(comb(m, j) for j in range(3, n + 2))


def cn_dimension(n: int, m: int) -> int:
    """dim Q_n(m) minus the span of coface images (tuples missing some i < m)."""
    full = qli_span(n, m)
    faces = qli_span(n, m, keep=lambda t: any(i not in t for i in range(m)))
    return full.rank - faces.rank


# ---------------------------------------------------------------------------
# cluster properties and cyclic symmetry

def cluster_properties(n: int, k: int):
    """(adjacent, integrable, torus invariant) for S(QLi_{n+k}(x0..x_{2n+1}))
    written in Plücker coordinates."""
    from .points import xs
    from . import cluster as CL
    P = 2 * n + 2
    s = C.symbol(qli(n + k, xs(P)))
    t = CL.to_plucker(CL.dynkin_rep(s))
    integ = CL.integrable_cluster(t, P) if n + k >= 2 else True
    return CL.adjacent(t), integ, CL.torus_invariant(t, P)


def cyclic_symmetry_sign(n: int, k: int, projected: bool = False) -> int:
    """ε with S(QLi^sym(x1,…,x_{2n+1},x0)) = ε S(QLi^sym(x0,…,x_{2n+1})), or 0
    if neither sign works.  With ``projected`` both sides are first reduced
    to the words all of whose letters are ω{x0,·}."""
    from .points import xs
    X = xs(2 * n + 2)
    a = C.symbol(qli_sym(n + k, X[1:] + X[:1])).d
    b = C.symbol(qli_sym(n + k, X)).d
    if projected:
        a, b = _pr0(a), _pr0(b)
    if not b:
        return 0
    if a == b:
        return 1
    if a == {w: -c for w, c in b.items()}:
        return -1
    return 0


def _pr0(v):
    return {w: c for w, c in v.items() if all(a.startswith("w{x0,") for a in w)}
