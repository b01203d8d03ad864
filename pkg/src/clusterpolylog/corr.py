"""Correlators and their symbols.

A correlator term is a tuple of points stored in its lexicographically
minimal rotation; the constant tuple is zero.  CorVecs are SparseVecs over
such tuples.

The symbol of a weight-n correlator is the unique CoLie element T with
δ(T) = (S∧S)(Δ c).  It is enough to match the (n−1, 1) component of δ, and
θ* (the dual Dynkin operator) inverts that component explicitly, so no
linear solve is needed.  :func:`symbol_by_solve` does the linear solve and
serves as an independent check.
"""
from __future__ import annotations

import os
from itertools import permutations

from .exactalg import Rat, ZERO as QZERO, SparseVec, add_into, add_term, scaled, solve
from .points import (Point, DeformedPoint, ZERO, ONE, INF, x, param, prod,
                     wone, parse_point, expr_point)
from . import words as W

CHECK = os.environ.get("CLUSTERPOLYLOG_CHECK", "") == "1"


def _sv(d) -> SparseVec:
    v = SparseVec()
    v.d = d
    return v


def _d(v):
    return v.d if isinstance(v, SparseVec) else v


# ---------------------------------------------------------------------------
# terms

def canon(points):
    """Canonical rotation of a point tuple, or None for a constant tuple."""
    p = tuple(points)
    if len(p) < 2:
        return None
    first = p[0]
    if all(q == first for q in p):
        return None
    return min(p[i:] + p[:i] for i in range(len(p)))


def weight(term) -> int:
    return len(term) - 1


def cor(*points) -> SparseVec:
    if len(points) == 1 and isinstance(points[0], (list, tuple)):
        points = tuple(points[0])
    if len(points) < 2:
        raise ValueError("a correlator needs at least two points")
    t = canon(points)
    return _sv({} if t is None else {t: Rat(1)})


def corvec(d) -> SparseVec:
    """Build a CorVec from {point tuple: coeff}, canonicalising keys."""
    out = {}
    for pts, c in _d(d).items():
        t = canon(pts)
        if t is not None:
            add_term(out, t, Rat(c))
    return _sv(out)


def weights(c) -> set:
    return {weight(t) for t in _d(c)}


# ---------------------------------------------------------------------------
# cobracket

_DELTA = {}


def cobracket_pairs(term):
    """Raw list of (y, z) with Δ(term) = Σ y∧z, before canonical ordering."""
    r = _DELTA.get(term)
    if r is not None:
        return r
    n = len(term) - 1
    out = []
    for s in range(n + 1):
        q = term[s:] + term[:s]
        for i in range(1, n):
            y = canon(q[:i + 1])
            z = canon(q[:1] + q[i + 1:])
            if y is not None and z is not None and y != z:
                out.append((y, z))
    _DELTA[term] = out
    return out


def cobracket_term(term) -> dict:
    out = {}
    for y, z in cobracket_pairs(term):
        k, s = W.wedge_key(y, z)
        add_term(out, k, s)
    return out


def cobracket(c) -> SparseVec:
    out = {}
    for t, a in _d(c).items():
        if len(t) < 3:
            continue
        for k, b in cobracket_term(t).items():
            add_term(out, k, a * b)
    return _sv(out)


def cojacobi_term(term) -> dict:
    return W.cojacobi(lambda y: cobracket_term(y) if len(y) > 2 else {}, term)


# ---------------------------------------------------------------------------
# specialization

def specialize_term(term, direction="0"):
    vals = [p.valuation(direction) for p in term]
    finite = [v for v in vals if v is not None]
    if not finite:
        return None
    m = min(finite)
    return canon(tuple(p.leading(direction) if v == m else ZERO
                       for p, v in zip(term, vals)))


def specialize(c, direction="0") -> SparseVec:
    """Sp: keep the leading coefficients of the points of minimal valuation."""
    if direction not in ("0", "inf"):
        raise ValueError("direction is '0' or 'inf'")
    out = {}
    for t, a in _d(c).items():
        s = specialize_term(t, direction)
        if s is not None:
            add_term(out, s, a)
    return _sv(out)


def specialize_wedge(delta, direction="0") -> SparseVec:
    out = {}
    for (y, z), a in _d(delta).items():
        sy, sz = specialize_term(y, direction), specialize_term(z, direction)
        if sy is None or sz is None or sy == sz:
            continue
        k, s = W.wedge_key(sy, sz)
        add_term(out, k, s * a)
    return _sv(out)


# ---------------------------------------------------------------------------
# iterated integrals and multiple polylogarithms

def iterated_integral(x0, mids, end) -> SparseVec:
    """I(x0; x1..xn; x_{n+1}) = Cor(x1..x_{n+1}) − Cor(x0..xn)."""
    mids = tuple(mids)
    if not mids:
        raise ValueError("need at least one middle point")
    return cor(*mids, end) - cor(x0, *mids)


def li_sequence(n0: int, ns, args):
    """Full point string (x0, x1..xw, end) of Li_{n0; n1..nk}(a1..ak)."""
    ns, args = list(ns), list(args)
    if len(ns) != len(args) or not ns:
        raise ValueError("need matching (n1..nk) and (a1..ak), k >= 1")
    if n0 < -1 or any(n < 1 for n in ns):
        raise ValueError("need n0 >= -1 and n_j >= 1")
    if any(a == ZERO for a in args):
        raise ValueError("arguments must be nonzero")
    partial = [prod(*args[:j + 1]) for j in range(len(args))]
    seq = [ZERO] * (n0 + 1) + [ONE]
    for j in range(len(ns)):
        seq += [ZERO] * (ns[j] - 1) + [partial[j]]
    return seq


def multiple_li(n0: int, ns, args) -> SparseVec:
    """Li_{n0;n1..nk}(a1..ak) = (−1)^k I(0; 0^{n0}, 1, 0^{n1−1}, a1, …; a1⋯ak)."""
    seq = li_sequence(n0, ns, args)
    k = len(list(ns))
    return iterated_integral(seq[0], seq[1:-1], seq[-1]) * ((-1) ** k)


def li(n: int, a) -> SparseVec:
    """Classical Li_n(a) = Li_{0;n}(a)."""
    return multiple_li(0, [n], [a])


def cross_ratio(a, b, c, d) -> Point:
    """[a,b,c,d] = (a−b)(c−d) / ((a−d)(c−b)); [∞,x0,x1,x2] = (x1−x2)/(x1−x0)."""
    if a == INF:
        return expr_point((c.expr() - d.expr()) / (c.expr() - b.expr()))
    if b == INF:
        return expr_point((c.expr() - d.expr()) / (a.expr() - d.expr()))
    if c == INF:
        return expr_point((a.expr() - b.expr()) / (a.expr() - d.expr()))
    if d == INF:
        return expr_point((a.expr() - b.expr()) / (c.expr() - b.expr()))
    A, B, C, D = (p.expr() for p in (a, b, c, d))
    return expr_point((A - B) * (C - D) / ((A - D) * (C - B)))


def li2_cross_ratio(a, b, c, d) -> SparseVec:
    return li(2, cross_ratio(a, b, c, d))


# ---------------------------------------------------------------------------
# the symbol map

_SYM = {}


def clear_caches():
    _SYM.clear()
    _SOLVE.clear()
    _DELTA.clear()


def symbol_term(term) -> dict:
    """Normal-form symbol of one correlator term (memoised)."""
    r = _SYM.get(term)
    if r is not None:
        return r
    n = len(term) - 1
    if n == 1:
        r = {(a,): c for a, c in wone(term[0], term[1]).items()}
    else:
        u = {}
        for y, z in cobracket_pairs(term):
            if len(z) == 2:
                sy = symbol_term(y)
                if sy:
                    for (a,), c in symbol_term(z).items():
                        add_into(u.setdefault(a, {}), sy, c)
            if len(y) == 2:
                sz = symbol_term(z)
                if sz:
                    for (a,), c in symbol_term(y).items():
                        add_into(u.setdefault(a, {}), sz, -c)
        r = W.from_last_letter({a: t for a, t in u.items() if t}, n)
        if CHECK:
            _check_symbol(term, r)
    _SYM[term] = r
    return r


def _check_symbol(term, s):
    lhs = W.cobracket_raw(s)
    rhs = W.wedge_of_maps(cobracket_term(term), symbol_term)
    if lhs != rhs:
        raise AssertionError("δS != (S∧S)Δ for %r" % (term,))


def symbol(c) -> SparseVec:
    """S(c) in CoLie normal form over weight-one letters."""
    ws = weights(c)
    if len(ws) > 1:
        raise ValueError("inhomogeneous CorVec")
    out = {}
    for t, a in _d(c).items():
        add_into(out, symbol_term(t), a)
    return _sv(out)


def symbol_wedge(delta) -> SparseVec:
    """(S∧S) applied to a wedge of correlator terms."""
    return _sv(W.wedge_of_maps(delta, symbol_term))


def check_symbol_compatible(c) -> bool:
    """δ(S(c)) == (S∧S)(Δ c)."""
    return W.colie_cobracket(symbol(c)) == symbol_wedge(cobracket(c))


_SOLVE = {}


def symbol_by_solve(term) -> dict:
    """Independent route: solve δ(T) = (S∧S)(Δ term) over Lyndon words."""
    r = _SOLVE.get(term)
    if r is not None:
        return r
    n = len(term) - 1
    if n == 1:
        r = {(a,): c for a, c in wone(term[0], term[1]).items()}
    else:
        target = W.wedge_of_maps(cobracket_term(term), symbol_by_solve)
        letters = sorted({a for (u, v) in target for a in u + v})
        unknowns = W.lyndon_words(letters, n)
        cols = {}
        for l in unknowns:
            for k, c in W.cobracket_raw({l: Rat(1)}).items():
                cols.setdefault(k, {})[l] = c
        keys = sorted(set(cols) | set(target), key=repr)
        rows = [cols.get(k, {}) for k in keys]
        rhs = {i: target[k] for i, k in enumerate(keys) if k in target}
        sol = solve(rows, rhs, unknowns)
        if sol is None:
            raise ArithmeticError("no symbol solves δT = (S∧S)Δ for %r" % (term,))
        r = {w: c for w, c in sol.items() if c}
    _SOLVE[term] = r
    return r


# ---------------------------------------------------------------------------
# an independent oracle: the iterated-integral symbol via last letters

_GON = {}


def ii_tensor_symbol(seq) -> dict:
    """Tensor symbol of I(a0; a1..an; a_{n+1}) by the last-letter recursion
    Σ_k S(I(.. â_k ..)) ⊗ (d log(a_k − a_{k+1}) − d log(a_k − a_{k−1}))."""
    seq = tuple(seq)
    r = _GON.get(seq)
    if r is not None:
        return r
    n = len(seq) - 2
    if n == 0:
        r = {(): Rat(1)}
    else:
        r = {}
        for k in range(1, n + 1):
            letter = {}
            if seq[k] != seq[k + 1]:
                add_into(letter, wone(seq[k], seq[k + 1]))
            if seq[k] != seq[k - 1]:
                add_into(letter, wone(seq[k], seq[k - 1]), -1)
            if not letter:
                continue
            prev = ii_tensor_symbol(seq[:k] + seq[k + 1:])
            for w, c in prev.items():
                for a, d in letter.items():
                    add_term(r, w + (a,), c * d)
    _GON[seq] = r
    return r


def cor_symbol_via_ii(points) -> dict:
    """CoLie symbol of Cor(y1..y_{n+1}) from Σ_j I(y1; y1^{j+1}, y2..y_{n−j}; y_{n+1−j})."""
    y = tuple(points)
    n = len(y) - 1
    out = {}
    for j in range(n):
        seq = (y[0],) + (y[0],) * (j + 1) + y[1:n - j] + (y[n - j],)
        add_into(out, W.nf(ii_tensor_symbol(seq)))
    return out


# ---------------------------------------------------------------------------
# truncated coproduct

def delta_bar(c) -> SparseVec:
    """Δ without its (1, n−1) and (n−1, 1) components."""
    out = {}
    for (y, z), a in _d(cobracket(c)).items():
        if len(y) > 2 and len(z) > 2:
            out[(y, z)] = a
    return _sv(out)


def _b2_letters(term) -> dict:
    """Weight-two term as a combination of B2-block letters (its symbol's
    Lyndon words, each a pair of weight-one letters)."""
    return {(w,): c for w, c in symbol_term(term).items()}


_DBAR = {}


def _delta_bar_symbol_term(term) -> dict:
    r = _DBAR.get(term)
    if r is not None:
        return r
    n = len(term) - 1
    if n % 2:
        r = {}
    elif n == 2:
        r = _b2_letters(term)
    else:
        u = {}
        for y, z in cobracket_pairs(term):
            if len(y) < 3 or len(z) < 3:
                continue
            if len(z) == 3:
                sy = _delta_bar_symbol_term(y)
                if sy:
                    for (a,), c in _b2_letters(z).items():
                        add_into(u.setdefault(a, {}), sy, c)
            if len(y) == 3:
                sz = _delta_bar_symbol_term(z)
                if sz:
                    for (a,), c in _b2_letters(y).items():
                        add_into(u.setdefault(a, {}), sz, -c)
        r = W.from_last_letter({a: t for a, t in u.items() if t}, n // 2)
    _DBAR[term] = r
    return r


def delta_bar_iterated(c, k: int) -> SparseVec:
    """Δ̄^{[k−1]} of a weight-2k element at symbol level, in CoLie_k over
    B2-block letters.  It is the unique CoLie element whose cobracket is
    (Δ̄^{[·]} ∧ Δ̄^{[·]})(Δ̄ c), computed like :func:`symbol_term` with the
    weight-two blocks as letters."""
    ws = weights(c)
    if ws and ws != {2 * k}:
        raise ValueError("weight must be 2k = %d, got %s" % (2 * k, sorted(ws)))
    out = {}
    for t, a in _d(c).items():
        add_into(out, _delta_bar_symbol_term(t), a)
    return _sv(out)


def b2_tensor(*weight_two) -> SparseVec:
    """x1 ⊗ … ⊗ xk projected to CoLie_k over B2-block letters."""
    t = {(): Rat(1)}
    for v in weight_two:
        s = symbol(v)
        t2 = {}
        for w, c in t.items():
            for u, d in s.items():
                add_term(t2, w + (u,), c * d)
        t = t2
    return _sv(W.nf(t))


# ---------------------------------------------------------------------------
# serialization

def term_str(term) -> str:
    return "Cor(" + ",".join(str(p) for p in term) + ")"


def parse_term(s: str):
    s = s.strip()
    if not (s.startswith("Cor(") and s.endswith(")")):
        raise ValueError("not a correlator: %r" % s)
    body = s[4:-1]
    pts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "," and depth == 0:
            pts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    pts.append(cur)
    return canon(tuple(parse_point(p) for p in pts))


def word_str(w) -> str:
    return "[" + "|".join(w) + "]"


def parse_word(s: str):
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("not a word: %r" % s)
    body = s[1:-1]
    if not body:
        return ()
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "|" and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "{"
        depth -= ch == "}"
        cur += ch
    out.append(cur)
    return tuple(out)


# ---------------------------------------------------------------------------
# specialization versus cobracket

def specialization_commutes(c, direction="0") -> bool:
    """Sp(Δ c) == Δ(Sp c)."""
    return specialize_wedge(cobracket(c), direction) == cobracket(specialize(c, direction))


def random_deformed_correlator(rng, weight: int, nvars: int = 4, max_exp: int = 2) -> SparseVec:
    """A correlator of the given weight in points b·t^k or b + s·t^k, where
    b, s are drawn from 0, 1 and x_0..x_{nvars−1}."""
    from .points import DeformedPoint
    pool = [ZERO, ONE] + [x(i) for i in range(nvars)]
    pts = []
    for _ in range(weight + 1):
        b = rng.choice(pool)
        if b != ZERO and rng.random() < 0.5:
            s = rng.choice([p for p in pool if p != ZERO])
            pts.append(DeformedPoint.shift(b, s, rng.randint(1, max_exp)))
        else:
            pts.append(DeformedPoint.scale(b, rng.randint(0, max_exp)))
    return cor(*pts)


def correlator_relation(m: int, n: int, points=None) -> SparseVec:
    """Σ Cor(t_{i0},…,t_{in}) over 0 <= i0 <= … <= in <= m+1 (zero for m+2 <= n)."""
    from itertools import combinations_with_replacement
    pts = list(points) if points is not None else [x(i) for i in range(m + 2)]
    out = {}
    for s in combinations_with_replacement(range(m + 2), n + 1):
        t = canon(tuple(pts[i] for i in s))
        if t is not None:
            add_term(out, t, Rat(1))
    return _sv(out)
