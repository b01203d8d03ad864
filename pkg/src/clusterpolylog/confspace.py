"""The Lie coalgebra of the configuration space of points on the line.

Letters ω_ij = d log(t_i − t_j) are tuples (i, j) with i < j; strings
``w{xi,xj}`` (as produced by symbols of correlators in the points x_i) are
accepted and converted.  After projecting at t_i the letters are
f_j = d log(t_i − t_j), represented by the integer j.
"""
from __future__ import annotations

import re
from itertools import combinations, combinations_with_replacement
from math import comb

from .exactalg import Rat, LinSpace, SparseVec, add_into, add_term, nullspace, scaled
from . import words as W


def _d(v):
    return v.d if isinstance(v, SparseVec) else v


_LETTER = re.compile(r"^w\{x(\d+),x(\d+)\}$")


def omega(a):
    """Normalise a letter to a pair (i, j), i < j."""
    if isinstance(a, tuple):
        i, j = a
    else:
        m = _LETTER.match(a)
        if not m:
            raise ValueError("letter %s is not of the form w{xi,xj}" % a)
        i, j = int(m.group(1)), int(m.group(2))
    if i == j:
        raise ValueError("degenerate letter")
    return (min(i, j), max(i, j))


def to_omega(t) -> dict:
    out = {}
    for w, c in _d(t).items():
        add_term(out, tuple(omega(a) for a in w), c)
    return out


# ---------------------------------------------------------------------------
# Arnold relations and integrability

def arnold_relations(npoints: int):
    out = []
    for i, j, k in combinations(range(npoints), 3):
        r = {}
        W.wedge({(i, j): 1}, {(j, k): 1}, 1, r)
        W.wedge({(j, k): 1}, {(i, k): 1}, 1, r)
        W.wedge({(i, k): 1}, {(i, j): 1}, 1, r)
        out.append(r)
    return out


_ARNOLD = {}


def arnold_space(npoints: int) -> LinSpace:
    s = _ARNOLD.get(npoints)
    if s is None:
        s = _ARNOLD[npoints] = LinSpace(arnold_relations(npoints))
    return s


def _npoints(t):
    return 1 + max(max(a) for w in t for a in w)


def integrable_conf(t, npoints=None) -> bool:
    """Every adjacent-slot wedge of the tensor t lies in the Arnold relations.

    For a CoLie element pass a tensor representative such as θ*(x); the
    Lyndon normal form itself need not be integrable."""
    t = to_omega(t)
    if not t:
        return True
    ws = W.weights(t)
    if len(ws) > 1:
        raise ValueError("inhomogeneous tensor")
    n = ws.pop()
    npoints = npoints or _npoints(t)
    ar = arnold_space(max(npoints, 3))
    for s in range(n - 1):
        blocks = {}
        for w, c in t.items():
            if w[s] == w[s + 1]:
                continue
            k, sg = W.wedge_key(w[s], w[s + 1])
            add_term(blocks.setdefault((w[:s], w[s + 2:]), {}), k, sg * c)
        for v in blocks.values():
            if v and not ar.contains(v):
                return False
    return True


# ---------------------------------------------------------------------------
# projections

def project_pr(i: int, c) -> dict:
    """pr_i: words all of whose letters contain i map to words in the f_j."""
    out = {}
    for w, a in to_omega(c).items():
        nw = []
        for (p, q) in w:
            if i == p:
                nw.append(q)
            elif i == q:
                nw.append(p)
            else:
                nw = None
                break
        if nw is not None:
            add_term(out, tuple(nw), a)
    return W.nf(out)


def omit_index(i: int, c) -> bool:
    """No letter of any word involves t_i."""
    return all(i not in a for w in to_omega(c) for a in w)


def ii_symbol(seq, npoints=None) -> dict:
    """CoLie symbol of I(t_{s0}; t_{s1}..t_{sn}; t_{s_{n+1}}) in the ω letters."""
    from . import corr as C
    from .points import xs
    pts = xs(max(seq) + 1)
    s = C.symbol(C.iterated_integral(pts[seq[0]], [pts[k] for k in seq[1:-1]], pts[seq[-1]]))
    return to_omega(s)


def conf_space(n: int, npoints: int) -> LinSpace:
    """L_n(Conf_npoints), spanned by symbols of iterated integrals; built
    recursively from I(t_a; t_b..; t_e) with a, b.. < e."""
    s = LinSpace()
    for e in range(1, npoints):
        for seq in _ii_sequences(n, e):
            v = W.nf(ii_symbol(seq))
            if v:
                s.add(v)
    return s


def _ii_sequences(n, e):
    """pr_e sends I(t_0; t_{b1}..t_{bn}; t_e) to [f_{b1}|…|f_{bn}], so Lyndon
    words b give a complement of L_n(Conf_e) in L_n(Conf_{e+1})."""
    for mids in W.lyndon_words(range(e), n):
        yield (0,) + tuple(mids) + (e,)


def conf_dimension_expected(n: int, npoints: int) -> int:
    """Σ_{k=2}^{npoints−1} (number of Lyndon words of length n on k letters)."""
    return sum(lyndon_count(k, n) for k in range(1, npoints))


def lyndon_count(k: int, n: int) -> int:
    tot = 0
    for d in range(1, n + 1):
        if n % d == 0:
            tot += _mobius(n // d) * k ** d
    return tot // n


def _mobius(n):
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


# ---------------------------------------------------------------------------
# translation-invariant ordered elements

FRESH = -1  # the letter f of a generic translation


def _translate(t, m):
    """T_f(t) − t as a tensor over the letters 0..m and FRESH."""
    out = {}
    for w, c in _d(t).items():
        n = len(w)
        for mask in range(1, 1 << n):
            nw = tuple(FRESH if mask >> k & 1 else w[k] for k in range(n))
            add_term(out, nw, c)
    return out


def translation_invariant(t, m) -> bool:
    x = W.nf(_translate(t, m))
    return not x


def ordered_words(n: int, m: int):
    """Nondecreasing words in f_0..f_m using at least two letters (Lyndon)."""
    return [w for w in combinations_with_replacement(range(m + 1), n) if w[0] != w[-1]]


_INV = {}


def inv_space(n: int, m: int) -> LinSpace:
    """Inv_n(m): translation-invariant CoLie elements spanned by ordered words."""
    if n < 2:
        raise ValueError("n >= 2")
    key = (n, m)
    if key in _INV:
        return _INV[key]
    basis = ordered_words(n, m)
    rows = {}
    for w in basis:
        for u, c in W.nf(_translate({w: Rat(1)}, m)).items():
            add_term(rows.setdefault(u, {}), w, c)
    sol = nullspace(list(rows.values()), basis)
    s = _INV[key] = LinSpace(sol)
    return s


def inv_dimension_expected(n: int, m: int) -> int:
    return sum(comb(m, k) for k in range(2, n + 1))


def a_elem_tensor(n: int, m: int) -> dict:
    """Σ_{n0+…+nm=n−m} f0^{n0}⊗(f0−f1)⊗f1^{n1}⊗…⊗(f_{m−1}−f_m)⊗f_m^{nm}."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    out = {}
    for cut in combinations_with_replacement(range(m + 1), n - m):
        ns = [cut.count(i) for i in range(m + 1)]
        parts = [{(): Rat(1)}]
        for i in range(m + 1):
            parts.append({(i,) * ns[i]: Rat(1)})
            if i < m:
                parts.append({(i,): Rat(1), (i + 1,): Rat(-1)})
        t = {(): Rat(1)}
        for p in parts:
            t = W.concat(t, p)
        add_into(out, t)
    return out


def a_elem(n: int, m: int) -> dict:
    if not 2 <= m <= n:
        raise ValueError("need 2 <= m <= n")
    return W.nf(a_elem_tensor(n, m))


def translate_tensor(t) -> dict:
    """T_f(t) as a tensor."""
    out = dict(_d(t))
    add_into(out, _translate(t, None))
    return out


def a_elem_translation_identity(n: int, m: int) -> bool:
    """T_f(a_n(m)) = Σ_k f^{⊗k} ⧢ a_{n−k}(m) in the tensor algebra."""
    lhs = translate_tensor(a_elem_tensor(n, m))
    rhs = {}
    for k in range(0, n - m + 1):
        add_into(rhs, W.shuffle_vec({(FRESH,) * k: Rat(1)}, a_elem_tensor(n - k, m)))
    return lhs == rhs


def map_letters(t, alpha) -> dict:
    """Cosimplicial action f_i -> f_{α(i)} (then normal form)."""
    out = {}
    for w, c in _d(t).items():
        add_term(out, tuple(alpha(i) for i in w), c)
    return W.nf(out)


def coface(i):
    return lambda j: j if j < i else j + 1


def codegeneracy(i):
    return lambda j: j if j <= i else j - 1


def killed_by_codegeneracies(t, m) -> bool:
    return all(not map_letters(t, codegeneracy(j)) for j in range(m))


def coface_images(n: int, m: int) -> LinSpace:
    """Span of images of a_n(k), 2 <= k <= min(n, m), under injective
    nondecreasing maps [k] -> [m]."""
    s = LinSpace()
    for k in range(2, min(n, m) + 1):
        a = a_elem(n, k)
        for img in combinations(range(m + 1), k + 1):
            v = map_letters(a, lambda j, img=img: img[j])
            if v:
                s.add(v)
    return s


# ---------------------------------------------------------------------------
# the polynomial model: ordered words <-> monomials in Q[t0..tm]/(t_i^n)

def word_to_monomial(w, m):
    e = [0] * (m + 1)
    for i in w:
        e[i] += 1
    return tuple(e)


def monomial_to_word(e):
    return tuple(i for i, k in enumerate(e) for _ in range(k))


def _poly_mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            add_term(out, tuple(x + y for x, y in zip(m1, m2)), c1 * c2)
    return out


def divisible_space(n: int, m: int) -> LinSpace:
    """Degree-n part of (t0−t1)…(t_{m−1}−t_m)·Q[t] modulo (t_i^n), written in
    ordered words."""
    nv = m + 1
    unit = lambda i: tuple(1 if k == i else 0 for k in range(nv))
    prod = {tuple([0] * nv): Rat(1)}
    for i in range(m):
        prod = _poly_mul(prod, {unit(i): Rat(1), unit(i + 1): Rat(-1)})
    s = LinSpace()
    if n < m:
        return s
    for mono in combinations_with_replacement(range(nv), n - m):
        e = word_to_monomial(mono, m)
        p = _poly_mul(prod, {e: Rat(1)})
        v = {}
        for mm, c in p.items():
            if max(mm) < n:
                add_term(v, monomial_to_word(mm), c)
        if v:
            s.add(v)
    return s


def codegeneracy_kernel(n: int, m: int) -> LinSpace:
    """Ordered-word elements of CoLie_n(f_0..f_m) killed by every σ_j, j < m."""
    basis = ordered_words(n, m)
    rows = {}
    for j in range(m):
        al = codegeneracy(j)
        for w in basis:
            for u, c in map_letters({w: Rat(1)}, al).items():
                add_term(rows.setdefault((j, u), {}), w, c)
    return LinSpace(nullspace(list(rows.values()), basis))


# ---------------------------------------------------------------------------
# exactness of the projection sequence

def relabel_points(t, alpha) -> dict:
    out = {}
    for w, c in to_omega(t).items():
        add_term(out, tuple(omega((alpha(p), alpha(q))) for p, q in w), c)
    return W.nf(out)


def pr_kernel(i: int, space: LinSpace) -> LinSpace:
    rows = space.rows()
    eqs = {}
    for idx, r in enumerate(rows):
        for u, c in project_pr(i, r).items():
            add_term(eqs.setdefault(u, {}), idx, c)
    out = LinSpace()
    for comb_ in nullspace(list(eqs.values()), range(len(rows))):
        v = {}
        for idx, c in comb_.items():
            add_into(v, rows[idx].d, c)
        out.add(v)
    return out


def exactness_shadow(n: int, npoints: int, i: int) -> bool:
    """ker(pr_i) on L_n(Conf) is the image of L_n on the other points, and
    pr_i is onto CoLie_n of npoints−1 letters."""
    full = conf_space(n, npoints)
    ker = pr_kernel(i, full)
    small = LinSpace(relabel_points(r, coface(i)) for r in conf_space(n, npoints - 1).rows())
    return ker == small and full.rank - ker.rank == lyndon_count(npoints - 1, n)
