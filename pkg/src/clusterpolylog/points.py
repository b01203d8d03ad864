"""Formal points and the weight-one letters ω{p,q}.

Points are indexed variables x_i, named parameters, the constants 0 and 1,
the marker ∞, or rational expressions in variables and parameters (used for
partial products a1…aj and for cross-ratio arguments).

A letter is the class of d log(p − q) in F^×⊗Q.  It is unordered in p, q,
since −1 is torsion.  Letters are canonical strings ``w{u,v}`` meaning
d log(u − v); the constants 1, −1 and ∞ contribute nothing.
"""
from __future__ import annotations

import re
from functools import lru_cache, total_ordering

from .exactalg import Rat, add_term

_KIND_RANK = {"zero": 0, "one": 1, "var": 2, "param": 3, "expr": 4, "inf": 5}
_VARNAME = re.compile(r"^x(\d+)$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@total_ordering
class Point:
    __slots__ = ("kind", "label", "_key", "_hash")

    def __init__(self, kind, label=None):
        if kind not in _KIND_RANK:
            raise ValueError("unknown point kind %r" % kind)
        self.kind = kind
        self.label = label
        self._key = (_KIND_RANK[kind], label if kind == "var" else -1, str(self))
        self._hash = hash(self._key)

    def sort_key(self):
        return self._key

    def __eq__(self, o):
        return isinstance(o, Point) and self._key == o._key

    def __lt__(self, o):
        if isinstance(o, Point):
            return self._key < o._key
        if isinstance(o, DeformedPoint):
            return True
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __str__(self):
        k = self.kind
        if k == "zero":
            return "0"
        if k == "one":
            return "1"
        if k == "inf":
            return "inf"
        if k == "var":
            return "x%d" % self.label
        return str(self.label)

    __repr__ = __str__

    @property
    def is_basic(self):
        return self.kind in ("zero", "one", "var", "param")

    def expr(self):
        import sympy
        k = self.kind
        if k == "zero":
            return sympy.Integer(0)
        if k == "one":
            return sympy.Integer(1)
        if k == "inf":
            raise ValueError("∞ has no affine coordinate")
        if k == "expr":
            return _parse_expr(self.label)
        return sympy.Symbol(str(self))


ZERO = Point("zero")
ONE = Point("one")
INF = Point("inf")


def x(i: int) -> Point:
    return Point("var", int(i))


def xs(n: int):
    return [x(i) for i in range(n)]


def param(name: str) -> Point:
    if not _IDENT.match(name) or _VARNAME.match(name) or name == "inf":
        raise ValueError("bad parameter name %r" % name)
    return Point("param", name)


@lru_cache(maxsize=None)
def _parse_expr(s):
    import sympy
    return sympy.sympify(s)


def expr_point(e) -> Point:
    """Point with coordinate given by a sympy expression (or a string)."""
    import sympy
    e = sympy.cancel(sympy.sympify(e))
    if e == 0:
        return ZERO
    if e == 1:
        return ONE
    if isinstance(e, sympy.Symbol):
        m = _VARNAME.match(e.name)
        return x(int(m.group(1))) if m else param(e.name)
    return Point("expr", str(e))


def prod(*pts) -> Point:
    """Formal product point p1·p2·…; a single factor is returned as is."""
    pts = list(pts)
    if len(pts) == 1:
        return pts[0]
    e = 1
    for p in pts:
        e = e * p.expr()
    return expr_point(e)


def parse_point(s: str) -> Point:
    s = s.strip()
    if s == "0":
        return ZERO
    if s == "1":
        return ONE
    if s == "inf":
        return INF
    m = _VARNAME.match(s)
    if m:
        return x(int(m.group(1)))
    if _IDENT.match(s):
        return param(s)
    return expr_point(s)


# ---------------------------------------------------------------------------
# letters

def _pair_letter(u: str, v: str) -> str:
    u, v = sorted((u, v))
    return "w{%s,%s}" % (u, v)


_WONE = {}


def wone(p: Point, q: Point) -> dict:
    """Letters of d log(p − q) as a dict letter -> Rat (empty if trivial)."""
    key = (p, q) if p < q else (q, p)
    r = _WONE.get(key)
    if r is None:
        r = _WONE[key] = _wone(*key)
    return r


def _wone(p, q):
    if p == q:
        return {}
    if p.kind == "inf" or q.kind == "inf":
        return {}
    if {p.kind, q.kind} == {"zero", "one"}:
        return {}
    if p.is_basic and q.is_basic:
        return {_pair_letter(str(p), str(q)): Rat(1)}
    return _factor_letters(p.expr() - q.expr())


def _factor_letters(e) -> dict:
    import sympy
    e = sympy.cancel(sympy.together(e))
    if e == 0:
        return {}
    num, den = sympy.fraction(e)
    out = {}
    for part, sgn in ((num, 1), (den, -1)):
        c, facs = sympy.factor_list(sympy.expand(part))
        c = sympy.Rational(c)
        for pr, m in sympy.factorint(abs(c.p)).items():
            add_term(out, _pair_letter("0", str(pr)), sgn * m)
        for pr, m in sympy.factorint(c.q).items():
            add_term(out, _pair_letter("0", str(pr)), -sgn * m)
        for g, m in facs:
            add_term(out, _poly_letter(g), sgn * m)
    return out


def _poly_letter(g) -> str:
    import sympy
    g = sympy.expand(g)

    def name(h):
        terms = sympy.Add.make_args(h)
        if len(terms) == 1:
            t = terms[0]
            if t.could_extract_minus_sign():
                t = -t
            return _pair_letter("0", str(t))
        if len(terms) == 2:
            return _pair_letter(str(terms[0]), str(-terms[1]))
        return "w{%s}" % str(h)

    cands = [name(g), name(-g)]
    return min(cands, key=lambda s: (s.count("-"), s))


# ---------------------------------------------------------------------------
# deformed points (for specialization)

@total_ordering
class DeformedPoint:
    """Σ base_e · t^e over finitely many exponents e (zero bases dropped).

    ``scale(b, k)`` is b·t^k; ``shift(b, s, k)`` is b + s·t^k."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms):
        t = tuple(sorted((int(e), p) for e, p in terms if p != ZERO))
        if len({e for e, _ in t}) != len(t):
            raise ValueError("repeated exponent")
        self.terms = t
        self._key = tuple((e, p.sort_key()) for e, p in t)

    @classmethod
    def scale(cls, base, k=0):
        return cls([(k, base)])

    @classmethod
    def shift(cls, base, s, k):
        return cls([(0, base), (k, s)])

    def sort_key(self):
        return self._key

    def __eq__(self, o):
        return isinstance(o, DeformedPoint) and self._key == o._key

    def __lt__(self, o):
        if isinstance(o, DeformedPoint):
            return self._key < o._key
        if isinstance(o, Point):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.terms:
            return "0"
        return "(" + " + ".join("%s*t^%d" % (p, e) for e, p in self.terms) + ")"

    def valuation(self, direction="0"):
        """ν_0 = lowest exponent; ν_∞ (uniformiser 1/t) = −highest exponent."""
        if not self.terms:
            return None
        if direction == "0":
            return self.terms[0][0]
        return -self.terms[-1][0]

    def leading(self, direction="0"):
        if not self.terms:
            return ZERO
        return self.terms[0][1] if direction == "0" else self.terms[-1][1]
