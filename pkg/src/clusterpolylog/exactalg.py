"""Exact rational linear algebra on sparse vectors.

Vectors are finite maps from hashable basis symbols to rationals.  Every
elimination in the package goes through :class:`LinSpace`, which keeps its
rows in reduced row-echelon form with respect to a fixed total order on
symbols, so results never depend on the order in which rows were supplied.
"""
from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


def rat(x) -> Rat:
    """Coerce an int, a Rat or a string 'p/q' to Rat."""
    if isinstance(x, str):
        if "/" in x:
            p, q = x.split("/")
            return Rat(int(p), int(q))
        return Rat(int(x))
    return Rat(x)


def rat_str(x) -> str:
    x = Rat(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return "%d/%d" % (int(x.numerator), int(x.denominator))


# ---------------------------------------------------------------------------
# symbol order

class _Last:
    """Sentinel symbol ordered after every other symbol."""

    def __repr__(self):
        return "<last>"


LAST = _Last()


def skey(s):
    """Total order on basis symbols: ints < strings < tuples < objects."""
    if s is LAST:
        return (9,)
    if isinstance(s, bool):
        return (0, int(s))
    if isinstance(s, int):
        return (0, s)
    if isinstance(s, str):
        return (1, s)
    if isinstance(s, tuple):
        return (2, tuple(skey(e) for e in s))
    k = getattr(s, "sort_key", None)
    if k is not None:
        return (3, k())
    return (4, repr(s))


# ---------------------------------------------------------------------------
# raw dict helpers (used in hot loops)

def add_into(acc: dict, v: dict, c=1):
    """acc += c*v, pruning zeros."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def add_term(acc: dict, k, c):
    y = acc.get(k, ZERO) + c
    if y:
        acc[k] = y
    else:
        acc.pop(k, None)


def scaled(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class SparseVec:
    """Finite Q-linear combination of basis symbols."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        if d is None:
            self.d = {}
        elif isinstance(d, SparseVec):
            self.d = dict(d.d)
        else:
            self.d = {k: Rat(v) for k, v in dict(d).items() if v}

    @classmethod
    def basis(cls, s, c=1):
        return cls({s: c})

    def __len__(self):
        return len(self.d)

    def __bool__(self):
        return bool(self.d)

    def __iter__(self):
        return iter(self.items())

    def __getitem__(self, k):
        return self.d.get(k, ZERO)

    def __contains__(self, k):
        return k in self.d

    def keys(self):
        return sorted(self.d, key=skey)

    def items(self):
        return [(k, self.d[k]) for k in self.keys()]

    def __add__(self, o):
        r = SparseVec(self)
        add_into(r.d, _d(o))
        return r

    def __sub__(self, o):
        r = SparseVec(self)
        add_into(r.d, _d(o), -1)
        return r

    def __neg__(self):
        return SparseVec({k: -v for k, v in self.d.items()})

    def __mul__(self, c):
        return SparseVec(scaled(self.d, Rat(c)))

    __rmul__ = __mul__

    def __eq__(self, o):
        if isinstance(o, int) and o == 0:
            return not self.d
        if isinstance(o, (SparseVec, dict)):
            return self.d == _d(o)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __repr__(self):
        if not self.d:
            return "0"
        return " + ".join("%s*%r" % (rat_str(c), k) for k, c in self.items())

    def support(self):
        return set(self.d)

    def map_keys(self, f):
        """Apply f: symbol -> (symbol or None, sign) linearly."""
        r = {}
        for k, c in self.d.items():
            k2, s = f(k)
            if k2 is not None and s:
                add_term(r, k2, s * c)
        return SparseVec(r)


def _d(v) -> dict:
    return v.d if isinstance(v, SparseVec) else v


# ---------------------------------------------------------------------------
# elimination

class LinSpace:
    """A subspace kept in fully reduced row-echelon form.

    The pivot of a row is its smallest symbol under :func:`skey`; every pivot
    column vanishes in all other rows.  The RREF of a space is unique, so two
    spans are equal iff their ``rows()`` agree.
    """

    def __init__(self, rows=()):
        self._rows = {}      # pivot symbol -> row dict, pivot coefficient 1
        self._cols = {}      # symbol -> set of pivots whose row contains it
        self._keys = {}
        for r in rows:
            self.add(r)

    def _k(self, s):
        k = self._keys.get(s)
        if k is None:
            k = self._keys[s] = skey(s)
        return k

    @property
    def rank(self):
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def residual(self, v) -> dict:
        """v reduced against the rows (zero iff v is in the span)."""
        v = dict(_d(v))
        piv = [p for p in v if p in self._rows]
        for p in piv:
            c = v.get(p)
            if c:
                add_into(v, self._rows[p], -c)
        return v

    def contains(self, v) -> bool:
        return not self.residual(v)

    __contains__ = contains

    def add(self, v) -> bool:
        """Insert v; return True if the rank grew."""
        r = self.residual(v)
        if not r:
            return False
        p = min(r, key=self._k)
        inv = 1 / Rat(r[p])
        r = {k: x * inv for k, x in r.items()}
        # clear column p from existing rows
        users = self._cols.pop(p, set())
        for q in list(users):
            row = self._rows[q]
            c = row[p]
            for k, x in r.items():
                y = row.get(k, ZERO) - c * x
                if y:
                    if k not in row:
                        self._cols.setdefault(k, set()).add(q)
                    row[k] = y
                else:
                    if k in row:
                        del row[k]
                        s = self._cols.get(k)
                        if s is not None:
                            s.discard(q)
        self._rows[p] = r
        for k in r:
            if k != p:
                self._cols.setdefault(k, set()).add(p)
        return True

    def pivots(self):
        return sorted(self._rows, key=self._k)

    def rows(self):
        """Basis rows as SparseVecs, ordered by pivot."""
        return [SparseVec(self._rows[p]) for p in self.pivots()]

    def row(self, p) -> dict:
        return self._rows[p]

    def copy(self):
        s = LinSpace()
        s._rows = {p: dict(r) for p, r in self._rows.items()}
        s._cols = {k: set(v) for k, v in self._cols.items()}
        return s

    def __eq__(self, o):
        if not isinstance(o, LinSpace):
            return NotImplemented
        return self.rank == o.rank and all(o.contains(r) for r in self._rows.values())

    def __repr__(self):
        return "LinSpace(rank=%d)" % self.rank


def reduce(rows) -> LinSpace:
    return LinSpace(rows)


def member(v, s: LinSpace) -> bool:
    return s.contains(v)


def rank(rows) -> int:
    return LinSpace(rows).rank


def span_sum(a: LinSpace, b: LinSpace) -> LinSpace:
    s = a.copy()
    for r in b._rows.values():
        s.add(r)
    return s


def intersect(a: LinSpace, b: LinSpace) -> LinSpace:
    """Zassenhaus: reduce rows (x|x) for x in a and (y|0) for y in b; the
    rows whose left half vanishes span a ∩ b in their right half."""
    z = LinSpace()
    for r in a._rows.values():
        row = {(0, k): x for k, x in r.items()}
        row.update({(1, k): x for k, x in r.items()})
        z.add(row)
    for r in b._rows.values():
        z.add({(0, k): x for k, x in r.items()})
    out = LinSpace()
    for p, row in z._rows.items():
        if p[0] == 1:
            out.add({k[1]: x for k, x in row.items()})
    return out


def nullspace(rows, variables) -> list:
    """Basis of {x : <row, x> = 0 for all rows} over the given variables.

    Rows are dicts keyed by variables.  Returns a list of dicts, one per free
    variable, in variable order."""
    s = rows if isinstance(rows, LinSpace) else LinSpace(rows)
    pivots = set(s._rows)
    out = []
    for f in sorted(variables, key=skey):
        if f in pivots:
            continue
        v = {f: ONE}
        for q in s._cols.get(f, ()):
            v[q] = -s._rows[q][f]
        out.append(v)
    return out


def solve(rows, rhs: dict, variables):
    """One solution x of the system <rows[i], x> = rhs[i], or None.

    ``rows`` is a list of dicts over variables; rhs maps row index to value."""
    s = LinSpace()
    tag = LAST
    for i, r in enumerate(rows):
        rr = dict(r)
        b = rhs.get(i, ZERO)
        if b:
            rr[tag] = -Rat(b)
        s.add(rr)
    if tag in s._rows:
        return None
    x = {}
    for p, r in s._rows.items():
        c = -r.get(tag, ZERO)
        if c:
            x[p] = c
    return x
