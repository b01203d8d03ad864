"""Correlators and the symbol map.

Run with ``python demos/01_correlators_and_symbols.py``.
"""
from itertools import permutations

from clusterpolylog import corr as C
from clusterpolylog import words as W
from clusterpolylog.gangl import perm_sign
from clusterpolylog.points import INF, param, xs

x0, x1, x2, x3, x4 = xs(5)

# A correlator is a cyclic tuple of points; rotations are identified.
c = C.cor(x0, x1, x2, x3)
print("Cor(x0,x1,x2,x3) =", c, " (same as the rotation:", c == C.cor(x1, x2, x3, x0), ")")

# Its cobracket splits the cycle in all ways.
print("cobracket has", len(C.cobracket(c).d), "wedge terms")

# The symbol is the unique CoLie element whose cobracket is (S ∧ S)(Δ c).
s = C.symbol(c)
print("symbol of Cor(x0..x3) has", len(s.d), "Lyndon words, e.g.", next(iter(s.d)))
print("compatible with the cobracket:", C.check_symbol_compatible(c))

# Weight two: the correlator of three points is minus Li2 of a cross-ratio.
print("S(Cor(x0,x1,x2)) == -S(Li2([inf,x0,x1,x2])):",
      C.symbol(C.cor(x0, x1, x2)) == -C.symbol(C.li2_cross_ratio(INF, x0, x1, x2)))

# Li2 of a cross-ratio transforms by the sign of the permutation of its four points.
base = C.symbol(C.li2_cross_ratio(x1, x2, x3, x4))
ok = all(C.symbol(C.li2_cross_ratio(*[(x1, x2, x3, x4)[i] for i in p])) == base * perm_sign(p)
         for p in permutations(range(4)))
print("S4 acts on S(Li2([a,b,c,d])) by the sign character:", ok)

# Multiple polylogarithms as iterated integrals, and the truncated coproduct.
a1, a2 = param("a1"), param("a2")
li = C.multiple_li(2, [1, 1], [a1, a2])
lhs = C.delta_bar_iterated(li, 2)
rhs = C.b2_tensor(C.li(2, a1), C.li(2, a2))
print("Δ̄ Li_{2;1,1}(a1,a2) equals", "+" if lhs == rhs else "-" if lhs == -rhs else "?",
      "Li2(a1) ⊗ Li2(a2)")

# The CoLie quotient kills shuffles.
print("shuffle ab ⧢ c in CoLie:", W.nf(W.shuffle(("a", "b"), ("c",))))
