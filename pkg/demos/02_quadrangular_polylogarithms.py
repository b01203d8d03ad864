"""Quadrangular polylogarithms and their main functional equation.

Run with ``python demos/02_quadrangular_polylogarithms.py``.
"""
from clusterpolylog import corr as C
from clusterpolylog import quad as Q
from clusterpolylog.points import xs

# QLi_{n+k} on 2n+2 points is a signed sum of correlators.
P = xs(4)
print("QLi_2(x0..x3) =", Q.qli(2, P))

# The cobracket of its symbol is a sum over pairs of sub-polygons.
for n, k in [(1, 0), (1, 1), (2, 0), (2, 1)]:
    print("coproduct formula for (n,k) = (%d,%d):" % (n, k), Q.qli_coproduct_check(n, k))

# The main functional equation: an alternating sum over even subsets of N+1 points.
for n, N in [(2, 4), (3, 5), (4, 6)]:
    print("main equation, weight %d on %d points, symbol vanishes:" % (n, N + 1),
          not C.symbol(Q.main_equation_lhs(n, N)))

# Its proof reduces to a polynomial identity for the generating function.
print("generating-function identity for N = 1..8:",
      all(Q.psi_identity_check(N, N + 4) for N in range(1, 9)))

# Symbols of QLi on m+1 points span a space of dimension C(m,3)+...+C(m,n+1).
for n, m in [(2, 4), (2, 5), (3, 5), (3, 6)]:
    print("dim Q_%d(%d) = %d, expected %d" % (n, m, Q.qli_dimension(n, m), Q.qli_dimension_expected(n, m)))

# Under the cyclic shift of its arguments QLi^sym picks up the sign (-1)^(n+k+1).
for n, k in [(1, 0), (1, 1), (2, 0), (2, 1)]:
    print("cyclic shift sign for (n,k) = (%d,%d): %+d" % (n, k, Q.cyclic_symmetry_sign(n, k)))
