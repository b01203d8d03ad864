"""Cluster polylogarithms on M_{0,P}: the defining tests and the dimensions.

Run with ``python demos/03_cluster_polylogarithms.py``.  The (4,6) and (2,7)
cells take a few seconds each.
"""
from clusterpolylog import cluster as CL
from clusterpolylog import quad as Q

# Cluster variables in type A are chords of a polygon; two chords share a
# cluster exactly when they are weakly separated.
print("chords (0,2) and (1,3) cross:", CL.crossing((0, 2), (1, 3)))
print("chords (0,2) and (2,4) weakly separated:", CL.weakly_separated((0, 2), (2, 4)))

# CL_n(P) is the CoLie image of adjacent, integrable, torus-invariant tensors.
for n, P in [(2, 5), (2, 6), (3, 6), (4, 6), (2, 7)]:
    s = CL.cl_space(n, P)
    print("dim CL_%d on %d points = %d, expected %d" % (n, P, s.rank, CL.cl_dimension_expected(n, P)))

# On six points it coincides with the span of QLi symbols.
for n in (2, 3):
    cl = CL.cl_space(n, 6)
    q = Q.qli_span(n, 5)
    same = q.rank == cl.rank and all(cl.contains(CL.to_plucker(r.d)) for r in q.rows())
    print("CL_%d(6) is spanned by QLi symbols:" % n, same)

# QLi symbols themselves pass the three cluster tests.
for n, k in [(1, 1), (2, 0), (2, 1)]:
    print("QLi_%d on %d points (adjacent, integrable, torus):" % (n + k, 2 * n + 2),
          Q.cluster_properties(n, k))

# Large cells are guarded.
try:
    CL.cl_space(6, 10, guard=100_000)
except CL.TooLarge as e:
    print("weight 6 on 10 points:", e)
