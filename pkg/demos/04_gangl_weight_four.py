"""The Q/S calculus in weight four and the audited chain ending in S⊗Q ≡ 0.

Run with ``python demos/04_gangl_weight_four.py``.
"""
from clusterpolylog import gangl as G

# Cross-ratio classes are sorted 4-tuples carrying the sign of the sorting.
print("[1,0,2,3] =", G.pf_letter(1, 0, 2, 3))

# S on seven points, expanded in CoLie_2.
S7 = G.build_s(range(7))
print("S(x0..x6) has", len(S7), "terms")

# Every step of the chain is an exact membership test against earlier zeros.
r = G.gangl_suite4(zagier=True)
for a in r.audits:
    used = ", ".join(sorted({u["label"] for u in a.ledger_entries_used})) or "none"
    tag = " (informational)" if a.informational else ""
    print("%-28s %-5s uses: %s%s" % (a.step_id, "pass" if a.verdict else "FAIL", used, tag))
print("suite passed:", r.passed)
