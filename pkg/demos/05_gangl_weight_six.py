"""Weight six: degenerations of S on nine points, the bracket antisymmetry
lemma, and the vanishing of Q⊗S⊗Q and Q⊗Q⊗S.

Run with ``python demos/05_gangl_weight_six.py`` (about a minute).
"""
from clusterpolylog import gangl as G

r = G.gangl_suite6()
for a in r.audits:
    tag = " (informational)" if a.informational else ""
    print("%-22s %-5s %3d ledger generators%s  %s" % (
        a.step_id, "pass" if a.verdict else "FAIL", len(a.ledger_entries_used), tag, a.note))
print("suite passed:", r.passed)

# Every verdict can be replayed from its audit trail alone.
final = r.audits[-1]
print("replay of the last step:", G.replay(final, r.ledger, G.expr(G.W6_FINAL_QQS)))
