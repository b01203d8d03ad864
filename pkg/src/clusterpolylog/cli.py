"""Command-line harness for the verification suites and the basis cache.

Every check emits one JSON line
{suite, params, verdict, expected, computed, elapsed_ms, version_hash}
with verdict in {pass, fail, skipped, too-large}.  Exit status is 0 if all
checks pass, 1 if some check fails, 2 on a usage error and 3 if a resource
guard was hit.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from contextlib import contextmanager
from itertools import product
from pathlib import Path

from .exactalg import Rat, LinSpace, rat, rat_str

CACHE_ENV = "CLUSTERPOLYLOG_CACHE"
DEFAULT_SEED = 20240501


def version_hash() -> str:
    h = hashlib.sha256()
    for p in sorted(Path(__file__).parent.glob("*.py")):
        h.update(p.name.encode())
        h.update(p.read_bytes())
    return h.hexdigest()[:12]


class Reporter:
    """Serialises records to one stream and tracks the exit status."""

    def __init__(self, stream):
        self.stream = stream
        self.version = version_hash()
        self.records = []

    def emit(self, suite, params, verdict, expected="", computed="", elapsed_ms=0):
        rec = {"suite": suite, "params": params, "verdict": verdict,
               "expected": str(expected), "computed": str(computed),
               "elapsed_ms": int(elapsed_ms), "version_hash": self.version}
        self.records.append(rec)
        self.stream.write(json.dumps(rec, sort_keys=True, ensure_ascii=False) + "\n")
        self.stream.flush()
        return rec

    @contextmanager
    def timed(self):
        box = {}
        t = time.perf_counter()
        yield box
        box["ms"] = (time.perf_counter() - t) * 1000

    def check(self, suite, params, fn, expected=True):
        """Run fn(); compare with expected."""
        from .cluster import TooLarge
        t = time.perf_counter()
        try:
            got = fn()
        except TooLarge as e:
            return self.emit(suite, params, "too-large", expected, str(e), (time.perf_counter() - t) * 1000)
        verdict = "pass" if got == expected else "fail"
        return self.emit(suite, params, verdict, expected, got, (time.perf_counter() - t) * 1000)

    def exit_code(self) -> int:
        v = {r["verdict"] for r in self.records}
        if "too-large" in v:
            return 3
        if "fail" in v:
            return 1
        return 0


# ---------------------------------------------------------------------------
# basis cache

def cache_dir(args) -> Path | None:
    d = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def _letter_str(c) -> str:
    return "d{%d,%d}" % c


def _parse_letter(s):
    if not (s.startswith("d{") and s.endswith("}")):
        raise ValueError("bad letter %r" % s)
    i, j = s[2:-1].split(",")
    return int(i), int(j)


def row_str(row) -> str:
    from .exactalg import skey
    return " + ".join("%s*[%s]" % (rat_str(c), "|".join(_letter_str(a) for a in w))
                      for w, c in sorted(row.items(), key=lambda kv: skey(kv[0])))


def parse_row(s) -> dict:
    out = {}
    for part in s.split(" + "):
        c, w = part.split("*", 1)
        if not (w.startswith("[") and w.endswith("]")):
            raise ValueError("bad word %r" % w)
        out[tuple(_parse_letter(a) for a in w[1:-1].split("|"))] = rat(c)
    return out


def _body(space: LinSpace) -> str:
    return "".join(row_str(r.d) + "\n" for r in space.rows())


def cache_store(d: Path, n: int, P: int, space: LinSpace) -> Path:
    d.mkdir(parents=True, exist_ok=True)
    body = _body(space)
    p = d / ("cl_n%d_p%d.txt" % (n, P))
    p.write_text("# version %s\n# sha256 %s\n%s" % (version_hash(), hashlib.sha256(body.encode()).hexdigest(), body))
    return p


def _read_entry(p: Path):
    """(version, stored hash, body, rows); raises ValueError if malformed."""
    text = p.read_text()
    lines = text.split("\n", 2)
    if len(lines) < 3 or not lines[0].startswith("# version ") or not lines[1].startswith("# sha256 "):
        raise ValueError("missing header")
    body = lines[2]
    rows = [parse_row(line) for line in body.splitlines() if line.strip()]
    return lines[0][10:], lines[1][9:], body, rows


def cache_load(d: Path, n: int, P: int):
    p = d / ("cl_n%d_p%d.txt" % (n, P))
    if not p.exists():
        return None
    version, digest, body, rows = _read_entry(p)
    if version != version_hash() or hashlib.sha256(body.encode()).hexdigest() != digest:
        return None
    return LinSpace(rows)


def cache_verify(d: Path):
    """[(file, ok, message)]; failing entries are renamed to *.invalid."""
    out = []
    for p in sorted(d.glob("cl_n*_p*.txt")):
        try:
            version, digest, body, rows = _read_entry(p)
            if hashlib.sha256(body.encode()).hexdigest() != digest:
                raise ValueError("content hash mismatch")
            if LinSpace(rows).rank != len(rows):
                raise ValueError("rows are dependent")
            out.append((p.name, True, "ok" if version == version_hash() else "stale version"))
        except (ValueError, OSError, UnicodeDecodeError) as e:
            p.rename(p.with_suffix(".invalid"))
            out.append((p.name, False, str(e)))
    return out


# ---------------------------------------------------------------------------
# suites

def run_coalgebra(rep: Reporter, args):
    from . import corr as C, words as W
    from .points import xs, INF
    rng = random.Random(args.seed)
    wmax = args.weight or 6
    X = xs(args.points or 7)
    for w in range(2, wmax + 1):
        if w <= 4:
            terms = {C.canon(t) for t in product(X[:min(len(X), w + 1)], repeat=w + 1)}
            terms.discard(None)
            mode = "exhaustive"
        else:
            terms = {C.canon(tuple(rng.choice(X) for _ in range(w + 1))) for _ in range(20)}
            terms.discard(None)
            mode = "random"
        rep.check("cojacobi", {"weight": w, "mode": mode, "terms": len(terms)},
                  lambda: all(not C.cojacobi_term(t) for t in sorted(terms)))
    for w in range(2, min(wmax, 5) + 1):
        cases = [C.random_deformed_correlator(rng, w) for _ in range(100)]
        rep.check("specialization", {"weight": w, "cases": 100},
                  lambda: all(C.specialization_commutes(c, d) for c in cases for d in ("0", "inf")))
        rep.check("symbol-compatible", {"weight": w},
                  lambda: all(C.check_symbol_compatible(C.cor(*(rng.choice(X[:5]) for _ in range(w + 1))))
                              for _ in range(20)))
        rep.check("cobracket-injective", {"weight": w}, lambda: W.cobracket_injective("abc", w))
    rep.check("colie-idempotent", {"samples": 50}, lambda: all(
        W.nf(W.nf(t)) == W.nf(t) for t in (
            {tuple(rng.choice("abcd") for _ in range(n)): Rat(rng.randint(-3, 3)) or Rat(1)
             for _ in range(6)} for n in [rng.randint(2, 5) for _ in range(50)])))
    for m, n in [(0, 2), (0, 3), (1, 3), (1, 4)]:
        rep.check("correlator-relation", {"m": m, "n": n},
                  lambda: not C.symbol(C.correlator_relation(m, n)))
    rep.check("five-term-sign", {}, lambda: _five_term_sign(X))
    rep.check("cor-vs-li2", {}, lambda: C.symbol(C.cor(X[0], X[1], X[2])) ==
              -C.symbol(C.li2_cross_ratio(INF, X[0], X[1], X[2])))
    for k in (2, 3):
        rep.check("delta-bar", {"k": k}, lambda: _delta_bar_check(k))
        rep.check("delta-bar-negated", {"k": k}, lambda: _delta_bar_check(k, -1))
    rep.check("li11-vs-li2", {}, lambda: C.symbol(C.multiple_li(1, [1], [X[1]])) ==
              -C.symbol(C.li(2, X[1])))


def _five_term_sign(X):
    from itertools import permutations
    from . import corr as C
    from .gangl import perm_sign
    base = C.symbol(C.li2_cross_ratio(*X[1:5]))
    return all(C.symbol(C.li2_cross_ratio(*[X[1 + i] for i in p])) == base * perm_sign(p)
               for p in permutations(range(4)))


def _delta_bar_check(k, sign=1):
    from . import corr as C
    from .points import param
    a = [param("a%d" % (i + 1)) for i in range(k)]
    lhs = C.delta_bar_iterated(C.multiple_li(k, [1] * k, a), k)
    rhs = C.b2_tensor(*[C.li(2, ai) for ai in a])
    return lhs == rhs * sign


def run_psi(rep, args):
    from .quad import psi_identity_check
    Ns = [args.N] if args.N else range(1, 9)
    for N in Ns:
        deg = args.degree or N + 4
        rep.check("psi", {"N": N, "degree": deg}, lambda: psi_identity_check(N, deg))


MAIN_EQUATION_CELLS = [(2, 4), (2, 5), (3, 5), (3, 6), (4, 6)]


def run_qli_equation(rep, args):
    from . import corr as C
    from .quad import main_equation_lhs
    cells = [(args.n, args.N)] if args.n and args.N else MAIN_EQUATION_CELLS
    for n, N in cells:
        rep.check("main-equation", {"n": n, "N": N}, lambda: not C.symbol(main_equation_lhs(n, N)))


COPRODUCT_CELLS = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]


def run_qli_coproduct(rep, args):
    from .quad import qli_coproduct_check
    cells = [(args.n, args.k)] if args.n is not None and args.k is not None else COPRODUCT_CELLS
    for n, k in cells:
        rep.check("qli-coproduct", {"n": n, "k": k}, lambda: qli_coproduct_check(n, k))


def _qli_cells(weight, points):
    for n in range(1, points // 2):
        for k in range(0, weight - n + 1):
            yield n, k


def run_symmetry(rep, args):
    from .quad import cyclic_symmetry_sign
    for n, k in _qli_cells(args.weight or 5, args.points or 8):
        rep.check("cyclic-symmetry", {"n": n, "k": k},
                  lambda: cyclic_symmetry_sign(n, k), expected=(-1) ** (n + k))


def run_adjacency(rep, args):
    from .quad import cluster_properties
    for n, k in _qli_cells(args.weight or 5, args.points or 8):
        rep.check("qli-cluster", {"n": n, "k": k}, lambda: cluster_properties(n, k),
                  expected=(True, True, True))


def run_dim_qli(rep, args):
    from .quad import qli_dimension, qli_dimension_expected
    cells = [(args.weight, args.m)] if args.weight and args.m else [(2, 4), (2, 5), (3, 5), (3, 6)]
    for n, m in cells:
        rep.check("dim-qli", {"n": n, "m": m}, lambda: qli_dimension(n, m),
                  expected=qli_dimension_expected(n, m))


def run_dim_cl(rep, args):
    from .cluster import cl_space, cl_dimension_expected
    cells = [(args.weight, args.points)] if args.weight and args.points else [(2, 5), (2, 6), (3, 6), (2, 7)]
    guard = args.guard_limit
    d = cache_dir(args)
    for n, P in cells:
        def fn():
            s = cache_load(d, n, P) if d else None
            if s is None:
                s = cl_space(n, P, guard)
                if d:
                    cache_store(d, n, P, s)
            return s.rank
        rep.check("dim-cl", {"n": n, "points": P, "guard": guard}, fn,
                  expected=cl_dimension_expected(n, P))


def run_dim_inv(rep, args):
    from .confspace import inv_space, inv_dimension_expected
    ns = [args.weight] if args.weight else range(2, 6)
    ms = [args.m] if args.m is not None else range(0, 5)
    for n in ns:
        for m in ms:
            rep.check("dim-inv", {"n": n, "m": m}, lambda: inv_space(n, m).rank,
                      expected=inv_dimension_expected(n, m))


def _gangl(rep, result, suite):
    for a in result.audits:
        r = a.record()
        verdict = "pass" if a.verdict else ("skipped" if a.informational else "fail")
        rep.emit(suite, {"step": a.step_id, "informational": a.informational,
                         "ledger_entries_used": len(a.ledger_entries_used), "note": a.note},
                 verdict, "≡ 0" if r["ledger_entries_used"] else "exact",
                 "residual %d terms" % r["residual_size"] if not a.verdict else a.claim_hash)


def run_gangl4(rep, args):
    from .gangl import gangl_suite4
    _gangl(rep, gangl_suite4(zagier=True), "gangl4")


def run_gangl6(rep, args):
    from .gangl import gangl_suite6
    _gangl(rep, gangl_suite6(), "gangl6")


def run_cache(rep, args):
    d = cache_dir(args)
    if d is None:
        raise SystemExit("cache: set --cache-dir or %s" % CACHE_ENV)
    if args.action == "list":
        for p in sorted(d.glob("cl_n*_p*.txt")) if d.exists() else []:
            rep.emit("cache-list", {"file": p.name}, "pass", "", p.stat().st_size)
    elif args.action == "clear":
        n = 0
        for p in list(d.glob("cl_n*_p*.*")) if d.exists() else []:
            p.unlink()
            n += 1
        rep.emit("cache-clear", {"dir": str(d)}, "pass", "", n)
    else:
        for name, ok, msg in (cache_verify(d) if d.exists() else []):
            rep.emit("cache-verify", {"file": name}, "pass" if ok else "fail", "ok", msg)


COMMANDS = {
    "verify-coalgebra": run_coalgebra,
    "verify-psi": run_psi,
    "verify-qli-equation": run_qli_equation,
    "verify-qli-coproduct": run_qli_coproduct,
    "verify-symmetry": run_symmetry,
    "dim-qli": run_dim_qli,
    "dim-cl": run_dim_cl,
    "dim-inv": run_dim_inv,
    "verify-adjacency": run_adjacency,
    "verify-gangl4": run_gangl4,
    "verify-gangl6": run_gangl6,
    "cache": run_cache,
}


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clusterpolylog", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("--weight", "--points", "--n", "--N", "--k", "--m", "--degree"):
        common.add_argument(flag, type=int, default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--guard-limit", type=int, default=2_000_000)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "cache":
            sp.add_argument("action", choices=["list", "clear", "verify"])
    return ap


def run(argv=None) -> int:
    args = parser().parse_args(argv)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        rep = Reporter(out)
        COMMANDS[args.command](rep, args)
        return rep.exit_code()
    finally:
        if args.out:
            out.close()


def main():
    sys.exit(run())
