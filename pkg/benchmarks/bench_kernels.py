"""Compare the compiled and numpy kernel backends on representative codes.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each case is run on both backends; results must agree, and the table shows
the best wall time of N runs and the speedup of the compiled core.
"""

import argparse
import json
import sys
import time

from socodes import kernels
from socodes.analysis import dependent_triples
from socodes.code import build_code
from socodes.ff import make_tower

# (label, params, kernel); python-backend runs are the slow side, so sizes stay modest
CASES = [
    ("weights", (3, 2, 1, 1), "hist"),
    ("weights", (3, 3, 1, 1), "hist"),
    ("weights", (5, 2, 1, 1), "hist"),
    ("weights", (3, 2, 1, 2), "hist"),
    ("weights", (7, 2, 1, 1), "hist"),
    ("weights", (5, 3, 1, 1), "hist"),
    ("weights", (3, 4, 1, 2), "hist"),
    ("triples", (3, 3, 1, 1), "triples"),
    ("triples", (5, 2, 1, 2), "triples"),
    ("triples", (7, 2, 1, 1), "triples"),
    ("triples", (3, 4, 1, 2), "triples"),
]


def _run(code, kind, backend):
    if kind == "hist":
        return kernels.weight_histogram(code.G, code.field, backend=backend).tolist()
    return dependent_triples(code, backend=backend)


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print rows as JSON")
    ns = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    rows = []
    for label, params, kind in CASES:
        code = build_code(make_tower(params))
        tc, rc = _best(lambda: _run(code, kind, "compiled"), ns.repeat)
        tp, rp = _best(lambda: _run(code, kind, "python"), ns.repeat)
        if rc != rp:
            print(f"backends disagree on {label} {params}", file=sys.stderr)
            return 2
        rows.append(
            {
                "kernel": label,
                "params": list(params),
                "n": code.n,
                "k": code.k,
                "q": code.q,
                "compiled_s": round(tc, 5),
                "python_s": round(tp, 5),
                "speedup": round(tp / tc, 1) if tc else None,
            }
        )

    if ns.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'kernel':8} {'params':14} {'[n,k]_q':16} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for r in rows:
        shape = f"[{r['n']},{r['k']}]_{r['q']}"
        print(
            f"{r['kernel']:8} {str(tuple(r['params'])):14} {shape:16} "
            f"{r['compiled_s']:>9.4f}s {r['python_s']:>9.4f}s {r['speedup']:>7}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
