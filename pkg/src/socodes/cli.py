"""Command-line front end: ``socodes build | wdist | certify | tables``.

Exit codes: 0 success, 2 usage or invalid parameters, 3 distribution
mismatch, 4 a claimed property failed to verify.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from . import __version__
from .analysis import (
    CodeParams,
    almost_optimal,
    classify,
    divisibility_implies_so,
    dual_distance_upto,
    is_self_orthogonal,
    locality,
    sphere_packing_max_d,
    so_side_condition,
    weight3_dual_words,
)
from .code import Code, build_code
from .derived import (
    build_lcd,
    build_lcd_variant,
    is_lcd,
    lcd_distance_bound,
    quantum_params,
    steane_chain_check,
)
from .errors import BudgetExceeded, ConditionsNotMet, SOCodeError
from .ff import Params, make_tower
from .wdist import (
    DEFAULT_BUDGET,
    WeightDistribution,
    enumeration_cost,
    min_distance,
    pless_dual_counts,
    wdist_closed,
    wdist_enumerate,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_CLAIM = 0, 2, 3, 4
CHECKS = ("so", "dual", "lcd", "quantum", "lrc", "bounds")
QUANTUM_CHAIN_MAX_N = 2241


REFERENCE_FILES = {4: "linear_codes.json", 5: "quantum_codes.json"}


def load_reference(which: int) -> dict:
    """Reference rows; ``which`` is the CLI table selector (4 linear, 5 quantum)."""
    text = resources.files("socodes").joinpath(f"data/{REFERENCE_FILES[which]}").read_text("utf-8")
    return json.loads(text)


def _report(command: str, params: Params | None, outputs: dict, fingerprint: str | None = None) -> dict:
    return {
        "command": command,
        "params": params.to_dict() if params else None,
        "outputs": outputs,
        "version": __version__,
        "tower_fingerprint": fingerprint,
    }


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(ns) -> Params:
    missing = [f for f in ("p", "s", "s1", "s2") if getattr(ns, f) is None]
    if missing:
        raise SOCodeError("missing " + ", ".join("--" + m for m in missing))
    return Params(ns.p, ns.s, ns.s1, ns.s2)


# --------------------------------------------------------------------------
# build


def cmd_build(ns) -> int:
    params = _params(ns)
    code = build_code(make_tower(params))
    print(f"[{code.n}, {code.k}] over GF({code.q})", file=sys.stderr)
    if ns.matrix:
        print(code.matrix_text(), file=sys.stderr)
    report = _report("build", params, {"code": code.to_dict()}, code.field.tower.fingerprint)
    _emit(report, ns.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# wdist


def cmd_wdist(ns) -> int:
    if ns.code:
        with open(ns.code, encoding="utf-8") as fh:
            data = json.load(fh)
        code = Code.from_dict(data.get("outputs", {}).get("code", data))
        params = code.params
    else:
        params = _params(ns)
        code = None
    outputs: dict = {}
    dists: dict[str, WeightDistribution] = {}
    if ns.mode in ("closed", "both"):
        if params is None:
            raise SOCodeError("closed mode needs parameters")
        dists["closed"] = wdist_closed(params)
    if ns.mode in ("enumerate", "both"):
        if code is None:
            code = build_code(make_tower(params))
        dists["enumerate"] = wdist_enumerate(code, force=ns.force, workers=ns.workers)
    if ns.expected:
        with open(ns.expected, encoding="utf-8") as fh:
            raw = json.load(fh)
        dists["expected"] = WeightDistribution.from_dict(raw.get("distribution", raw))
    for name, wd in dists.items():
        outputs[name] = wd.to_dict()
    verdict = "match"
    if len(dists) > 1:
        values = list(dists.values())
        if any(v != values[0] for v in values[1:]):
            verdict = "mismatch"
        outputs["verdict"] = verdict
    some = next(iter(dists.values()))
    try:
        outputs["min_distance"] = min_distance(some)
    except SOCodeError:
        outputs["min_distance"] = None
    fp = make_tower(params).fingerprint if params else None
    _emit(_report("wdist", params, outputs, fp), ns.out)
    if verdict == "mismatch":
        print("weight distributions disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# --------------------------------------------------------------------------
# certify


def _record(check: str, params: Params, verdict: str, witness=None, **extra) -> dict:
    rec = {"check": check, "params": params.to_dict(), "verdict": verdict, "witness": witness}
    rec.update(extra)
    return rec


def certify_so(params: Params, code: Code) -> dict:
    cond = so_side_condition(params)
    so = is_self_orthogonal(code)
    wd = wdist_closed(params)
    divisible = divisibility_implies_so(code, wd)
    ok = so or not cond
    verdict = "verified" if ok else "failed"
    if not cond:
        verdict = "verified (condition not met, no claim)" if ok else verdict
    return _record("so", params, verdict, None, condition=cond, self_orthogonal=so, p_divisible_with_ones=divisible)


def certify_dual(params: Params, code: Code) -> dict:
    dd = dual_distance_upto(code)
    dual = CodeParams(code.n, code.n - code.k, dd.d or 0, code.q)
    wd = wdist_closed(params)
    pless = pless_dual_counts(wd)
    triples = weight3_dual_words(code)
    ok = dd.d == 3 and pless.A1 == 0 and pless.A2 == 0 and pless.A3 == triples
    if params.s == params.s2:
        ok = ok and dual.label == "AMDS"
    return _record(
        "dual",
        params,
        "verified" if ok else "failed",
        dd.to_dict(),
        dual=dual.to_dict(),
        pless={"A1": pless.A1, "A2": pless.A2, "A3": str(pless.A3)},
        weight3_from_columns=str(triples),
    )


def certify_quantum(params: Params, code: Code | None) -> dict:
    try:
        qp = quantum_params(params)
    except ConditionsNotMet as exc:
        return _record("quantum", params, "not applicable", None, reason=str(exc))
    chain = None
    if code is not None:
        chain = steane_chain_check(code)
    ok = qp.d == 3 and chain is not False
    return _record("quantum", params, "verified" if ok else "failed", None, quantum=qp.to_dict(), chain=chain)


def certify_lcd(params: Params, code: Code, ns) -> dict:
    if not is_self_orthogonal(code):
        return _record("lcd", params, "not applicable", None, reason="parent is not self-orthogonal")
    lcd = build_lcd(code)
    parent_d = min_distance(wdist_closed(params))
    out: dict = {"lcd": {"n": lcd.n, "k": lcd.k, "gram_nonsingular": is_lcd(lcd.code)}}
    ok = out["lcd"]["gram_nonsingular"]
    if enumeration_cost(lcd.code) <= DEFAULT_BUDGET or ns.force:
        d = min_distance(wdist_enumerate(lcd.code, force=ns.force, workers=ns.workers))
        out["lcd"]["d"] = d
        ok = ok and d >= parent_d + 1
    if (params.s, params.s1, params.s2) == (2, 1, 1):
        var = build_lcd_variant(params)
        d = min_distance(wdist_enumerate(var.code, force=True, workers=ns.workers))
        dd = dual_distance_upto(var.code)
        n, k = var.n, var.k
        out["variant"] = {
            "n": n,
            "k": k,
            "d": d,
            "bound": lcd_distance_bound(params.p),
            "gram_nonsingular": is_lcd(var.code),
            "dual_d": dd.d,
            "dual_sphere_packing_max_d": sphere_packing_max_d(n, n - k, params.q),
            "dual_almost_optimal": almost_optimal(n, n - k, dd.d or 0, params.q),
        }
        ok = ok and d >= lcd_distance_bound(params.p) and dd.d == 3 and out["variant"]["gram_nonsingular"]
    return _record("lcd", params, "verified" if ok else "failed", None, **out)


def certify_lrc(params: Params, code: Code, ns) -> dict:
    cert = locality(code, 2, force=ns.force)
    ok = hasattr(cert, "repair") and cert.verify(code)
    return _record("lrc", params, "verified" if ok else "failed", cert.to_dict(), locality=2)


def certify_bounds(params: Params, code: Code) -> dict:
    wd = wdist_closed(params)
    d = min_distance(wd)
    dmax = sphere_packing_max_d(code.n, code.k, code.q)
    return _record(
        "bounds",
        params,
        "verified" if d <= dmax else "failed",
        None,
        code=CodeParams(code.n, code.k, d, code.q).to_dict(),
        sphere_packing_max_d=dmax,
        label=classify(code.n, code.k, d),
    )


def cmd_certify(ns) -> int:
    params = _params(ns)
    checks = [c.strip() for c in ns.checks.split(",") if c.strip()] if ns.checks else list(CHECKS)
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise SOCodeError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    code = build_code(make_tower(params))
    records = []
    for check in CHECKS:
        if check not in checks:
            continue
        if check == "so":
            records.append(certify_so(params, code))
        elif check == "dual":
            records.append(certify_dual(params, code))
        elif check == "quantum":
            records.append(certify_quantum(params, code))
        elif check == "lcd":
            records.append(certify_lcd(params, code, ns))
        elif check == "lrc":
            records.append(certify_lrc(params, code, ns))
        elif check == "bounds":
            records.append(certify_bounds(params, code))
    failed = [r for r in records if r["verdict"] == "failed"]
    outputs = {"checks": records, "discrepancies": [r["check"] for r in failed]}
    _emit(_report("certify", params, outputs, code.field.tower.fingerprint), ns.out)
    return EXIT_CLAIM if failed else EXIT_OK


# --------------------------------------------------------------------------
# tables


def reproduce_linear_table(force: bool = False, workers: int | None = None) -> list[dict]:
    """Recompute every reference linear-code row."""
    out = []
    for row in load_reference(4)["rows"]:
        params = Params(*row["params"])
        code = build_code(make_tower(params))
        if row["code"] == "C_D":
            if enumeration_cost(code) <= DEFAULT_BUDGET or force:
                d = min_distance(wdist_enumerate(code, force=force, workers=workers))
                mode = "enumerated"
            else:
                d = min_distance(wdist_closed(params))
                mode = "params-only"
            got = CodeParams(code.n, code.k, d, code.q)
        else:
            dd = dual_distance_upto(code)
            got = CodeParams(code.n, code.n - code.k, dd.d or 0, code.q)
            mode = "column-search"
        match = (got.n, got.k, got.d, got.q) == (row["n"], row["k"], row["d"], row["q"])
        if row["label"] in ("MDS", "AMDS"):
            match = match and got.label == row["label"]
        out.append(
            {
                "params": row["params"],
                "code": row["code"],
                "expected": f"[{row['n']},{row['k']},{row['d']}]_{row['q']} {row['label']}",
                "computed": f"{got} {got.label}",
                "mode": mode,
                "match": match,
            }
        )
    return out


def reproduce_quantum_table(chain_max_n: int = QUANTUM_CHAIN_MAX_N) -> list[dict]:
    """Recompute every reference quantum-code row; small rows also get the chain check."""
    out = []
    for row in load_reference(5)["rows"]:
        params = Params(*row["params"])
        qp = quantum_params(params)
        mode = "params-only"
        chain = None
        if qp.n <= chain_max_n:
            chain = steane_chain_check(build_code(make_tower(params)))
            mode = "chain-verified"
        match = (qp.n, qp.k, qp.d, qp.q, qp.label) == (row["n"], row["k"], row["d"], row["q"], row["label"])
        match = match and chain is not False
        out.append(
            {
                "params": row["params"],
                "expected": f"[[{row['n']},{row['k']},{row['d']}]]_{row['q']} {row['label']}",
                "computed": f"{qp} {qp.label}",
                "mode": mode,
                "note": qp.note,
                "match": match,
            }
        )
    return out


def cmd_tables(ns) -> int:
    if ns.which == 4:
        rows = reproduce_linear_table(ns.force, ns.workers)
    else:
        rows = reproduce_quantum_table()
    for r in rows:
        flag = "ok  " if r["match"] else "DIFF"
        print(f"{flag} {tuple(r['params'])!s:16} {r['expected']:32} {r['computed']:32} {r['mode']}", file=sys.stderr)
    _emit(_report("tables", None, {"which": ns.which, "rows": rows}), ns.out)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_CLAIM


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="socodes", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_params=True):
        for f in ("p", "s", "s1", "s2"):
            p.add_argument(f"--{f}", type=int)
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--force", action="store_true", help="ignore the enumeration budget")
        p.add_argument("--workers", type=int, default=None, help="worker processes (default: $SOC_WORKERS or 1)")

    b = sub.add_parser("build", help="construct the code and serialize it")
    common(b)
    b.add_argument("--matrix", action="store_true", help="print the generator matrix")
    b.set_defaults(func=cmd_build)

    w = sub.add_parser("wdist", help="weight distribution, closed form and/or enumeration")
    common(w)
    w.add_argument("--mode", choices=("closed", "enumerate", "both"), default="both")
    w.add_argument("--code", help="code JSON written by 'build' (instead of parameters)")
    w.add_argument("--expected", help="distribution JSON to compare against")
    w.set_defaults(func=cmd_wdist)

    c = sub.add_parser("certify", help="verify structural claims")
    common(c)
    c.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    c.set_defaults(func=cmd_certify)

    t = sub.add_parser("tables", help="reproduce the reference tables")
    common(t)
    t.add_argument("which", type=int, choices=(4, 5), help="4: linear codes, 5: quantum codes")
    t.set_defaults(func=cmd_tables)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    start = time.perf_counter()
    try:
        rc = ns.func(ns)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SOCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wall time {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return rc


if __name__ == "__main__":
    sys.exit(main())
