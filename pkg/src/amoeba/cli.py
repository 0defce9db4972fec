"""Command-line interface.

Exit codes: 0 success, 1 internal inconsistency, 2 unparseable input,
3 size cap or budget exceeded, 4 classifier/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .census import census
from .classifier import (AmoebaReport, classify, default_max_n, is_global_amoeba,
                         is_local_amoeba, verify_extremal_bounds)
from .constructions import fibonacci_tree, h_graph
from .errors import BudgetExceeded, CapExceeded, InconsistencyError
from .expr import ExpressionError, evaluate, parse_expression
from .graph import Graph
from .graph6 import from_edge_list, from_graph6, to_edge_list, to_graph6
from .iso import is_isomorphic
from .oracle import DEFAULT_BUDGET, replacement_reachability, sweep
from .replacements import amoeba_group, feasible_replacements, replacement_coset

EXIT_OK, EXIT_INCONSISTENT, EXIT_PARSE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4

_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


class InputError(ValueError):
    pass


def _parse_token(token: str) -> Graph:
    token = token.strip()
    try:
        if "(" in token:
            return parse_expression(token)
        return from_graph6(token)
    except ValueError as exc:
        raise InputError(f"{token!r}: {exc}") from exc


def load_inputs(token: str) -> Iterator[tuple[str, Graph]]:
    """Yield (label, graph) pairs from an expression, graph6 string, file or '-' (stdin)."""
    if token == "-":
        for line in sys.stdin:
            if line.strip():
                yield line.strip(), _parse_token(line)
        return
    if "(" not in token and os.path.isfile(token):
        with open(token) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip() and not ln.startswith("#")]
        if lines and _EDGE_HEADER.match(lines[0]):
            try:
                yield token, from_edge_list(lines)
            except ValueError as exc:
                raise InputError(f"{token}: {exc}") from exc
        else:
            for ln in lines:
                yield ln.strip(), _parse_token(ln)
        return
    yield token, _parse_token(token)


def _all_inputs(tokens: list[str]) -> list[tuple[str, Graph]]:
    return [item for t in tokens for item in load_inputs(t)]


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=False), flush=True)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _classify_job(args: tuple[Graph, int | None, bool]) -> AmoebaReport:
    g, max_n, witnesses = args
    return classify(g, max_n=max_n, witnesses=witnesses)


def cmd_classify(a) -> int:
    items = _all_inputs(a.inputs)
    jobs = [(g, a.max_n, a.witnesses) for _, g in items]
    if a.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            reports = list(pool.map(_classify_job, jobs))
    else:
        reports = [_classify_job(j) for j in jobs]
    status = EXIT_OK
    for (label, _), r in zip(items, reports):
        if a.json:
            _emit({"input": label, **r.to_json()})
        else:
            print(f"{label}: n={r.n} m={r.m} local={_yn(r.is_local)} global={_yn(r.is_global)} "
                  f"|S_G|={r.group_order}")
            if a.witnesses and r.witnesses is not None:
                print("  witnesses: " + ", ".join(f"{x + 1}->{y + 1}" for x, y in sorted(r.witnesses.items())))
        if not r.consistent:
            bad = [k for k, v in r.checks.items() if not v]
            print(f"internal inconsistency on {label}: {bad}", file=sys.stderr)
            status = EXIT_INCONSISTENT
    return status


def cmd_construct(a) -> int:
    try:
        obj = evaluate(a.expression)
    except ExpressionError as exc:
        raise InputError(str(exc)) from exc
    root = getattr(obj, "root", None)
    g = obj.graph if root is not None else obj
    if a.format == "graph6":
        print(to_graph6(g))
    elif a.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        out = {"graph6": to_graph6(g), "n": g.n, "m": g.m, "edges": [list(e) for e in g.edge_list()]}
        if root is not None:
            out["root"] = root + 1
        _emit(out)
    return EXIT_OK


def cmd_replacements(a) -> int:
    for label, g in _all_inputs(a.inputs):
        reps = feasible_replacements(g)
        if a.json:
            rows = []
            for r in reps:
                row = r.to_json()
                if a.cosets:
                    row["coset"] = [str(p) for p in replacement_coset(g, r)]
                rows.append(row)
            _emit({"input": label, "replacements": rows})
        else:
            print(f"{label}: {len(reps)} feasible replacements")
            for r in reps:
                extra = ""
                if a.cosets:
                    extra = "  {" + ", ".join(str(p) for p in replacement_coset(g, r)) + "}"
                print(f"  {r.label}  {r.representative}{extra}")
    return EXIT_OK


def cmd_group(a) -> int:
    for label, g in _all_inputs(a.inputs):
        cap = default_max_n() if a.max_n is None else a.max_n
        if g.n > cap:
            raise CapExceeded(f"group on {g.n} points exceeds the cap of {cap}")
        grp = amoeba_group(g)
        info = {"input": label, "degree": grp.degree, "order": str(grp.order()),
                "is_symmetric": grp.is_symmetric(),
                "orbits": [[x + 1 for x in o] for o in grp.orbits()],
                "base": [b + 1 for b in grp.base],
                "generators": [str(p) for p in grp.generators]}
        if a.json:
            _emit(info)
        else:
            print(f"{label}: |S_G| = {info['order']} on {grp.degree} points"
                  f"{' (symmetric)' if info['is_symmetric'] else ''}")
            print("  orbits: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in info["orbits"]))
            print("  generators: " + " ".join(info["generators"]))
    return EXIT_OK


def cmd_oracle(a) -> int:
    status = EXIT_OK
    for label, g in _all_inputs(a.inputs):
        N = g.n if a.host_order is None else a.host_order
        res = replacement_reachability(g, N, a.budget)
        cap = max(g.n + 1, a.max_n or default_max_n())
        if N == g.n:
            kind, expected = "local", is_local_amoeba(g, max_n=cap)
        else:
            kind, expected = "global", is_global_amoeba(g, max_n=cap)
        match = expected == res.connected
        if a.json:
            _emit({"input": label, **res.to_json(), "verdict": kind,
                   "oracle": res.connected, "classifier": expected, "match": match})
        else:
            print(f"{label}: {len(res.states)} copies in K_{N}, {len(res.components)} component(s); "
                  f"oracle {kind}={_yn(res.connected)} classifier {kind}={_yn(expected)}")
        if not match:
            print(f"mismatch on {label}", file=sys.stderr)
            status = EXIT_MISMATCH
    return status


def cmd_sweep(a) -> int:
    rep = sweep(a.n, a.budget, allow_large=a.allow_large)
    if a.json:
        for row in rep.rows:
            _emit(row)
        _emit({"n": a.n, "classes": rep.classes, "mismatches": len(rep.mismatches)})
    else:
        for row in rep.mismatches:
            print(f"mismatch: {row}")
        print(f"{rep.classes} classes, {len(rep.mismatches)} mismatches")
    return EXIT_MISMATCH if rep.mismatches else EXIT_OK


def cmd_bounds(a) -> int:
    for label, g in _all_inputs(a.inputs):
        glob = is_global_amoeba(g, max_n=a.max_n)
        res = verify_extremal_bounds(g, glob)
        if a.json:
            _emit({"input": label, "is_global": glob, "bounds": res})
            continue
        print(f"{label}: global={_yn(glob)} min degree={g.min_degree()}")
        if not res["applicable"]:
            print(f"  not applicable: {res['reason']}")
            continue
        for name in ("edges", "clique", "chromatic", "welsh_powell", "max_degree"):
            b = res[name]
            if "skipped" in b:
                print(f"  {name}: skipped ({b['skipped']})")
            else:
                print(f"  {name}: {b['value']} <= {b['bound']}  satisfied={_yn(b['satisfied'])} "
                      f"tight={_yn(b['tight'])}")
    return EXIT_OK


def probe(max_n: int, fib_max: int, max_cap: int | None = None) -> dict:
    """Search the census for extremal global amoebas and check the Fibonacci trees."""
    found = []
    for n in range(2, max_n + 1):
        for g in census(n):
            if g.min_degree() != 1 or g.m != n * n // 4:
                continue
            if not is_global_amoeba(g, max_n=n + 1):
                continue
            found.append({"n": n, "graph6": to_graph6(g), "isomorphic_to_h": is_isomorphic(g, h_graph(n))})
    missing = [n for n in range(2, max_n + 1)
               if not any(f["n"] == n and f["isomorphic_to_h"] for f in found)]
    fib = []
    for i in range(1, fib_max + 1):
        t = fibonacci_tree(i).graph
        cap = max(t.n + 1, max_cap or 0)
        fib.append({"i": i, "n": t.n, "is_local": is_local_amoeba(t, max_n=cap),
                    "is_global": is_global_amoeba(t, max_n=cap)})
    return {"extremal": found,
            "all_extremal_isomorphic_to_h": all(f["isomorphic_to_h"] for f in found),
            "h_missing_for": missing,
            "fibonacci": fib}


def cmd_probe(a) -> int:
    res = probe(a.max_n, a.fib_max)
    if a.json:
        _emit(res)
    else:
        print(f"extremal global amoebas with min degree 1, n <= {a.max_n}: {len(res['extremal'])}")
        for f in res["extremal"]:
            print(f"  n={f['n']} {f['graph6']} isomorphic to H_n: {_yn(f['isomorphic_to_h'])}")
        print(f"every one isomorphic to H_n: {_yn(res['all_extremal_isomorphic_to_h'])}")
        for f in res["fibonacci"]:
            print(f"  T_{f['i']} (n={f['n']}): local={_yn(f['is_local'])} global={_yn(f['is_global'])}")
    if res["h_missing_for"] or not all(f["is_global"] for f in res["fibonacci"]):
        print("internal inconsistency: a known global amoeba was not recognised", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="amoeba", description="Decide local and global amoeba graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def inputs(sp):
        sp.add_argument("inputs", nargs="+",
                        help="construction expression, graph6 string, edge-list/graph6 file, or '-'")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--max-n", type=int, default=None, help="size cap for group construction")

    sp = sub.add_parser("classify", help="local/global verdicts with evidence")
    inputs(sp)
    sp.add_argument("--witnesses", action="store_true", help="degree-decrement witnesses")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("construct", help="evaluate a construction expression")
    sp.add_argument("expression")
    sp.add_argument("--format", choices=("graph6", "edges", "json"), default="graph6")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("replacements", help="list feasible edge replacements")
    inputs(sp)
    sp.add_argument("--cosets", action="store_true", help="list every realising permutation")
    sp.set_defaults(func=cmd_replacements)

    sp = sub.add_parser("group", help="order, orbits and generators of the replacement group")
    inputs(sp)
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("oracle", help="brute-force copy reachability")
    inputs(sp)
    sp.add_argument("--host-order", type=int, default=None)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="classifier vs oracle on every graph of order n")
    sp.add_argument("n", type=int)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--allow-large", action="store_true", help="permit n = 6")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("bounds", help="extremal bound checks")
    inputs(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("probe-conjecture", help="search small graphs for extremal global amoebas")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--fib-max", type=int, default=6)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_probe)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "host_order", None) is not None and args.host_order < 1:
        print("error: --host-order must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except (InputError, ExpressionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
