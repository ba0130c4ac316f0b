"""hdgroup command line: check, convert, roundtrip, homotopy, smaps, pairings.

Exit codes: 0 all checks pass, 1 violations found, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .groups import GroupError
from .scenario import (KINDS, Scenario, ScenarioError, build, dumps, from_object, load,
                       max_order_default, serialize)
from .simplicial import Report

TOOL = f"hdgroup {__version__}"

# conventions a report depends on, keyed by structure kind
FLAGS = {
    "3xmod": ["liftings evaluated as inverses of the stored pairing tables "
              "(3CM8 commutator reversed, 3CM16 first factor inverted)",
              "M-equivariance rows skipped for lift_1_0, lift_0_2, lift_10_2, lift_20_1, lift_0_21"],
    "square": ["mapping cone boundary d1(x, y) = v(x) g(y)"],
    "cube": ["corner roles assigned from the nine constituent squares",
             "condition (3) evaluated with left actions throughout"],
}


class InputError(Exception):
    pass


def _report_doc(command: str, S: Optional[Scenario], reps: List[Report], summary: str,
                flags: List[str], seconds: float, extra: Optional[dict] = None) -> dict:
    checks, witnesses, notes = {}, [], []
    for r in reps:
        d = r.to_dict()
        for k, v in d["checks"].items():
            checks[f"{r.name}: {k}"] = v
        witnesses.extend([[r.name] + w for w in d["witnesses"]])
        notes.extend(d["notes"])
    doc = {"tool": TOOL, "command": command, "scenario": S.id if S else "",
           "ok": all(r.ok for r in reps), "checks": checks, "witnesses": witnesses,
           "notes": notes, "flags": flags, "summary": summary,
           "timing": {"seconds": round(seconds, 3)}}
    if extra:
        doc.update(extra)
    return doc


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        return
    if doc["command"] == "smaps":
        out.write("\n".join(doc["text"]) + "\n")
        return
    status = "PASS" if doc.get("ok", True) else "FAIL"
    out.write(f"{doc['tool']} {doc['command']} {doc['scenario']}: {status}\n")
    for k in sorted(doc.get("checks", {})):
        out.write(f"  {doc['checks'][k]}  {k}\n")
    for w in doc.get("witnesses", []):
        out.write(f"  witness: {w}\n")
    for f in doc.get("flags", []):
        out.write(f"  convention: {f}\n")
    for n in doc.get("notes", []):
        out.write(f"  note: {n}\n")
    for line in doc.get("text", []):
        out.write(line + "\n")
    if doc.get("summary"):
        out.write(f"  {doc['summary']}\n")


def _load(path: str, max_order: int) -> Scenario:
    try:
        return load(path, max_order)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except ScenarioError as e:
        raise InputError(str(e)) from None


def _build(S: Scenario):
    try:
        return build(S)
    except GroupError as e:
        raise InputError(str(e)) from None


def _check(S: Scenario, obj) -> List[Report]:
    from .cubes import check_crossed_3cube, check_crossed_square
    from .simplicial import check_simplicial
    from .structures import check_2crossed, check_3crossed, check_crossed_module
    fn = {"xmod": check_crossed_module, "2xmod": check_2crossed, "3xmod": check_3crossed,
          "simplicial": check_simplicial, "square": check_crossed_square,
          "cube": check_crossed_3cube}[S.kind]
    return [fn(obj)]


def cmd_check(args) -> tuple:
    S = _load(args.file, args.max_order)
    if args.structure and args.structure != S.kind:
        raise InputError(f"--structure {args.structure} but document holds {S.kind}")
    reps = _check(S, _build(S))
    ok = all(r.ok for r in reps)
    return S, reps, f"{S.kind} {'passes' if ok else 'fails'} all checks", FLAGS.get(S.kind, []), {}


def _to_3xmod(S: Scenario, obj, certified: Optional[int]):
    from .functors import to_three_crossed
    from .structures import from_2crossed, from_crossed_module
    if S.kind == "simplicial":
        return to_three_crossed(obj, certified_length=certified).three_crossed
    if S.kind == "xmod":
        return from_crossed_module(obj)
    if S.kind == "2xmod":
        return from_2crossed(obj)
    if S.kind == "3xmod":
        return obj
    raise InputError(f"cannot convert {S.kind} to 3xmod")


def cmd_convert(args) -> tuple:
    from .functors import to_simplicial
    S = _load(args.file, args.max_order)
    obj = _build(S)
    try:
        if args.to == "3xmod":
            out = _to_3xmod(S, obj, args.certified_length)
        elif S.kind == "square" and args.to == "2xmod":
            from .cubes import mapping_cone
            out = mapping_cone(obj)
        else:
            X = _to_3xmod(S, obj, args.certified_length)
            out = to_simplicial(X).simplicial
    except GroupError as e:
        if e.kind in ("InsufficientTruncation", "OrderCapExceeded"):
            raise InputError(str(e)) from None
        rep = Report(f"convert {S.id}")
        rep.record(e.kind, False, (str(e),))
        return S, [rep], f"conversion failed: {e.kind}", [], {}
    doc = from_object(out, f"{S.id}->{args.to}")
    text = serialize(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return S, [], f"wrote {args.to} document" + (f" to {args.output}" if args.output else ""), [], {}


def cmd_roundtrip(args) -> tuple:
    from .functors import roundtrip_check
    S = _load(args.file, args.max_order)
    obj = _build(S)
    X = _to_3xmod(S, obj, args.certified_length)
    try:
        rep = roundtrip_check(X)
    except GroupError as e:
        rep = Report(f"roundtrip {S.id}")
        rep.record(e.kind, False, (str(e),))
    summary = "tables identical" if rep.ok else "tables differ"
    return S, [rep], summary, FLAGS["3xmod"], {}


def cmd_homotopy(args) -> tuple:
    from .functors import homotopy_report, pi_prime, to_simplicial
    from .simplicial import homotopy_groups
    S = _load(args.file, args.max_order)
    obj = _build(S)
    if S.kind == "simplicial":
        T = obj
        X = _to_3xmod(S, obj, args.certified_length)
    else:
        X = _to_3xmod(S, obj, args.certified_length)
        T = to_simplicial(X).simplicial
    rep = homotopy_report(T, X)
    simp = homotopy_groups(T, certified_length=3)
    prime = pi_prime(X)
    rows = []
    lines = ["  topological  moore-numbered  |simplicial|  |from K->L->M->N|"]
    for i in range(4):
        a = simp[i].group.order if i < len(simp) else None
        rows.append({"pi_topological": i, "pi_moore_numbered": i + 1,
                     "simplicial_order": a, "crossed_order": prime[i].order})
        lines.append(f"  pi_{i:<10} pi_{i + 1:<13} {a!s:<13} {prime[i].order}")
    return S, [rep], "homotopy groups agree" if rep.ok else "homotopy groups differ", [], \
        {"table": rows, "text": lines}


def cmd_pairings(args) -> tuple:
    from .functors import extend_to_level4, to_simplicial
    from .pairings import closed_form_check, table1_check
    S = _load(args.file, args.max_order)
    obj = _build(S)
    if S.kind == "simplicial":
        T = obj
    else:
        T = to_simplicial(_to_3xmod(S, obj, args.certified_length)).simplicial
    reps = [closed_form_check(T, 2), closed_form_check(T, 3)]
    if T.k < 4:
        try:
            T = extend_to_level4(T)
        except GroupError as e:
            raise InputError(str(e)) from None
    reps.append(table1_check(T))
    ok = all(r.ok for r in reps)
    return S, reps, "pairing identities hold" if ok else "pairing identities fail", [], {}


def cmd_smaps(args) -> tuple:
    from .surj import fmt_pair, fmt_tuple, gen_P, gen_S
    n = args.n
    if n < 0:
        raise InputError("--n must be non-negative")
    S_n = gen_S(n)
    lines = [f"S({n}) = {{" + " < ".join(fmt_tuple(a, n) for a in S_n) + "}"]
    P_n = gen_P(n) if n >= 1 else ()
    lines.append(f"P({n}) = {{" + ", ".join(fmt_pair(p) for p in P_n) + "}")
    extra = {"S": [fmt_tuple(a, n) for a in S_n], "P": [fmt_pair(p) for p in P_n],
             "text": lines}
    return None, [], f"|S({n})| = {len(S_n)}, |P({n})| = {len(P_n)}", [], extra


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hdgroup", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=TOOL)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("json", "text"), default="text")
    common.add_argument("--max-order", type=int, default=None,
                        help="largest group order accepted (default HDGROUP_MAX_ORDER or 4096)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for axiom scans")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="run the checker for the document's structure")
    p.add_argument("file")
    p.add_argument("--structure", choices=KINDS)
    p.set_defaults(fn=cmd_check)
    p = sub.add_parser("convert", parents=[common], help="convert between simplicial and 3xmod")
    p.add_argument("file")
    p.add_argument("--to", choices=("3xmod", "simplicial", "2xmod"), required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--certified-length", type=int, default=None,
                   help="Moore length bound when level 4 is absent")
    p.set_defaults(fn=cmd_convert)
    for name, fn, hlp in (("roundtrip", cmd_roundtrip, "3xmod -> simplicial -> 3xmod"),
                          ("homotopy", cmd_homotopy, "homotopy groups both ways"),
                          ("pairings", cmd_pairings, "pairing closed forms and d4 images")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("file")
        p.add_argument("--certified-length", type=int, default=None)
        p.set_defaults(fn=fn)
    p = sub.add_parser("smaps", parents=[common], help="print S(n) and P(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_smaps)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    if args.max_order is None:
        args.max_order = max_order_default()
    from .structures import set_threads
    set_threads(args.threads)
    t0 = time.perf_counter()
    try:
        S, reps, summary, flags, extra = args.fn(args)
    except InputError as e:
        doc = {"tool": TOOL, "command": args.command, "scenario": "",
               "ok": False, "error": str(e), "timing": {"seconds": 0.0}}
        if args.emit == "json":
            out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        else:
            out.write(f"input error: {e}\n")
        return 2
    finally:
        set_threads(1)
    doc = _report_doc(args.command, S, reps, summary, flags, time.perf_counter() - t0, extra)
    if args.command == "convert" and not args.output and doc["ok"]:
        return 0
    _emit(doc, args.emit, out)
    return 0 if doc["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
