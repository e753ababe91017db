"""Command-line front end.

Every command prints one JSON report (``schema: 1``) with deterministic key
order, either to stdout or to ``--out``.  Exit codes: 0 for ok/yes answers,
1 for proven "no", 2 for inconclusive, 3 for errors.  The only environment
override is ``ORACLE_BUDGET`` (a vertex budget for the exponential oracles).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .fall import fall_p3p1_free
from .gadgets import family, verify_reduction
from .graphs import Colouring, Graph, analyze_tight, co_components, is_tight_b_colouring
from .io import (graph_digest, load_formula, load_graph, write_dimacs)
from .oracles import (DEFAULT_FALL_BUDGET, DEFAULT_NP_BUDGET, BudgetExceededError,
                      b_chromatic_number, chromatic_number, fall_spectrum,
                      min_maximal_matching_size, one_in_three_sat,
                      three_edge_colouring, tight_b_exact)
from .patterns import (classify_b, classify_fall, classify_tight,
                       contains_induced, is_free, pattern_graph)
from .tight import tight_b_2p2p1_free, tight_b_p3p1_free

EXIT_OK, EXIT_NO, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2, 3


def _budget(default: int) -> int:
    value = os.environ.get("ORACLE_BUDGET")
    return int(value) if value else default


def _witness(c: Colouring | None):
    return None if c is None else {"k": c.k, "colours": list(c.colours)}


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _report(command: str, path: str, g: Graph | None) -> dict:
    rep = {"schema": 1, "command": command, "input": path}
    if g is not None:
        rep["digest"] = graph_digest(g)
    return rep


def cmd_analyze(args) -> int:
    g = load_graph(args.path)
    info = analyze_tight(g)
    rep = _report("analyze", args.path, g)
    rep.update({
        "status": "ok",
        "n": g.n,
        "edges": g.edge_count(),
        "degrees": g.degrees(),
        "m_degree": info.m,
        "dense": sorted(info.dense),
        "boundary": sorted(info.boundary),
        "tight": info.is_tight,
        "co_components": [list(c) for c in co_components(g)],
    })
    _emit(rep, args.out)
    return EXIT_OK


def cmd_tightb(args) -> int:
    g = load_graph(args.path)
    info = analyze_tight(g)
    rep = _report("tightb", args.path, g)
    if not info.is_tight:
        rep.update({"status": "error", "error": "input graph is not tight",
                    "m_degree": info.m, "dense": sorted(info.dense)})
        _emit(rep, args.out)
        return EXIT_ERROR
    t0 = time.perf_counter()
    nodes = None
    if args.force_oracle:
        path_taken = "oracle"
        res = tight_b_exact(g, node_budget=args.budget)
        colouring, status = res.colouring, res.status
        nodes = res.nodes
    elif is_free(g, "2P2+P1"):
        path_taken = "(2P2+P1)-free"
        colouring = tight_b_2p2p1_free(g)
        status = "found" if colouring else "absent"
    elif is_free(g, "P3+P1"):
        path_taken = "(P3+P1)-free"
        colouring = tight_b_p3p1_free(g)
        status = "found" if colouring else "absent"
    else:
        path_taken = "oracle"
        res = tight_b_exact(g, node_budget=args.budget)
        colouring, status = res.colouring, res.status
        nodes = res.nodes
    rep.update({
        "path": path_taken,
        "m_degree": info.m,
        "timing_ms": round(1000 * (time.perf_counter() - t0), 3),
        "nodes": nodes,
        "witness": _witness(colouring),
        "status": {"found": "ok", "absent": "no", "inconclusive": "inconclusive"}[status],
    })
    if colouring is not None:
        assert is_tight_b_colouring(g, colouring)
    _emit(rep, args.out)
    return {"ok": EXIT_OK, "no": EXIT_NO, "inconclusive": EXIT_INCONCLUSIVE}[rep["status"]]


def cmd_fall(args) -> int:
    g = load_graph(args.path)
    rep = _report("fall", args.path, g)
    t0 = time.perf_counter()
    if not args.force_oracle and is_free(g, "P3+P1"):
        rep["path"] = "(P3+P1)-free"
        spectrum = fall_p3p1_free(g).spectrum
    else:
        rep["path"] = "oracle"
        spectrum = fall_spectrum(g, budget=_budget(DEFAULT_FALL_BUDGET))
    values = list(spectrum.values)
    rep.update({
        "status": "ok" if values else "no",
        "spectrum": values,
        "fall_chromatic": values[0] if values else 0,
        "fall_achromatic": values[-1] if values else 0,
        "fall_unique": len(values) == 1,
        "witnesses": {str(k): _witness(c) for k, c in sorted(spectrum.witnesses.items())},
        "timing_ms": round(1000 * (time.perf_counter() - t0), 3),
    })
    _emit(rep, args.out)
    return EXIT_OK if values else EXIT_NO


def cmd_classify(args) -> int:
    h = load_graph(args.path)
    verdicts = {"b": classify_b, "tightb": classify_tight, "fall": classify_fall}
    v = verdicts[args.problem](h)
    rep = _report("classify", args.path, h)
    rep.update({"status": "ok", "problem": args.problem, "verdict": v.verdict.value,
                "reason": v.reason, "family": v.family})
    _emit(rep, args.out)
    return EXIT_OK


def cmd_hfree(args) -> int:
    g = load_graph(args.path)
    witness = contains_induced(g, pattern_graph(args.pattern))
    rep = _report("hfree", args.path, g)
    rep.update({"status": "ok", "pattern": args.pattern, "free": witness is None,
                "witness": list(witness) if witness else None})
    _emit(rep, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    rep = {"schema": 1, "command": f"oracle {args.which}", "input": args.path}
    t0 = time.perf_counter()
    status, value, witness, nodes = "ok", None, None, None
    if args.which == "13sat":
        f = load_formula(args.path)
        assignment = one_in_three_sat(f)
        value = assignment is not None
        witness = list(assignment) if assignment else None
        status = "ok" if assignment else "no"
    else:
        g = load_graph(args.path)
        rep["digest"] = graph_digest(g)
        budget = _budget(DEFAULT_NP_BUDGET)
        if args.which == "chromatic":
            value, col = chromatic_number(g, budget=budget)
            witness = _witness(col)
        elif args.which == "bchromatic":
            value, col = b_chromatic_number(g, budget=budget)
            witness = _witness(col)
        elif args.which == "tightb":
            res = tight_b_exact(g, node_budget=args.budget)
            status = {"found": "ok", "absent": "no", "inconclusive": "inconclusive"}[res.status]
            value = res.status == "found"
            witness, nodes = _witness(res.colouring), res.nodes
        elif args.which == "fall":
            spectrum = fall_spectrum(g, budget=_budget(DEFAULT_FALL_BUDGET))
            value = list(spectrum.values)
            witness = {str(k): _witness(c) for k, c in sorted(spectrum.witnesses.items())}
            status = "ok" if value else "no"
        elif args.which == "edge3col":
            ec = three_edge_colouring(g, budget=budget)
            value = ec is not None
            witness = {f"{u},{v}": c for (u, v), c in sorted(ec.items())} if ec else None
            status = "ok" if ec else "no"
        elif args.which == "mmm":
            value = min_maximal_matching_size(g, budget=budget)
    rep.update({"status": status, "value": value, "witness": witness,
                "nodes_explored": nodes,
                "timing_ms": round(1000 * (time.perf_counter() - t0), 3)})
    _emit(rep, args.out)
    return {"ok": EXIT_OK, "no": EXIT_NO, "inconclusive": EXIT_INCONCLUSIVE}[status]


_GADGET_KINDS = ("cobipartite", "edge3col", "edge3col-3p2", "edge3col-2p3", "one-in-three")


def _load_reduction_source(kind: str, path: str):
    return load_formula(path) if kind == "one-in-three" else load_graph(path)


def cmd_gadget(args) -> int:
    source = _load_reduction_source(args.kind, args.path)
    cert = verify_reduction(args.kind, source, backward=False)
    out_prefix = args.out_prefix or "gadget"
    col_path = Path(f"{out_prefix}.col")
    col_path.write_text(write_dimacs(cert.instance))
    rep = {
        "schema": 1, "command": f"gadget {args.kind}", "input": args.path,
        "status": "ok" if cert.structurally_sound() else "error",
        "instance": str(col_path), "digest": graph_digest(cert.instance),
        "n": cert.instance.n, "edges": cert.instance.edge_count(),
        "structural_checks": {name: ok for name, ok in cert.structural_checks},
        "forward": cert.forward_note, "forward_witness": _witness(cert.forward_witness),
    }
    Path(f"{out_prefix}.json").write_text(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    _emit(rep, None)
    return EXIT_OK if rep["status"] == "ok" else EXIT_ERROR


def cmd_verify(args) -> int:
    source = _load_reduction_source(args.kind, args.path)
    cert = verify_reduction(args.kind, source, node_budget=args.budget)
    rep = {
        "schema": 1, "command": f"verify {args.kind}", "input": args.path,
        "digest": graph_digest(cert.instance),
        "structural_checks": {name: ok for name, ok in cert.structural_checks},
        "forward": cert.forward_note, "backward": cert.backward_note,
        "forward_witness": _witness(cert.forward_witness),
        "measurements": cert.measurements,
        "equivalence": cert.equivalence_status,
        "inconsistent": cert.inconsistent,
        "status": "error" if (cert.inconsistent or not cert.structurally_sound())
                  else ("inconclusive" if cert.equivalence_status == "inconclusive" else "ok"),
    }
    _emit(rep, args.out)
    return {"ok": EXIT_OK, "inconclusive": EXIT_INCONCLUSIVE, "error": EXIT_ERROR}[rep["status"]]


def cmd_show(args) -> int:
    g = family(args.name, args.n)
    sys.stdout.write(write_dimacs(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bchromatic",
                                description="exact b-, tight b- and fall colouring toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    sp = sub.add_parser("analyze", help="m-degree, dense set, boundary, tightness, co-components")
    sp.add_argument("path")
    common(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("tightb", help="tight b-colouring (class dispatch, oracle fallback)")
    sp.add_argument("path")
    sp.add_argument("--force-oracle", action="store_true")
    sp.add_argument("--budget", type=int, default=10**7, help="oracle node budget")
    common(sp)
    sp.set_defaults(fn=cmd_tightb)

    sp = sub.add_parser("fall", help="fall spectrum (polynomial class or oracle)")
    sp.add_argument("path")
    sp.add_argument("--force-oracle", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_fall)

    sp = sub.add_parser("classify", help="complexity verdict for H-free inputs, H given as a graph file")
    sp.add_argument("path")
    sp.add_argument("--problem", choices=("b", "tightb", "fall"), required=True)
    common(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("hfree", help="induced-pattern check")
    sp.add_argument("path")
    sp.add_argument("--pattern", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_hfree)

    sp = sub.add_parser("oracle", help="exact exponential solvers")
    sp.add_argument("which", choices=("chromatic", "bchromatic", "tightb", "fall",
                                      "edge3col", "13sat", "mmm"))
    sp.add_argument("path")
    sp.add_argument("--budget", type=int, default=10**7, help="node budget for tightb")
    common(sp)
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("gadget", help="emit a hardness instance as DIMACS plus a JSON certificate")
    sp.add_argument("kind", choices=_GADGET_KINDS)
    sp.add_argument("path")
    sp.add_argument("--out", dest="out_prefix",
                    help="output prefix (writes PREFIX.col and PREFIX.json)")
    sp.set_defaults(fn=cmd_gadget)

    sp = sub.add_parser("verify", help="re-run structural checks and both oracle directions")
    sp.add_argument("kind", choices=_GADGET_KINDS)
    sp.add_argument("path")
    sp.add_argument("--budget", type=int, default=10**7, help="backward-solve node budget")
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("show", help="print a named family graph as DIMACS")
    sp.add_argument("name")
    sp.add_argument("n", type=int, nargs="?", default=0)
    sp.set_defaults(fn=cmd_show)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        _emit({"schema": 1, "status": "error", "error": str(exc)}, getattr(args, "out", None))
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        _emit({"schema": 1, "status": "error", "error": str(exc)}, getattr(args, "out", None))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
