"""Command-line interface: generate the construction families, emit and
check CNF instances, compute invariants and stability on DIMACS graphs,
inspect critical structure, and run the verification suites.

Exit codes: 0 success / all claims pass, 1 claim or certificate failure,
2 usage or parse error, 3 inconclusive (budget exhausted or undecided).

JSON reports carry a schema_version field and are emitted with sorted keys
so identical inputs produce byte-identical output; no timing fields appear
outside verify results.
"""

import argparse
import json
import sys
from pathlib import Path

from .constructions import construct_c5blowup, construct_constr1, construct_prop31
from .critical import critical_union_report, find_critical_subgraph, vs_ivs_pipeline
from .graph import read_dimacs_graph, vset_list, write_dimacs_graph, write_dot
from .invariants import Budget, BudgetExceededError, summarize
from .sat import (
    SAT_VARIABLE_LIMIT,
    augmented_independence_graph,
    gen_unsat_family,
    independence_graph,
    is_satisfiable,
    read_dimacs_cnf,
    stability_certificates,
    validate_plit_qsat,
    write_dimacs_cnf,
)
from .stability import stability_report
from .verify import SUITE_NAMES, run_suite

SCHEMA_VERSION = "1"


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_config(path):
    """Plain key=value lines; '#' starts a comment. Only node_budget is a
    recognized key; anything else is rejected rather than ignored."""
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key = key.strip()
        if key != "node_budget":
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            cfg[key] = int(value.strip())
        except ValueError:
            raise ValueError(f"config line {lineno}: node_budget must be an integer")
    return cfg


def _make_budget(args, cfg):
    limit = getattr(args, "budget", None)
    if limit is None:
        limit = cfg.get("node_budget")
    return Budget(limit) if limit is not None else Budget()


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like A..B, got {text!r}")
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _write_text(path, text):
    Path(path).write_text(text)


def _meta_sidecar(g, meta):
    return {
        "schema_version": SCHEMA_VERSION,
        "family": meta.family,
        "params": dict(meta.params),
        "expected": dict(meta.expected),
        "n": g.n,
        "m": g.m,
    }


def _cmd_gen(args, cfg):
    wanted = {"prop31": ("chi", "copies"), "constr1": ("delta",), "c5blowup": ("k",)}
    for name in ("chi", "copies", "delta", "k"):
        if getattr(args, name) is not None and name not in wanted[args.family]:
            raise ValueError(f"--{name} is not a {args.family} parameter")
    if args.family == "prop31":
        if args.chi is None:
            raise ValueError("gen prop31 requires --chi")
        g, meta = construct_prop31(args.chi, copies=args.copies)
    elif args.family == "constr1":
        if args.delta is None:
            raise ValueError("gen constr1 requires --delta")
        g, meta = construct_constr1(args.delta)
    else:
        if args.k is None:
            raise ValueError("gen c5blowup requires --k")
        g, meta = construct_c5blowup(args.k)

    dimacs = write_dimacs_graph(g)
    if args.out:
        _write_text(args.out, dimacs)
        meta_path = args.meta or args.out + ".meta.json"
        _write_text(meta_path, _dump_json(_meta_sidecar(g, meta)))
    else:
        sys.stdout.write(dimacs)
        if args.meta:
            _write_text(args.meta, _dump_json(_meta_sidecar(g, meta)))
    if args.dot:
        _write_text(args.dot, write_dot(g))
    return 0


def _sat_expected(inst):
    m = inst.meta["m"]
    full = inst.meta["level"] == inst.meta["r"]
    expected = {"satisfiable": False}
    if full:
        expected["chi_independence_graph"] = 2 * m
    return expected


def _cmd_sat_gen(args, cfg):
    inst = gen_unsat_family(args.m, args.level)
    cnf = write_dimacs_cnf(inst)
    sidecar = {
        "schema_version": SCHEMA_VERSION,
        "family": "sat_unsat_family",
        "params": dict(inst.meta),
        "expected": _sat_expected(inst),
        "variables": inst.variable_count,
        "clauses": len(inst.clauses),
    }
    if args.cnf:
        _write_text(args.cnf, cnf)
        _write_text(args.cnf + ".meta.json", _dump_json(sidecar))
    if args.graph:
        if args.graph == "plain":
            g, _ = independence_graph(inst)
        else:
            g, _ = augmented_independence_graph(inst)
        dimacs = write_dimacs_graph(g)
        if args.out:
            _write_text(args.out, dimacs)
            gmeta = dict(sidecar, family=f"sat_independence_graph_{args.graph}",
                         n=g.n, m=g.m)
            _write_text(args.out + ".meta.json", _dump_json(gmeta))
        else:
            sys.stdout.write(dimacs)
    elif not args.cnf:
        sys.stdout.write(cnf)
    return 0


def _cmd_sat_check(args, cfg):
    inst = read_dimacs_cnf(Path(args.file).read_text())
    report = {
        "schema_version": SCHEMA_VERSION,
        "variables": inst.variable_count,
        "clauses": len(inst.clauses),
    }
    code = 0
    if (args.plit is None) != (args.qsat is None):
        raise ValueError("--plit and --qsat must be given together")
    if args.plit is not None:
        res = validate_plit_qsat(inst, args.plit, args.qsat)
        report["valid"] = bool(res)
        report["violation"] = res.violation
        if not res:
            code = 1
    if inst.variable_count <= SAT_VARIABLE_LIMIT:
        assignment = is_satisfiable(inst)
        report["satisfiable"] = assignment is not None
        report["assignment"] = list(assignment) if assignment is not None else None
    else:
        report["satisfiable"] = "undecided"
        report["assignment"] = None
        if code == 0:
            code = 3
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        for key in ("variables", "clauses", "valid", "violation", "satisfiable"):
            if key in report:
                print(f"{key} = {report[key]}")
        if report["assignment"] is not None:
            print("assignment =", report["assignment"])
    return code


def _cmd_sat_certify(args, cfg):
    inst = gen_unsat_family(args.m)
    budget = _make_budget(args, cfg)
    try:
        cert = stability_certificates(inst, args.m, budget)
    except BudgetExceededError:
        raise
    except RuntimeError as exc:
        print(f"certificate failure: {exc}", file=sys.stderr)
        return 1
    cert = dict(cert)
    cert["schema_version"] = SCHEMA_VERSION
    if args.json:
        sys.stdout.write(_dump_json(cert))
    else:
        for key in ("m", "clause_count", "chi", "omega", "vs_chi", "vs_omega",
                    "ivs_omega_exceeds", "extension_colors_used"):
            print(f"{key} = {cert[key]}")
        print("removal_set =", list(cert["removal_set"]))
        print("disjoint_cliques =", [list(q) for q in cert["disjoint_cliques"]])
    return 0


def _stability_entry(rep):
    entry = {}
    for value, witness, vkey, wkey in (
        (rep.value, rep.witness, "vs", "vs_witness"),
        (rep.independent_value, rep.independent_witness, "ivs", "ivs_witness"),
    ):
        if value is not None:
            entry[vkey] = value
            entry[wkey] = list(witness)
        elif rep.exhausted:
            entry[vkey] = "nonexistent"
            entry[wkey] = None
        else:
            entry[vkey] = "inconclusive"
            entry[wkey] = None
    return entry


def _cmd_invariants(args, cfg):
    g = read_dimacs_graph(Path(args.file).read_text())
    budget = _make_budget(args, cfg)
    summary = summarize(g, budget)
    report = {
        "schema_version": SCHEMA_VERSION,
        "n": summary.n,
        "m": summary.m,
        "delta": summary.delta,
        "chi": summary.chi,
        "omega": summary.omega,
        "witness_clique": sorted(vset_list(summary.witness_clique)),
        "witness_coloring": list(summary.witness_coloring.colors),
    }
    code = 0
    if args.stability:
        params = [p.strip() for p in args.stability.split(",") if p.strip()]
        for p in params:
            if p not in ("chi", "omega"):
                raise ValueError(f"unknown stability parameter {p!r}")
        report["stability"] = {}
        for p in params:
            try:
                rep = stability_report(g, p, budget)
            except BudgetExceededError:
                report["stability"][p] = {"vs": "inconclusive", "ivs": "inconclusive"}
                code = 3
                continue
            report["stability"][p] = _stability_entry(rep)
            if not rep.exhausted:
                code = 3
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        for key in ("n", "m", "delta", "chi", "omega"):
            print(f"{key} = {report[key]}")
        print("witness_clique =", report["witness_clique"])
        for p, entry in report.get("stability", {}).items():
            print(f"stability {p}: vs = {entry['vs']}, witness = {entry.get('vs_witness')}, "
                  f"ivs = {entry['ivs']}, witness = {entry.get('ivs_witness')}")
    return code


def _cmd_critical(args, cfg):
    g = read_dimacs_graph(Path(args.file).read_text())
    budget = _make_budget(args, cfg)
    report = {"schema_version": SCHEMA_VERSION}
    if args.enumerate:
        rep = critical_union_report(g, max_order=args.max_order, budget=budget)
        report["chi"] = rep.chi
        report["critical_subgraphs"] = [sorted(vset_list(s)) for s in rep.critical_subgraphs]
        report["union_components"] = [sorted(vset_list(c)) for c in rep.union_components]
        report["k_delta"] = rep.k_delta
        report["bound_satisfied"] = list(rep.bound_satisfied)
    if args.pipeline:
        out = vs_ivs_pipeline(g, budget)
        report["certificate"] = out["certificate"]
        report["trace"] = out["trace"]
    if not args.enumerate and not args.pipeline:
        report["critical_subgraph"] = sorted(vset_list(find_critical_subgraph(g, budget)))
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        for key, value in report.items():
            if key != "schema_version":
                print(f"{key} = {value}")
    return 0


_SUITE_KWARGS = {
    "prop31": ("chi_range",),
    "constr1": ("delta_range",),
    "c5blowup": ("k_range",),
    "sat": ("m_range",),
    "fbounds": ("delta_range",),
    "akbari": ("count",),
    "king": ("count",),
    "all": (),
}

_FLAG_TO_KWARG = {
    "chi_range": "chi_range",
    "delta_range": "delta_range",
    "k_range": "k_range",
    "m_range": "m_range",
    "count": "count",
}


def _cmd_verify(args, cfg):
    allowed = _SUITE_KWARGS[args.suite]
    kwargs = {}
    for flag, kwarg in _FLAG_TO_KWARG.items():
        value = getattr(args, flag)
        if value is None:
            continue
        if kwarg not in allowed:
            raise ValueError(f"--{flag.replace('_', '-')} does not apply to suite {args.suite!r}")
        kwargs[kwarg] = _parse_range(value) if kwarg.endswith("_range") else value
    results = run_suite(args.suite, **kwargs)
    npass = sum(1 for r in results if r.status == "pass")
    nfail = sum(1 for r in results if r.status == "fail")
    ninc = len(results) - npass - nfail
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "suite": args.suite,
            "results": [
                {
                    "claim_id": r.claim_id,
                    "status": r.status,
                    "computed": r.computed,
                    "expected": r.expected,
                    "runtime_ms": r.runtime_ms,
                }
                for r in results
            ],
            "summary": {"pass": npass, "fail": nfail, "inconclusive": ninc},
        }
        sys.stdout.write(_dump_json(payload))
    else:
        for r in results:
            print(f"{r.status.upper():12s} {r.claim_id:34s} computed={r.computed!r} "
                  f"expected={r.expected!r} ({r.runtime_ms} ms)")
        print(f"{len(results)} claims: {npass} pass, {nfail} fail, {ninc} inconclusive")
    if nfail:
        return 1
    if ninc:
        return 3
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="vstab",
        description="vertex stability invariants, extremal constructions, and claim verification",
    )
    parser.add_argument("--config", help="key=value config file (node_budget=N); flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a construction family graph")
    p_gen.add_argument("family", choices=("prop31", "constr1", "c5blowup"))
    p_gen.add_argument("--chi", type=int)
    p_gen.add_argument("--copies", type=int)
    p_gen.add_argument("--delta", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--out", help="DIMACS graph output path (default: stdout)")
    p_gen.add_argument("--dot", help="DOT output path")
    p_gen.add_argument("--meta", help="JSON meta sidecar path (default: <out>.meta.json)")
    p_gen.set_defaults(handler=_cmd_gen)

    p_sat = sub.add_parser("sat", help="unsatisfiable family, CNF checking, certificates")
    sat_sub = p_sat.add_subparsers(dest="sat_command", required=True)

    p_sgen = sat_sub.add_parser("gen", help="generate the unsatisfiable family")
    p_sgen.add_argument("--m", type=int, required=True)
    p_sgen.add_argument("--level", type=int)
    p_sgen.add_argument("--cnf", help="DIMACS CNF output path")
    p_sgen.add_argument("--graph", choices=("plain", "augmented"),
                        help="emit the clause-literal independence graph instead")
    p_sgen.add_argument("--out", help="DIMACS graph output path for --graph")
    p_sgen.set_defaults(handler=_cmd_sat_gen)

    p_scheck = sat_sub.add_parser("check", help="parse, validate, and decide a CNF file")
    p_scheck.add_argument("file")
    p_scheck.add_argument("--plit", type=int, help="occurrence cap p to validate")
    p_scheck.add_argument("--qsat", type=int, help="clause width q to validate")
    p_scheck.add_argument("--json", action="store_true")
    p_scheck.set_defaults(handler=_cmd_sat_check)

    p_scert = sat_sub.add_parser("certify", help="stability certificates for the family")
    p_scert.add_argument("--m", type=int, required=True)
    p_scert.add_argument("--budget", type=int)
    p_scert.add_argument("--json", action="store_true")
    p_scert.set_defaults(handler=_cmd_sat_certify)

    p_inv = sub.add_parser("invariants", help="invariants of a DIMACS graph")
    p_inv.add_argument("file")
    p_inv.add_argument("--stability", help="comma list of parameters: chi,omega")
    p_inv.add_argument("--budget", type=int)
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(handler=_cmd_invariants)

    p_crit = sub.add_parser("critical", help="critical subgraph structure")
    p_crit.add_argument("file")
    p_crit.add_argument("--enumerate", action="store_true",
                        help="enumerate critical subgraphs and report the union")
    p_crit.add_argument("--max-order", type=int, dest="max_order")
    p_crit.add_argument("--pipeline", action="store_true",
                        help="run the equal-stability certificate pipeline")
    p_crit.add_argument("--budget", type=int)
    p_crit.add_argument("--json", action="store_true")
    p_crit.set_defaults(handler=_cmd_critical)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_ver.add_argument("--chi-range", dest="chi_range", help="A..B")
    p_ver.add_argument("--delta-range", dest="delta_range", help="A..B")
    p_ver.add_argument("--k-range", dest="k_range", help="A..B")
    p_ver.add_argument("--m-range", dest="m_range", help="A..B")
    p_ver.add_argument("--count", type=int, help="random-corpus size (akbari, king)")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config) if args.config else {}
        return args.handler(args, cfg)
    except BudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
