"""Command-line front end.

Every subcommand is a thin adapter over one library call. Exit codes:
0 success or accepted, 1 rejected (a verification said no, a search found
nothing), 2 usage or input error.

Usage:
    topocode verify --kind graceful --graph p4.g --labeling f.json
    topocode matrix op --a A.m --b B.m --op union-sum --json
    topocode auth derive --graph h.g --labeling f.json --vo vo1 --out pub.bin
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .auth import KeyBundle, TransformSpec, authenticate, authenticate_vector, derive_bundle, load_bundles, save_bundles
from .config import Settings, load_settings
from .degseq import (
    DS_OPS,
    LATTICE_OPS,
    CdsMatrix,
    cds_add,
    cds_group,
    ds_lattice_sample,
    ds_transform,
    erdos_gallai,
    realize_brute,
)
from .errors import FormatError, PreconditionError, TopocodeError
from .formats import (
    graph_to_dict,
    labeling_to_dict,
    matrix_to_text,
    parse_sequence,
    read_graph,
    read_labeling,
    read_matrix,
    read_rows,
    to_dot,
)
from .graph import Graph
from .groups import build_group, classify_spanning_tree_groups, group_add, verify_group_laws
from .labelings import (
    EQUIVALENT_TARGETS,
    JOIN_MODES,
    SET_DUAL_VARIANTS,
    Labeling,
    VerificationReport,
    catalog,
    dual,
    equivalent_labeling,
    graceful_join,
    magic_dual,
    odd_elegant_from_graceful,
    reciprocal_transform,
    search_labeling,
    set_dual_transform,
    totally_kd_sequential,
    verify,
)
from .networks import LEAF_ALGORITHMS, SelfSimilarSpec
from .rla import (
    LeafPlan,
    rla_e_image,
    rla_kd_elegant,
    rla_kd_graceful_total,
    rla_kd_harmonious,
    rla_kd_odd_elegant,
    rla_odd_graceful,
    rla_strongly_edge_magic,
)
from .strings import pnbspp_solve, parse, tb_string, vo_string
from .topcode import (
    TopcodeMatrix,
    coincide,
    difference,
    dual_matrix,
    intersect,
    is_graphicable,
    realize,
    split,
    standard_form,
    subtract,
    tm_degree_sequence,
    union,
    union_sum,
)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


class _Failure(Exception):
    """Raised by a handler to end with a non-zero exit and a message."""

    def __init__(self, message: str, code: int = EXIT_REJECTED):
        super().__init__(message)
        self.code = code


# =============================================================================
# Output
# =============================================================================


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, payload: Any, text: Optional[str] = None) -> None:
        if self.as_json or text is None:
            self.stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _report_text(report: VerificationReport) -> str:
    lines = [f"{report.kind}: {'accepted' if report.accepted else 'rejected'}"]
    lines += [f"  violation: {v.condition} (witness {v.witness!r})" for v in report.violations]
    lines += [f"  {k} = {v!r}" for k, v in report.details.items()]
    return "\n".join(lines)


def _emit_report(out: Output, report: VerificationReport) -> int:
    out.emit(report.to_dict(), _report_text(report))
    return EXIT_OK if report.accepted else EXIT_REJECTED


def _emit_colored(out: Output, g: Graph, lab: Labeling) -> None:
    data = {"graph": graph_to_dict(g), "labeling": labeling_to_dict(g, lab)}
    text = f"vertex colors: {list(lab.vertex)}"
    if lab.edge is not None:
        text += f"\nedge colors:   {list(lab.edge)}"
    out.emit(data, text)


def _emit_matrix(out: Output, m: TopcodeMatrix) -> None:
    out.emit(m.to_dict(), matrix_to_text(m))


# =============================================================================
# Argument helpers
# =============================================================================


def _value(text: str) -> Any:
    try:
        return int(text)
    except ValueError:
        return text


def _params(items: Optional[Sequence[str]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise FormatError(f"parameters are key=value, got {item!r}")
        out[key] = _value(value)
    return out


def _json_file(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e.msg})") from e


def _graph_and_labeling(args) -> tuple[Graph, Labeling]:
    g = read_graph(args.graph)
    return g, read_labeling(args.labeling, g)


def _kd(args) -> dict[str, int]:
    return {"k": args.k, "d": args.d}


# =============================================================================
# Handlers
# =============================================================================


def cmd_verify(args, out: Output, settings: Settings) -> int:
    g, lab = _graph_and_labeling(args)
    return _emit_report(out, verify(g, lab, args.kind, **_params(args.param)))


def cmd_kinds(args, out: Output, settings: Settings) -> int:
    rows = catalog()
    out.emit([{"kind": t, "domain": d, "summary": s} for t, d, s in rows], "\n".join(f"{t:42} {d:7} {s}" for t, d, s in rows))
    return EXIT_OK


def cmd_search(args, out: Output, settings: Settings) -> int:
    g = read_graph(args.graph)
    budget = args.budget or settings.search_budget
    lab = search_labeling(g, args.kind, budget, **_params(args.param))
    if lab is None:
        raise _Failure(f"no {args.kind} labeling exists on this graph")
    _emit_colored(out, g, lab)
    return EXIT_OK


def cmd_transform(args, out: Output, settings: Settings) -> int:
    g, lab = _graph_and_labeling(args)
    op = args.op
    if op == "set-dual":
        result = set_dual_transform(g, lab, args.variant)
    elif op == "dual":
        result = dual(lab, args.part)
    elif op == "reciprocal":
        result = reciprocal_transform(g, lab, args.part if args.part != "all" else "X", args.edge_rule)
    elif op == "magic-dual":
        result = magic_dual(g, lab, args.family)
    elif op == "odd-elegant":
        result = odd_elegant_from_graceful(g, lab)
    elif op == "equivalent":
        if not args.target:
            raise PreconditionError("--target is required for equivalent")
        result = equivalent_labeling(g, lab, args.target, args.k, args.d)
    elif op == "totally-kd-sequential":
        result = totally_kd_sequential(g, lab, args.k, args.d)
    elif op == "join":
        if not (args.other_graph and args.other_labeling):
            raise PreconditionError("join needs --other-graph and --other-labeling")
        t = read_graph(args.other_graph)
        g, result = graceful_join(g, lab, t, read_labeling(args.other_labeling, t), args.mode)
    else:
        raise PreconditionError(f"unknown transform {op!r}")
    _emit_colored(out, g, result)
    return EXIT_OK


_MATRIX_BINARY: dict[str, Callable[[TopcodeMatrix, TopcodeMatrix], TopcodeMatrix]] = {
    "union-sum": union_sum,
    "union": union,
    "intersect": intersect,
    "subtract": subtract,
    "difference": difference,
}


def cmd_matrix(args, out: Output, settings: Settings) -> int:
    a = read_matrix(args.a)
    action = args.action
    if action == "op":
        if args.op == "coincide":
            _emit_matrix(out, coincide(a, read_matrix(args.b), read_matrix(args.h)))
        elif args.op == "split":
            left, right = split(a, read_matrix(args.h))
            out.emit({"left": left.to_dict(), "right": right.to_dict()}, matrix_to_text(left) + "\n" + matrix_to_text(right))
        else:
            if not args.b:
                raise PreconditionError(f"--b is required for {args.op}")
            _emit_matrix(out, _MATRIX_BINARY[args.op](a, read_matrix(args.b)))
    elif action == "standard":
        _emit_matrix(out, standard_form(a))
    elif action == "dual":
        _emit_matrix(out, dual_matrix(a, args.edge_rule))
    elif action == "check":
        ok = is_graphicable(a)
        ds = tm_degree_sequence(a)
        out.emit({"graphicable": ok, "degree_sequence": list(ds)}, f"graphicable: {ok}\ndegree sequence: {list(ds)}")
        return EXIT_OK if ok else EXIT_REJECTED
    elif action == "realize":
        r = realize(a)
        _emit_colored(out, r.graph, r.labeling)
    return EXIT_OK


def cmd_gen_string(args, out: Output, settings: Settings) -> int:
    if args.algo.startswith("vo") and args.algo[2:3].isdigit():
        s = vo_string(read_matrix(args.matrix), args.algo)
    else:
        s = tb_string(read_rows(args.matrix), args.algo)
    text = s.render(digits=args.digits)
    out.emit({"tokens": list(s.tokens), "digits": s.render(digits=True)}, text)
    return EXIT_OK


def cmd_pnbspp(args, out: Output, settings: Settings) -> int:
    target = read_matrix(args.target) if args.target else None
    mode = "match-target" if target is not None else "graphicable-any"
    found = pnbspp_solve(parse(args.string), args.q, mode, target, args.layout)
    out.emit([m.to_dict() for m in found], "\n".join(matrix_to_text(m) for m in found) or "no matrix")
    return EXIT_OK if found else EXIT_REJECTED


_RLA = {
    "odd-graceful": lambda g, f, plan, args: rla_odd_graceful(g, f, plan),
    "kd-harmonious": lambda g, f, plan, args: rla_kd_harmonious(g, f, plan, **_kd(args)),
    "kd-elegant": lambda g, f, plan, args: rla_kd_elegant(g, f, plan, **_kd(args)),
    "kd-odd-elegant": lambda g, f, plan, args: rla_kd_odd_elegant(g, f, plan, **_kd(args)),
    "kd-graceful-total": lambda g, f, plan, args: rla_kd_graceful_total(g, f, plan, **_kd(args)),
    "e-image": lambda g, f, plan, args: rla_e_image(g, f, plan, **_kd(args)),
    "strongly-edge-magic": lambda g, f, plan, args: rla_strongly_edge_magic(g, f, plan, **_kd(args)),
}


def cmd_rla(args, out: Output, settings: Settings) -> int:
    g, f = _graph_and_labeling(args)
    if args.plan:
        data = _json_file(args.plan)
        if not isinstance(data, dict):
            raise FormatError(f"{args.plan}: a leaf plan maps vertex to count")
        plan = LeafPlan({int(v): int(c) for v, c in data.items()})
    else:
        plan = LeafPlan.random(g, args.leaves, settings.seed)
    result = _RLA[args.algo](g, f, plan, args)
    if args.algo == "e-image":
        g2 = result.graph
        data = {
            "graph": graph_to_dict(g2),
            "labeling": labeling_to_dict(g2, result.labeling),
            "image": labeling_to_dict(g2, result.image),
            "constant": result.constant,
            "reflection": result.reflection,
        }
        out.emit(data, f"vertex colors: {list(result.labeling.vertex)}\nimage colors:  {list(result.image.vertex)}\nconstant: {result.constant}")
    else:
        _emit_colored(out, *result)
    return EXIT_OK


def cmd_degseq(args, out: Output, settings: Settings) -> int:
    action = args.action
    if action == "check":
        d = parse_sequence(args.sequence)
        ok = erdos_gallai(d)
        data: dict[str, Any] = {"sequence": list(d), "graphical": ok}
        if args.realize and ok:
            g = realize_brute(d)
            data["realization"] = graph_to_dict(g) if g is not None else None
        out.emit(data, f"graphical: {ok}")
        return EXIT_OK if ok else EXIT_REJECTED
    if action == "transform":
        other = parse_sequence(args.other) if args.other else None
        res = ds_transform(parse_sequence(args.sequence), args.op, other, **_params(args.arg))
        out.emit(res._asdict(), f"{list(res.sequence)} graphical: {res.graphical}")
        return EXIT_OK
    if action == "group":
        grp = cds_group(CdsMatrix(parse_sequence(args.degrees), parse_sequence(args.colors)), args.modulus)
        lam = cds_add(grp, args.i - 1, args.j - 1, args.zero - 1)
        out.emit({"index": lam + 1, "colors": list(grp.element(lam).colors)}, f"F_{args.i} + F_{args.j} (zero F_{args.zero}) = F_{lam + 1}")
        return EXIT_OK
    base = [parse_sequence(part) for part in args.base.split(";") if part.strip()]
    res = ds_lattice_sample(base, parse_sequence(args.coeffs), args.op, settings.seed)
    out.emit(res._asdict(), f"{list(res.sequence)} graphical: {res.graphical}")
    return EXIT_OK


def cmd_group(args, out: Output, settings: Settings) -> int:
    if args.action == "classify-kn":
        orbits = classify_spanning_tree_groups(args.n)
        data = [{"shape": o.shape, "degrees": list(o.degrees), "size": o.size,
                 "members": [list(map(list, t)) for t in o.members], "family": [list(map(list, t)) for t in o.family]}
                for o in orbits]
        out.emit(data, "\n".join(f"{o.shape:10} orbit size {o.size}" for o in orbits))
        return EXIT_OK
    g = read_graph(args.graph)
    grp = build_group(g, parse_sequence(args.colors), args.modulus, args.rule)
    if args.action == "build":
        report = verify_group_laws(grp)
        data = {f"F_{r + 1}": grp.matrix(r).to_dict() if g.q else list(grp.colors(r)) for r in range(grp.modulus)}
        data["laws"] = report.to_dict()
        text = "\n".join(f"F_{r + 1}:\n{matrix_to_text(grp.matrix(r))}" if g.q else f"F_{r + 1}: {list(grp.colors(r))}"
                         for r in range(grp.modulus))
        out.emit(data, text + "\n" + _report_text(report))
        return EXIT_OK if report.accepted else EXIT_REJECTED
    lam = group_add(grp, args.i - 1, args.j - 1, args.zero - 1)
    out.emit({"index": lam + 1}, f"F_{args.i} + F_{args.j} (zero F_{args.zero}) = F_{lam + 1}")
    return EXIT_OK


def cmd_selfsim(args, out: Output, settings: Settings) -> int:
    spec = SelfSimilarSpec(read_graph(args.base), args.t, args.root)
    tree, counts = LEAF_ALGORITHMS[args.algo](spec)
    data = {"counts": counts._asdict(), "matches_closed_form": counts.matches_closed_form}
    if args.emit_graph:
        data["graph"] = graph_to_dict(tree)
    text = f"vertices {counts.vertices}, edges {counts.edges}"
    if counts.closed_form_vertices is not None:
        text += f" (closed form {counts.closed_form_vertices}, {counts.closed_form_edges})"
    out.emit(data, text)
    return EXIT_OK


def _spec_or_matching(item: Any) -> Any:
    if isinstance(item, str):
        return item
    if isinstance(item, dict) and "matching" in item:
        return (str(item["matching"]), {k: v for k, v in item.items() if k != "matching"})
    return TransformSpec.from_dict(item)


def cmd_auth(args, out: Output, settings: Settings) -> int:
    if args.action == "derive":
        g, lab = _graph_and_labeling(args)
        bundle = derive_bundle(g, lab, args.vo, args.edge_rule)
        if args.out:
            save_bundles(args.out, [bundle], binary=str(args.out).endswith(".bin"))
            log.info("wrote bundle to %s", args.out)
        out.emit(bundle.to_dict(), bundle.string.render(digits=bundle.string.is_digit_form))
        return EXIT_OK
    pubs, privs = load_bundles(args.pub), load_bundles(args.priv)
    if args.action == "verify":
        spec = TransformSpec.from_dict(_json_file(args.spec)) if args.spec else TransformSpec.identity()
        return _emit_report(out, authenticate(_single(pubs, args.pub), _single(privs, args.priv), spec, limit=settings.brute_force_limit))
    ops_data = _json_file(args.ops)
    if not isinstance(ops_data, list):
        raise FormatError(f"{args.ops}: expected a list of operations")
    ops = [_spec_or_matching(item) for item in ops_data]
    report = authenticate_vector(pubs, privs, ops, chain=args.chain, max_workers=settings.max_workers, limit=settings.brute_force_limit)
    return _emit_report(out, report)


def _single(bundles: list[KeyBundle], path: str) -> KeyBundle:
    if len(bundles) != 1:
        raise FormatError(f"{path}: expected one bundle, found {len(bundles)}")
    return bundles[0]


def cmd_export_dot(args, out: Output, settings: Settings) -> int:
    g = read_graph(args.graph)
    lab = read_labeling(args.labeling, g) if args.labeling else None
    text = to_dot(g, lab)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.stream.write(text)
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topocode", description="Topological coding toolkit", allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized steps (overrides TOPOCODE_SEED)")
    parser.add_argument("-j", "--jobs", type=int, default=None, help="worker threads (overrides TOPOCODE_MAX_WORKERS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a labeling against a kind")
    p.add_argument("--kind", default=None, help="labeling kind (default: the kind stored in the labeling)")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kinds", help="list labeling kinds")
    p.set_defaults(func=cmd_kinds)

    p = sub.add_parser("search", help="search a small graph for a labeling")
    p.add_argument("--kind", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("transform", help="transform a labeling")
    p.add_argument("--op", required=True,
                   choices=["set-dual", "dual", "reciprocal", "magic-dual", "odd-elegant", "equivalent", "totally-kd-sequential", "join"])
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--variant", choices=SET_DUAL_VARIANTS, default="f_dual")
    p.add_argument("--part", default="all")
    p.add_argument("--edge-rule", default="keep")
    p.add_argument("--family", default=None)
    p.add_argument("--target", choices=EQUIVALENT_TARGETS, default=None)
    p.add_argument("--mode", choices=JOIN_MODES, default="bridge")
    p.add_argument("--other-graph", default=None)
    p.add_argument("--other-labeling", default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("matrix", help="Topcode-matrix algebra")
    p.add_argument("action", choices=["op", "standard", "dual", "check", "realize"])
    p.add_argument("--a", required=True)
    p.add_argument("--b", default=None)
    p.add_argument("--h", default=None, help="shared submatrix for coincide/split")
    p.add_argument("--op", choices=[*_MATRIX_BINARY, "coincide", "split"], default="union-sum")
    p.add_argument("--edge-rule", default="complement")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("gen-string", help="read a matrix into a number-based string")
    p.add_argument("--algo", default="vo1")
    p.add_argument("--matrix", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--digits", action="store_true", default=False)
    group.add_argument("--tokens", dest="digits", action="store_false")
    p.set_defaults(func=cmd_gen_string)

    p = sub.add_parser("pnbspp", help="cut a digit string into Topcode-matrices")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--string", required=True)
    p.add_argument("--target", default=None)
    p.add_argument("--layout", default="vo4")
    p.set_defaults(func=cmd_pnbspp)

    p = sub.add_parser("rla", help="extend a labeling over randomly added leaves")
    p.add_argument("--algo", required=True, choices=sorted(_RLA))
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--plan", default=None, help='JSON {"vertex": count}')
    p.add_argument("--leaves", type=int, default=1, help="random plan size when --plan is absent")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_rla)

    p = sub.add_parser("degseq", help="degree sequences")
    p.add_argument("action", choices=["check", "transform", "group", "lattice"])
    p.add_argument("--sequence", default="")
    p.add_argument("--realize", action="store_true")
    p.add_argument("--op", default=None, help=f"transform: one of {sorted(DS_OPS)}; lattice: one of {list(LATTICE_OPS)}")
    p.add_argument("--other", default=None)
    p.add_argument("--arg", action="append", metavar="KEY=VALUE")
    p.add_argument("--degrees", default="")
    p.add_argument("--colors", default="")
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--zero", type=int, default=1)
    p.add_argument("--base", default="", help="sequences separated by ';'")
    p.add_argument("--coeffs", default="")
    p.set_defaults(func=cmd_degseq)

    p = sub.add_parser("group", help="every-zero graphic groups")
    p.add_argument("action", choices=["build", "add", "classify-kn"])
    p.add_argument("--graph", default=None)
    p.add_argument("--colors", default="")
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--rule", default="plain-sum")
    p.add_argument("--i", type=int, default=1, help="1-based")
    p.add_argument("--j", type=int, default=1, help="1-based")
    p.add_argument("--zero", type=int, default=1, help="1-based")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("selfsim", help="self-similar trees by leaf algorithms")
    p.add_argument("--algo", required=True, choices=sorted(LEAF_ALGORITHMS))
    p.add_argument("--base", required=True)
    p.add_argument("--root", type=int, default=None)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--emit-graph", action="store_true")
    p.set_defaults(func=cmd_selfsim)

    p = sub.add_parser("auth", help="topological key bundles and authentication")
    p.add_argument("action", choices=["derive", "verify", "verify-vector"])
    p.add_argument("--graph", default=None)
    p.add_argument("--labeling", default=None)
    p.add_argument("--vo", default="vo1")
    p.add_argument("--edge-rule", default=None)
    p.add_argument("--out", default=None, help="bundle file; .bin writes msgpack frames")
    p.add_argument("--pub", default=None)
    p.add_argument("--priv", default=None)
    p.add_argument("--spec", default=None, help="transform spec JSON")
    p.add_argument("--ops", default=None, help="JSON list of transform specs or matchings")
    p.add_argument("--chain", action="store_true")
    p.set_defaults(func=cmd_auth)

    p = sub.add_parser("export-dot", help="write a graph as DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_dot)
    return parser


_REQUIRED = {
    ("group", "build"): ("graph", "modulus"),
    ("group", "add"): ("graph", "modulus"),
    ("auth", "derive"): ("graph", "labeling"),
    ("auth", "verify"): ("pub", "priv"),
    ("auth", "verify-vector"): ("pub", "priv", "ops"),
    ("degseq", "transform"): ("op",),
    ("degseq", "lattice"): ("op",),
}


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("topocode")
    root.handlers[:] = [handler]
    root.setLevel(level)


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """Parse ``argv``, dispatch, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    _setup_logging(args.verbose)

    out = Output(args.json, stdout)
    try:
        action = getattr(args, "action", None)
        for name in _REQUIRED.get((args.command, action), ()):
            if getattr(args, name) in (None, ""):
                raise PreconditionError(f"{args.command} {action} needs --{name}")
        settings = load_settings().override(seed=args.seed, max_workers=args.jobs)
        log.info("running %s with %s", args.command, settings)
        return args.func(args, out, settings)
    except _Failure as e:
        print(str(e), file=sys.stderr)
        return e.code
    except (TopocodeError, OSError, json.JSONDecodeError) as e:
        log.debug("command failed", exc_info=True)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
