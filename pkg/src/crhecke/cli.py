"""
Command-line entry point.

    crhecke group info --spec g4
    crhecke hecke table|mul|commutator --spec g4 --basis sts ...
    crhecke dcoset-graph --spec 'g(4,1,2)' --gen s --format dot
    crhecke centralizer --spec g4 --gen s --basis sts --format md
    crhecke centre --spec 'g(4,1,2)'
    crhecke specialize --spec g4 sts s
    crhecke verify-paper --suite g4

Exit status: 0 on success, 1 when a verification or computation fails, 2 on
a usage error.  Output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from .basis import ReducedBasis, get_basis
from .centre import CentralizerResult, centralizer_basis, minimal_distinguished
from .cosetgraph import build_graph, emit_dot, graph_to_json, transitive_reduction
from .element import HeckeElement
from .golden import SUITES, format_report, printed_distinguished, summary_counts, verify_suite
from .groups import GroupData, GroupSpec, get_group, parse_group_spec
from .hecke import commutator, h_mul
from .linalg import PivotError
from .words import parse_word, tex_word

log = logging.getLogger("crhecke")

FORMATS = ("json", "md", "dot", "tex")
BASIS_ALIASES = {"sts": "g4-sts", "tst": "g4-tst", "g4-sts": "g4-sts", "g4-tst": "g4-tst", "bm": "bm"}


class UsageError(Exception):
    """Bad flag value; reported with the flag name and exit status 2."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class VerificationFailed(Exception):
    pass


# -- argument helpers ---------------------------------------------------


def _spec(args) -> GroupSpec:
    try:
        return parse_group_spec(args.spec)
    except ValueError as exc:
        raise UsageError("--spec", str(exc)) from None


def _group(args) -> GroupData:
    return get_group(_spec(args))


def _basis(args) -> ReducedBasis:
    spec = _spec(args)
    name = args.basis
    if name is None:
        if spec.kind == "G4":
            name = "sts"
        elif spec.n == 2:
            name = "bm"
        else:
            raise UsageError("--spec", f"no reduced basis is implemented for {spec}; only G4 and G(r,1,2)")
    scheme = BASIS_ALIASES.get(name.lower())
    if scheme is None:
        raise UsageError("--basis", f"unknown basis {name!r}; choose from sts, tst, bm")
    try:
        return get_basis(spec, scheme)
    except ValueError as exc:
        raise UsageError("--basis", str(exc)) from None


def _gens(args, gd: GroupData) -> List[str]:
    gens = [g for g in args.gen.split(",") if g] if args.gen else list(gd.gen_names)
    for g in gens:
        if g not in gd.gen_ids:
            raise UsageError("--gen", f"unknown generator {g!r}; the generators are {', '.join(gd.gen_names)}")
    return sorted(set(gens), key=gd.gen_names.index)


def _word(basis: ReducedBasis, text: str, flag: str):
    try:
        return parse_word(text, basis.group.gen_names)
    except ValueError as exc:
        raise UsageError(flag, str(exc)) from None


def _format(args, allowed: Sequence[str]) -> str:
    if args.format not in allowed:
        raise UsageError("--format", f"{args.format!r} is not available here; choose from {', '.join(allowed)}")
    return args.format


def _product(basis: ReducedBasis, words: Sequence[str]) -> HeckeElement:
    out = HeckeElement.basis_element(basis, basis.group.identity)
    for w in words:
        out = h_mul(out, basis.straighten(_word(basis, w, "WORD")))
    return out


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _element_out(x: HeckeElement, fmt: str) -> str:
    if fmt == "json":
        return _dumps(x.to_json())
    if fmt == "tex":
        return x.to_tex() + "\n"
    return f"`{x}`\n"


# -- subcommands --------------------------------------------------------


def cmd_group_info(args) -> str:
    fmt = _format(args, ("json", "md"))
    gd = _group(args)
    classes = sorted(gd.j_conjugacy_classes(), key=lambda c: (min(gd.length(x) for x in c), sorted(c)))
    name = lambda x: gd.word_str(x)  # noqa: E731
    info = {
        "group": str(gd.spec),
        "order": gd.order,
        "generators": {g: gd.gen_orders[g] for g in gd.gen_names},
        "conjugacy_classes": [sorted((name(x) for x in c), key=lambda w: (len(w), w)) for c in classes],
        "centre": sorted(name(x) for x in gd.centre()),
        "double_cosets": {
            g: [{"rep": name(c.rep), "kind": c.kind, "size": len(c.members)} for c in gd.double_cosets(g)]
            for g in gd.gen_names
        },
    }
    if fmt == "json":
        return _dumps(info)
    lines = [
        f"# {info['group']}",
        "",
        f"- order: {info['order']}",
        "- generators: " + ", ".join(f"{g} (order {m})" for g, m in info["generators"].items()),
        f"- conjugacy classes: {len(classes)}",
        "- centre: {" + ", ".join(info["centre"]) + "}",
        "",
        "| # | size | members |",
        "|---|---|---|",
    ]
    for k, c in enumerate(info["conjugacy_classes"], 1):
        lines.append(f"| {k} | {len(c)} | {', '.join(c)} |")
    for g, cosets in info["double_cosets"].items():
        lines += ["", f"## <{g}>-<{g}> double cosets", "", "| rep | kind | size |", "|---|---|---|"]
        lines += [f"| {c['rep']} | {c['kind']} | {c['size']} |" for c in cosets]
    return "\n".join(lines) + "\n"


def cmd_hecke_table(args) -> str:
    fmt = _format(args, ("json", "md", "tex"))
    basis = _basis(args)
    tab = basis.table
    if fmt == "json":
        return _dumps({"basis": basis.name, "params": list(basis.params.names), **tab.to_json()})
    rows = []
    for x in basis.sorted_ids():
        for g in basis.group.gen_names:
            right = HeckeElement(basis, tab.right[x][g])
            left = HeckeElement(basis, tab.left[x][g])
            rows.append((x, g, right, left))
    if fmt == "md":
        lines = [f"# Multiplication table, basis {basis.name}", "", "| w | g | T_w T_g | T_g T_w |", "|---|---|---|---|"]
        lines += [f"| {basis.word_str(x)} | {g} | `{r}` | `{l}` |" for x, g, r, l in rows]
        return "\n".join(lines) + "\n"
    lines = [r"\begin{longtable}{llll}", r"$w$ & $g$ & ${\tilde T}_w{\tilde T}_g$ & ${\tilde T}_g{\tilde T}_w$\\"]
    for x, g, r, l in rows:
        lines.append(f"${tex_word(basis.word(x))}$ & ${g}$ & ${r.to_tex()}$ & ${l.to_tex()}$\\\\")
    lines.append(r"\end{longtable}")
    return "\n".join(lines) + "\n"


def cmd_hecke_mul(args) -> str:
    fmt = _format(args, ("json", "md", "tex"))
    basis = _basis(args)
    return _element_out(_product(basis, args.words), fmt)


def cmd_hecke_commutator(args) -> str:
    fmt = _format(args, ("json", "md", "tex"))
    basis = _basis(args)
    gens = _gens(args, basis.group)
    x = _product(basis, args.words)
    if fmt == "json":
        return _dumps({g: commutator(x, g).to_json() for g in gens})
    return "".join(f"[{g}] " + _element_out(commutator(x, g), fmt) for g in gens)


def cmd_dcoset_graph(args) -> str:
    fmt = _format(args, ("dot", "json", "md"))
    basis = _basis(args)
    gens = _gens(args, basis.group)
    if len(gens) != 1:
        raise UsageError("--gen", "give exactly one generator")
    graph = build_graph(basis, gens[0])
    if fmt == "dot":
        return emit_dot(graph, reduce=args.reduce)
    if fmt == "json":
        data = graph_to_json(graph)
        if args.reduce:
            data["edges"] = sorted([graph.label(a), graph.label(b)] for a, b in transitive_reduction(graph.edges))
        return _dumps(data)
    data = graph_to_json(graph)
    lines = [f"# <{gens[0]}>-<{gens[0]}> double-coset graph, {data['group']}, basis {basis.name}", ""]
    lines += ["| rep | kind | size | terminal |", "|---|---|---|---|"]
    lines += [f"| {v['rep']} | {v['kind']} | {v['size']} | {'yes' if v['terminal'] else 'no'} |" for v in data["vertices"]]
    lines += ["", "| from | to |", "|---|---|"]
    lines += [f"| {a} | {b} |" for a, b in data["edges"]]
    return "\n".join(lines) + "\n"


def _distinguished(args, basis: ReducedBasis, gens: Sequence[str]):
    """``(distinguished, fallback)`` for the solver, from ``--distinguished``."""
    choice = args.distinguished
    printed = printed_distinguished(basis, gens)
    if choice == "auto":
        return (printed, None) if printed is not None else (None, None)
    if choice == "printed":
        if printed is None:
            raise UsageError("--distinguished", f"no printed basis for {basis.name} and generators {','.join(gens)}")
        return printed, None
    if choice == "minimal":
        return None, printed
    words = [w for w in choice.split(",") if w]
    ids = [basis.group.eval_word(_word(basis, w, "--distinguished")) for w in words]
    return ids, None


def _centralizer_out(res: CentralizerResult, fmt: str, title: str) -> str:
    basis = res.basis
    gd = basis.group
    classes = {x: cl for cl in gd.j_conjugacy_classes(res.gens) for x in cl}
    rows = []
    for w, e in zip(res.relations.distinguished, res.elements):
        rows.append((w, len(classes[w]), e))
    if fmt == "json":
        return _dumps(
            {
                "basis": basis.name,
                "generators": list(res.gens),
                "rank": res.rank,
                "elements": [
                    {"distinguished": basis.word_str(w), "class_size": n, "element": e.to_json()} for w, n, e in rows
                ],
                "relations": {
                    basis.word_str(g): res.relations.format(g)
                    for g in sorted(res.relations.exprs, key=basis.sort_key)
                },
            }
        )
    if fmt == "tex":
        lines = [r"\begin{enumerate}"]
        lines += [f"\\item[$({k})$] ${e.to_tex()}$" for k, (w, n, e) in enumerate(rows, 1)]
        lines.append(r"\end{enumerate}")
        return "\n".join(lines) + "\n"
    lines = [f"# {title}", "", f"rank {res.rank}, basis {basis.name}", ""]
    lines += ["| # | distinguished | class size | element |", "|---|---|---|---|"]
    lines += [f"| {k} | {basis.word_str(w)} | {n} | `{e}` |" for k, (w, n, e) in enumerate(rows, 1)]
    return "\n".join(lines) + "\n"


def _solve(args, basis: ReducedBasis, gens: Sequence[str]) -> CentralizerResult:
    dist, fallback = _distinguished(args, basis, gens)
    if dist is None:
        log.info("distinguished words: minimal class members %s", minimal_distinguished(basis, gens))
    try:
        return centralizer_basis(basis, gens, distinguished=dist, fallback=fallback)
    except (PivotError, ArithmeticError) as exc:
        raise VerificationFailed(str(exc)) from None


def cmd_centralizer(args) -> str:
    fmt = _format(args, ("json", "md", "tex"))
    basis = _basis(args)
    gens = _gens(args, basis.group)
    res = _solve(args, basis, gens)
    return _centralizer_out(res, fmt, f"Centralizer of T[{','.join(gens)}] in H({basis.group.spec})")


def cmd_centre(args) -> str:
    fmt = _format(args, ("json", "md", "tex"))
    basis = _basis(args)
    res = _solve(args, basis, list(basis.group.gen_names))
    return _centralizer_out(res, fmt, f"Centre of H({basis.group.spec})")


def cmd_specialize(args) -> str:
    fmt = _format(args, ("json", "md"))
    basis = _basis(args)
    if args.element:
        with open(args.element, encoding="utf-8") as fh:
            x = HeckeElement.from_json(basis, json.load(fh))
    elif args.words:
        x = _product(basis, args.words)
    else:
        raise UsageError("WORD", "give words to multiply or --element")
    spec = {basis.word_str(k): v for k, v in sorted(x.specialize().items(), key=lambda kv: basis.sort_key(kv[0]))}
    if fmt == "json":
        return _dumps({"group": str(basis.group.spec), "element": spec})
    if not spec:
        return "0\n"
    return " + ".join(f"{v}*{w}" if v != 1 else w for w, v in spec.items()).replace("+ -", "- ") + "\n"


def cmd_verify_paper(args) -> str:
    fmt = _format(args, ("md", "json"))
    checks = verify_suite(args.suite)
    n_pass, n_err, n_fail = summary_counts(checks)
    if fmt == "json":
        out = _dumps(
            {
                "suite": args.suite,
                "checks": [{"item": c.item, "status": c.status, "detail": c.detail} for c in checks],
                "pass": n_pass,
                "errata": n_err,
                "fail": n_fail,
            }
        )
    else:
        out = format_report(checks)
    if n_fail:
        args._failed = True
    return out


# -- parser ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", default="g4", help="group: g4 or g(r,1,n) (default g4)")
    common.add_argument("--basis", default=None, help="reduced basis: sts, tst (G4) or bm (G(r,1,2))")
    common.add_argument("--gen", default=None, help="generator, or comma-separated generators")
    common.add_argument("--format", default="md", choices=FORMATS, help="output format (default md)")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    common.add_argument("--verbose", "-v", action="count", default=0, help="log progress to stderr")

    p = _Parser(prog="crhecke", description="Hecke algebras of G4 and G(r,1,2) over Z[xi].")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    grp = sub.add_parser("group", help="group facts")
    gsub = grp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gsub.add_parser("info", parents=[common], help="order, classes, centre, double cosets").set_defaults(func=cmd_group_info)

    hk = sub.add_parser("hecke", help="Hecke algebra arithmetic")
    hsub = hk.add_subparsers(dest="action", required=True, parser_class=_Parser)
    hsub.add_parser("table", parents=[common], help="generator multiplication table").set_defaults(func=cmd_hecke_table)
    mul = hsub.add_parser("mul", parents=[common], help="product of words, in the basis")
    mul.add_argument("words", nargs="+", metavar="WORD")
    mul.set_defaults(func=cmd_hecke_mul)
    com = hsub.add_parser("commutator", parents=[common], help="x T_g - T_g x for x the product of the words")
    com.add_argument("words", nargs="+", metavar="WORD")
    com.set_defaults(func=cmd_hecke_commutator)

    dg = sub.add_parser("dcoset-graph", parents=[common], help="H-double-coset graph for one generator")
    dg.add_argument("--reduce", action="store_true", help="drop arrows implied by transitivity")
    dg.set_defaults(func=cmd_dcoset_graph)

    for name, func, helptext in (
        ("centralizer", cmd_centralizer, "integral basis of the centralizer of generators"),
        ("centre", cmd_centre, "integral basis of the centre"),
    ):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument(
            "--distinguished",
            default="auto",
            help="auto (printed set if known, else minimal), printed, minimal, or comma-separated words",
        )
        c.set_defaults(func=func)

    sp = sub.add_parser("specialize", parents=[common], help="image in the group algebra (xi -> 0)")
    sp.add_argument("words", nargs="*", metavar="WORD")
    sp.add_argument("--element", default=None, help="JSON element file instead of words")
    sp.set_defaults(func=cmd_specialize)

    vp = sub.add_parser("verify-paper", parents=[common], help="check the published tables")
    vp.add_argument("--suite", required=True, choices=sorted(SUITES))
    vp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    args._failed = False
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"crhecke: error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"crhecke: failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"crhecke: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 1 if args._failed else 0
