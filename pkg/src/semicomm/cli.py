"""``semicomm`` command line: build, analyze, enumerate, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Iterator, Sequence

from . import tableio
from .commgraph import (
    chromatic_number,
    clique_number,
    commuting_graph,
    component_count,
    diameter,
    export,
    girth,
    graph_metrics,
    knit_degree,
)
from .constructions import (
    ReesMatrixData,
    alternating_group,
    cyclic_group,
    direct_product,
    full_transformation_monoid,
    girth4_band,
    girth_2n_family,
    rees_matrix,
    symmetric_group,
    symmetric_inverse_monoid,
    zero_union,
)
from .enumeration import CLASS_FILTERS, EnumerationTask, iter_semigroups
from .errors import BadParams, SemigroupError
from .semigroup import (
    FiniteSemigroup,
    is_band,
    is_clifford,
    is_commutative,
    is_completely_regular,
    is_completely_simple,
    is_group,
    is_inverse_semigroup,
    is_regular,
)
from .verify import SUITES, parse_range, run_suite

FAMILIES = ("tn", "in", "sym", "alt", "cyc", "rees", "zerounion", "product",
            "girth4band", "girth2n")
_SHORTHAND = re.compile(r"^(tn|in|sym|alt|cyc|girth2n)[:_]?(\d+)$")


def from_shorthand(token: str) -> FiniteSemigroup:
    """``sym3``, ``alt4``, ``cyc5``, ``tn3``, ``in3``, ``girth2n4`` or ``girth4band``."""
    if token == "girth4band":
        return girth4_band()
    m = _SHORTHAND.match(token)
    if not m:
        raise BadParams(f"unknown semigroup shorthand {token!r}")
    family, k = m.group(1), int(m.group(2))
    S = _simple_family(family, k)
    return S.with_name(token)


def _simple_family(family: str, k: int) -> FiniteSemigroup:
    builders = {
        "tn": full_transformation_monoid,
        "in": symmetric_inverse_monoid,
        "sym": symmetric_group,
        "alt": alternating_group,
        "cyc": cyclic_group,
        "girth2n": girth_2n_family,
    }
    return builders[family](k)


def _parse_sandwich(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(v) for v in row.split(",")) for row in text.split(";"))
    except ValueError:
        raise BadParams(f"bad sandwich matrix {text!r}; use rows like '0,1;1,0'") from None


def build_family(family: str, params: Sequence[str]) -> FiniteSemigroup:
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "girth4band":
        if params:
            raise BadParams("girth4band takes no parameters")
        return girth4_band()
    if family in ("zerounion", "product"):
        if not params:
            raise BadParams(f"{family} needs at least one part, e.g. 'alt4 sym3'")
        parts = [from_shorthand(p) for p in params]
        S = zero_union(parts) if family == "zerounion" else direct_product(parts)
        return S.with_name(" ".join([family, *params]))
    if family == "rees":
        if len(params) != 4:
            raise BadParams("rees needs GROUP I LAMBDA SANDWICH, e.g. 'cyc2 2 2 0,0;0,1'")
        group = from_shorthand(params[0])
        try:
            i_size, l_size = int(params[1]), int(params[2])
        except ValueError:
            raise BadParams("index set sizes must be integers") from None
        data = ReesMatrixData(group, i_size, l_size, _parse_sandwich(params[3]))
        return rees_matrix(data).with_name(" ".join(["rees", *params]))
    if len(params) != 1:
        raise BadParams(f"{family} takes exactly one integer parameter")
    try:
        k = int(params[0])
    except ValueError:
        raise BadParams(f"{family} parameter must be an integer") from None
    return _simple_family(family, k).with_name(f"{family}{k}")


# --------------------------------------------------------------------------
# analyze


CLASSIFIERS = (
    ("commutative", is_commutative),
    ("band", is_band),
    ("group", is_group),
    ("regular", is_regular),
    ("inverse", is_inverse_semigroup),
    ("clifford", is_clifford),
    ("completely-regular", is_completely_regular),
    ("completely-simple", is_completely_simple),
)


def classify(S: FiniteSemigroup) -> dict[str, bool]:
    return {name: pred(S) for name, pred in CLASSIFIERS}


def analyze(S: FiniteSemigroup, metrics: Sequence[str], with_classes: bool) -> dict:
    """Requested invariants as a flat dict (absent values are ``None``)."""
    out: dict = {"order": S.order}
    if with_classes:
        out.update(classify(S))
    if is_commutative(S):
        out["commuting_graph"] = None
        return out
    G = commuting_graph(S)
    out["vertices"] = G.vertex_count
    out["edges"] = G.edge_count
    if "girth" in metrics:
        out["girth"] = girth(G)
    if "clique" in metrics:
        out["clique"] = clique_number(G)
    if "chromatic" in metrics:
        out["chromatic"] = chromatic_number(G)
    if "diameter" in metrics:
        out["diameter"] = diameter(G)
        out["components"] = component_count(G)
    if "knit" in metrics:
        res = knit_degree(S, G)
        out["knit"] = None if res is None else res[0]
        if res is not None:
            out["knit_witness"] = [S.label(x) for x in res[1].vertices]
    return out


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + " - ".join(str(v) for v in value) + "]"
    return str(value)


def format_analysis(name: str, result: dict) -> str:
    if result.get("commuting_graph", True) is None:
        rest = " ".join(f"{k}={_fmt(v)}" for k, v in result.items() if k != "commuting_graph")
        return f"{name}: commutative: no commuting graph ({rest})"
    return f"{name}: " + " ".join(f"{k}={_fmt(v)}" for k, v in result.items())


def _inputs(sources: Sequence[str]) -> Iterator[tuple[str, FiniteSemigroup]]:
    if not sources:
        sources = ["-"]
    for src in sources:
        if src == "-":
            for k, S in enumerate(tableio.iter_stream(sys.stdin), start=1):
                yield (S.name.splitlines()[0] if S.name else f"stdin#{k}"), S
        elif os.path.exists(src):
            with open(src, encoding="utf-8") as fh:
                blocks = list(tableio.iter_stream(fh))
            stem = os.path.basename(src)
            for k, S in enumerate(blocks, start=1):
                label = stem if len(blocks) == 1 else f"{stem}#{k}"
                labels = _sidecar_labels(src, S.order) if len(blocks) == 1 else None
                if labels is not None:
                    S = FiniteSemigroup(S.table, name=S.name, labels=labels, check=False)
                yield label, S
        else:
            yield src, from_shorthand(src)


def _sidecar_labels(path: str, order: int) -> list[str] | None:
    side = path + ".labels"
    if not os.path.exists(side):
        return None
    with open(side, encoding="utf-8") as fh:
        labels = [line.rstrip("\n") for line in fh]
    return labels if len(labels) == order else None


# --------------------------------------------------------------------------
# Commands


def cmd_build(args) -> int:
    S = build_family(args.family, args.params)
    text = tableio.dumps(S)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    with open(args.out + ".labels", "w", encoding="utf-8") as fh:
        fh.write("\n".join(S.labels) + "\n")
    print(f"wrote {args.out} (order {S.order}) and {args.out}.labels", file=sys.stderr)
    return 0


def cmd_analyze(args) -> int:
    metrics = [m for m in ("girth", "clique", "chromatic", "diameter", "knit")
               if getattr(args, m)]
    with_classes = args.classify
    if args.all or (not metrics and not with_classes and not args.export):
        metrics = ["girth", "clique", "chromatic", "diameter", "knit"]
        with_classes = True
    for name, S in _inputs(args.inputs):
        if args.export:
            if is_commutative(S):
                print(f"{name}: commutative: no commuting graph")
                continue
            G = commuting_graph(S)
            sys.stdout.write(export(G, args.export, graph_metrics(G), name=name).decode())
            if args.export == "json":
                sys.stdout.write("\n")
            continue
        result = analyze(S, metrics, with_classes)
        if args.json:
            print(json.dumps({"name": name, **result}))
        else:
            print(format_analysis(name, result))
    return 0


def cmd_enumerate(args) -> int:
    task = EnumerationTask(args.order, args.cls, not args.raw, args.long)
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", encoding="utf-8")
    count = 0
    try:
        for S in iter_semigroups(task, jobs=args.jobs):
            if count:
                out.write("\n")
            out.write(tableio.dumps(S))
            count += 1
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{count} semigroups", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    n_range = parse_range(args.n) if args.n else None
    report = run_suite(args.suite, n_range=n_range, max_order=args.max_order,
                       allow_long=args.long)
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicomm",
        description="Finite semigroups, their commuting graphs and exact graph invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write the Cayley table of a named family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="family parameters, e.g. '3' or 'alt4 sym3'")
    p.add_argument("-o", "--out", help="output path (a .labels sidecar is written next to it)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="invariants of semigroups from files, stdin or shorthands")
    p.add_argument("inputs", nargs="*",
                   help="sgt-table files, '-' for stdin, or shorthands like sym3, in3, girth4band")
    for flag in ("girth", "clique", "chromatic", "diameter", "knit", "classify", "all"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--export", choices=("dot", "json"))
    p.add_argument("--json", action="store_true", help="one JSON object per input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="stream every semigroup of a small order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="cls", default="any",
                   help="filter, '+'-joined from: " + ", ".join(CLASS_FILTERS))
    p.add_argument("--raw", action="store_true", help="all labelled tables, no isomorphism dedup")
    p.add_argument("--long", action="store_true", help="allow the long-running order 5")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="rerun the published results and theorem checks; exit 1 on any failure")
    p.add_argument("suite", nargs="?", default="all", choices=SUITES)
    p.add_argument("--n", help="parameter range, e.g. 3..6")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--long", action="store_true", help="allow order 5 in exhaustive checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
