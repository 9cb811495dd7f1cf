"""Command line front end: ``splitword {run,word,prn,label,forbidden,sweep}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import NotComparability, NotSplit, ParseError, SplitWordError
from .graph import parse_graph
from .labelling import find_labelling, orientation_from_labelling
from .pipeline import EXIT_INTERNAL, EXIT_NOT_COMPARABILITY, EXIT_NOT_SPLIT, SCHEMA, exit_code, run_pipeline
from .poset import prn
from .split import FAMILY, NON_COMPARABILITY, find_forbidden, split_partition
from .sweep import SweepFailure, sweep
from .words import build_word, compact, compact_names


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source) as fh:
            return fh.read()
    return source


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(args):
    return parse_graph(_read_input(args.input), args.format)


def _split_and_label(g):
    sg = split_partition(g)
    found = find_labelling(sg)
    if found is None:
        raise NotComparability(*find_forbidden(g, NON_COMPARABILITY))
    return (sg,) + found


def cmd_run(args) -> int:
    report = run_pipeline(_load(args))
    _emit(report)
    return exit_code(report)


def cmd_word(args) -> int:
    g = _load(args)
    sg, lab, cls = _split_and_label(g)
    blocks = build_word(sg, lab, cls)
    names = compact_names(sg, lab)
    compact_form = " ".join(compact(q, names) for q in blocks) if names else None
    if args.json:
        _emit({
            "schema": SCHEMA,
            "q1": list(blocks.q1),
            "q2": list(blocks.q2),
            "q3": list(blocks.q3),
            "z": list(blocks.z),
            "compact": compact_form,
        })
        return 0
    for name, q in zip(("q1", "q2", "q3"), blocks):
        print(f"{name}: {' '.join(map(str, q))}")
    print(f"z:  {' '.join(map(str, blocks.z))}")
    if compact_form:
        print(f"compact: {compact_form}")
    return 0


def cmd_prn(args) -> int:
    g = _load(args)
    result = prn(g)
    data = dict(result.certificate_data)
    if "embedding" in data:
        data["embedding"] = {str(k): v for k, v in data["embedding"].items()}
    if args.json:
        _emit({"schema": SCHEMA, "value": result.value, "certificate_kind": result.certificate_kind,
               "certificate_data": data})
    else:
        print(f"prn: {result.value} ({result.certificate_kind})")
    return 0


def cmd_label(args) -> int:
    g = _load(args)
    sg, lab, cls = _split_and_label(g)
    d = orientation_from_labelling(sg, lab, cls)
    if args.json:
        _emit({
            "schema": SCHEMA,
            "clique": list(sg.clique),
            "independent": list(sg.independent),
            "labelling": list(lab.order),
            "classification": cls.to_list(),
            "isolated": list(cls.isolated),
            "d": cls.d,
            "orientation": [list(a) for a in d.sorted_arcs()],
        })
        return 0
    print(f"labelling: {' '.join(map(str, lab.order))}")
    for e in cls.entries:
        params = ", ".join(f"{k}={v}" for k, v in e.params.items())
        print(f"  {e.vertex}: {e.kind}({params})")
    for a in cls.isolated:
        print(f"  {a}: isolated")
    return 0


def cmd_forbidden(args) -> int:
    g = _load(args)
    hit = find_forbidden(g, args.which or tuple(FAMILY))
    if args.json:
        if hit is None:
            _emit({"schema": SCHEMA, "found": None})
        else:
            _emit({"schema": SCHEMA, "found": hit[0], "embedding": {str(k): v for k, v in hit[1].items()}})
    elif hit is None:
        print("none")
    else:
        print(f"{hit[0]}: " + ", ".join(f"{k}->{v}" for k, v in hit[1].items()))
    return 0


def cmd_sweep(args) -> int:
    try:
        summary = sweep(args.n_max, args.mode, seed=args.seed, count=args.count, workers=args.workers)
    except SweepFailure as exc:
        _emit({"schema": SCHEMA, "failures": 1, "reproducer": exc.graph6, "check": exc.check, "detail": exc.detail})
        return EXIT_INTERNAL
    _emit(summary)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitword", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="file path, '-' for stdin, or the graph text itself")
        p.add_argument("--format", choices=("edgelist", "graph6"), default=None,
                       help="input format (default: auto-detect)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    graph_command("run", cmd_run, "full pipeline report (always JSON)")
    graph_command("word", cmd_word, "three-permutation word")
    graph_command("prn", cmd_prn, "permutation-representation number")
    graph_command("label", cmd_label, "clique labelling and classification")
    fb = graph_command("forbidden", cmd_forbidden, "first induced B1..B4")
    fb.add_argument("--which", nargs="+", choices=tuple(FAMILY), help="restrict the family members searched")

    sw = sub.add_parser("sweep", help="cross-check all modules on many graphs")
    sw.add_argument("--n-max", type=int, default=5)
    sw.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--count", type=int, default=1000)
    sw.add_argument("--workers", type=int, default=None, help="worker processes (default: $SPLITWORD_WORKERS or CPU count)")
    sw.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSplit as exc:
        _emit({"schema": SCHEMA, "status": "not_split", "obstruction": exc.kind,
               "embedding": {str(k): v for k, v in exc.embedding.items()}})
        return EXIT_NOT_SPLIT
    except NotComparability as exc:
        _emit({"schema": SCHEMA, "status": "not_comparability", "forbidden": exc.name,
               "embedding": {str(k): v for k, v in exc.embedding.items()}})
        return EXIT_NOT_COMPARABILITY
    except (ParseError, ValueError) as exc:
        print(f"splitword: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SplitWordError as exc:  # pragma: no cover
        print(f"splitword: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
