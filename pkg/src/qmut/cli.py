"""Command-line front end: qmut {classify|mutate|enumerate|seeds|serve}.

Exit codes: 0 success, 2 validation error, 3 budget exhausted (enumerate
and seeds, unless --json is given, in which case the status travels in the
JSON body instead).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .classify import decide_mutation_finiteness
from .enumeration import Budget, enumerate_class
from .errors import QuiverError
from .quiver import ExchangeMatrix, mutate_sequence
from .seeds import enumerate_seeds

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3


def _read_document(path: str) -> tuple[ExchangeMatrix, list[str] | None]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return io.parse_document_text(text)


def _parse_sequence(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise SystemExit(f"invalid mutation sequence: {text!r}") from exc


def _budget_from_args(args) -> Budget:
    return Budget(
        max_quivers=args.max_quivers,
        max_arrow_multiplicity=args.max_mult,
        max_mutations=getattr(args, "max_mutations", None),
    )


def _fail(exc: QuiverError, as_json: bool) -> int:
    if as_json:
        print(io.canonical_dumps(io.error_payload(exc)), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_VALIDATION


def cmd_classify(args) -> int:
    try:
        q, _labels = _read_document(args.input)
        payload = io.classify_payload(q)
    except QuiverError as exc:
        return _fail(exc, args.json)
    if args.json:
        print(io.canonical_dumps(payload))
        return EXIT_OK
    sig = payload["signature"]["kind"].replace("_", " ")
    for comp in payload["diagram"]:
        verts = ",".join(str(v) for v in comp["vertices"])
        kind = {"dynkin": "Dynkin", "extended_dynkin": "extended Dynkin", "other": "wild"}[
            comp["kind"]
        ]
        name = comp["display"] if comp["kind"] != "other" else "-"
        print(f"component [{verts}]: {kind} {name}".rstrip(" -"))
    print(f"form: {sig}")
    print(f"mutation class: {payload['verdict']['display']}")
    if args.figure:
        from .report import save_quiver_figure

        save_quiver_figure(q, args.figure, _labels)
        print(f"figure written to {args.figure}")
    return EXIT_OK


def cmd_mutate(args) -> int:
    try:
        q, labels = _read_document(args.input)
        seq = _parse_sequence(args.sequence)
        result = mutate_sequence(q, seq)
    except QuiverError as exc:
        return _fail(exc, args.json)
    doc = io.render_document(result, labels)
    if args.json:
        print(io.canonical_dumps({"quiver": doc}))
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        q, _labels = _read_document(args.input)
        budget = _budget_from_args(args)
        budget.check()
    except QuiverError as exc:
        return _fail(exc, args.json)
    report = enumerate_class(q, budget, workers=args.workers)
    if args.json:
        payload = io.enumerate_payload(report, emit_class=args.emit_class,
                                       emit_edges=args.emit_edges)
        print(io.canonical_dumps(payload))
        if args.figure:
            from .report import save_exchange_graph_figure

            save_exchange_graph_figure(report, args.figure)
        return EXIT_OK

    if report.complete:
        print(f"{report.count} quivers, COMPLETE")
    else:
        detail = {
            "max_arrow_multiplicity": f"multiplicity {budget.max_arrow_multiplicity} exceeded",
            "max_quivers": f"quiver count {budget.max_quivers} exceeded",
            "max_mutations": f"mutation count {budget.max_mutations} exceeded",
        }[report.exhausted]
        print(f"{report.count} quivers, BUDGET EXHAUSTED ({detail})")
        if report.offending is not None:
            print(f"offending quiver: {report.offending}")
    if args.emit_class:
        print("# representatives (one matrix per line)")
        for m in report.representatives:
            print(m)
    if args.emit_edges:
        print("# edges: source\ttarget\tvertex (indices into representatives)")
        key_index = {k: i for i, k in enumerate(report.keys)}
        for a, b, k in report.edges:
            print(f"{key_index[a]}\t{key_index[b]}\t{k}")
    if args.figure:
        from .report import save_exchange_graph_figure

        save_exchange_graph_figure(report, args.figure)
        print(f"figure written to {args.figure}")
    return EXIT_OK if report.complete else EXIT_BUDGET


def cmd_seeds(args) -> int:
    try:
        q, _labels = _read_document(args.input)
        budget = Budget(max_quivers=args.max_seeds, max_arrow_multiplicity=args.max_mult)
        budget.check()
    except QuiverError as exc:
        return _fail(exc, args.json)
    report = enumerate_seeds(q, budget, workers=args.workers)
    if args.json:
        print(io.canonical_dumps(io.seeds_payload(report)))
        return EXIT_OK
    status = "COMPLETE" if report.complete else f"BUDGET EXHAUSTED ({report.exhausted})"
    print(
        f"seeds: {report.seed_count}, clusters: {report.cluster_count}, "
        f"variables: {report.variable_count}, {status}"
    )
    return EXIT_OK if report.complete else EXIT_BUDGET


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmut", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-i", "--input", default="-", help="quiver document (JSON file, or - for stdin)")
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p = sub.add_parser("classify", help="diagram type, form signature and finiteness verdict")
    add_common(p)
    p.add_argument("--figure", help="write a quiver drawing (PNG/SVG by extension)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mutate", help="apply a mutation sequence and print the document")
    add_common(p)
    p.add_argument("-k", "--sequence", required=True,
                   help="comma- or space-separated vertex sequence, e.g. '0,1,0'")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="enumerate the mutation class up to isomorphism")
    add_common(p)
    p.add_argument("--max-quivers", type=int, default=100_000)
    p.add_argument("--max-mult", type=int, default=64)
    p.add_argument("--max-mutations", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-class", action="store_true", help="list all representatives")
    p.add_argument("--emit-edges", action="store_true", help="list exchange-graph edges")
    p.add_argument("--figure", help="write an exchange-graph drawing")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("seeds", help="enumerate seeds / clusters / cluster variables")
    add_common(p)
    p.add_argument("--max-seeds", type=int, default=100_000)
    p.add_argument("--max-mult", type=int, default=64)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_seeds)

    p = sub.add_parser("serve", help="run the JSON API (and static UI) over HTTP")
    p.add_argument("--port", type=int, default=8400)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory of UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
