"""Command-line interface.

Exit status: 0 on success, 1 on usage errors, 2 on data errors (unreadable
or malformed input, missing database, failed classification).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .graph import Graph, GraphError
from .graphio import iter_graph6, parse_edge_list, parse_inline, to_graph6
from .invariants import (
    compact_invariant,
    count_r_invariants,
    count_total_invariants,
    multiplicity_signature,
    scientific,
    support_tally,
    weight_distribution,
)
from .orbits import (
    ClassDatabase,
    ClassDatabaseError,
    ClassificationError,
    ClassRecord,
    DisconnectedGraphError,
    build_class_database,
    classify,
    classify_components,
    read_database,
    write_database,
)
from .stabilizer import stabilizer_rows

DEFAULT_DB = "graphclass-db.txt"
TABLE_SIZES = {2: (2, 6), 3: (2, 6), 4: (7, 7), 5: (8, 8)}


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="SPEC", help='inline graph, e.g. "3: 1-2 2-3" (1-indexed)')
    src.add_argument("--file", metavar="PATH", help="edge-list file: 'n <count>' then 'u v' lines")
    src.add_argument("--graph6", metavar="PATH", help="graph6 file, one graph per line")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphclass", description="LC invariants and classes of graph states")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stabilizer", help="list all stabilizer elements")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("invariants", help="weight distribution, signature and compact invariant")
    _add_input(p)
    p.add_argument("--full", action="store_true", help="also print every non-zero A_w")
    _add_output(p)

    p = sub.add_parser("classify", help="look up the LC class of a graph")
    _add_input(p)
    p.add_argument("--db", default=DEFAULT_DB, help=f"class database (default {DEFAULT_DB})")
    p.add_argument("--compact", action="store_true", help="use only M(0), M(1), M(3), M(4)")
    p.add_argument("--per-component", action="store_true", help="classify disconnected graphs componentwise")
    _add_output(p)

    p = sub.add_parser("orbits", help="build the class database")
    p.add_argument("--build", type=int, required=True, metavar="N", help="largest vertex count")
    p.add_argument("--db", default=DEFAULT_DB, help=f"output path (default {DEFAULT_DB})")
    p.add_argument("--no-reference", action="store_true", help="keep provisional class numbering")

    p = sub.add_parser("tables", help="emit table analogs from the database")
    p.add_argument("--which", type=int, choices=sorted(TABLE_SIZES), required=True)
    p.add_argument("--db", help="class database (built in memory when omitted)")
    _add_output(p)

    p = sub.add_parser("counts", help="number of support invariants")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--r", type=int, choices=(1, 2))
    kind.add_argument("--total", action="store_true")
    p.add_argument("--sci", action="store_true", help="print as mantissa x 10^exponent (3 digits)")
    _add_output(p)
    return parser


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    try:
        if args.edges is not None:
            return [parse_inline(args.edges)]
        path = Path(args.file or args.graph6)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DataError(f"cannot read {path}: {exc.strerror}") from exc
        if args.file:
            return [parse_edge_list(text)]
        graphs = list(iter_graph6(text))
        if not graphs:
            raise DataError(f"{path}: no graphs")
        return graphs
    except GraphError as exc:
        raise DataError(f"malformed graph: {exc}") from exc


def _load_db(path: str) -> ClassDatabase:
    try:
        return read_database(path)
    except FileNotFoundError as exc:
        raise DataError(f"database {path} not found; create it with 'graphclass orbits --build 8'") from exc
    except OSError as exc:
        raise DataError(f"cannot read database {path}: {exc.strerror}") from exc
    except (ClassDatabaseError, GraphError) as exc:
        raise DataError(f"bad database {path}: {exc}") from exc


def _emit_blocks(out: TextIO, graphs: list[Graph], blocks: list[list[str]]) -> None:
    for k, (g, lines) in enumerate(zip(graphs, blocks)):
        if len(graphs) > 1:
            if k:
                out.write("\n")
            out.write(f"# graph {to_graph6(g)}\n")
        out.write("".join(line + "\n" for line in lines))


def _emit_json(out: TextIO, objects: list[dict]) -> None:
    for obj in objects:
        out.write(json.dumps(obj) + "\n")


def _invariant_fields(g: Graph) -> dict:
    tally = support_tally(g)
    sig = multiplicity_signature(tally)
    return {
        "n": g.n,
        "weight_distribution": list(weight_distribution(tally).a),
        "signature": [list(p) for p in sig.pairs],
        "compact": list(compact_invariant(sig).as_tuple()),
    }


def _record_json(rec: ClassRecord) -> dict:
    return {
        "n": rec.n,
        "class_id": rec.class_id,
        "signature": [list(p) for p in rec.signature.pairs],
        "compact": list(rec.compact.as_tuple()),
        "weight_distribution": list(weight_distribution(support_tally(rec.representative)).a),
        "representative": to_graph6(rec.representative),
        "member_count": rec.member_count,
    }


def _record_lines(rec: ClassRecord) -> list[str]:
    return [
        f"class {rec.class_id}  signature {rec.signature}",
        f"n  {rec.n}",
        f"compact  {rec.compact}",
        f"members  {rec.member_count}",
        f"representative  {to_graph6(rec.representative)}",
    ]


def cmd_stabilizer(args: argparse.Namespace, out: TextIO) -> None:
    graphs = _read_graphs(args)
    if args.output == "json":
        _emit_json(
            out,
            [
                {
                    "n": g.n,
                    "stabilizer": [
                        {"operator": op, "generators": dec, "support": sup, "weight": w}
                        for op, dec, sup, w in stabilizer_rows(g)
                    ],
                }
                for g in graphs
            ],
        )
        return
    blocks = []
    for g in graphs:
        lines = ["operator\tgenerators\tsupport\tweight"]
        lines += [f"{op}\t{dec}\t{sup}\t{w}" for op, dec, sup, w in stabilizer_rows(g)]
        blocks.append(lines)
    _emit_blocks(out, graphs, blocks)


def cmd_invariants(args: argparse.Namespace, out: TextIO) -> None:
    graphs = _read_graphs(args)
    if args.output == "json":
        objects = []
        for g in graphs:
            obj = _invariant_fields(g)
            if args.full:
                tally = support_tally(g)
                obj["tally"] = [[line.split("\t")[0], int(line.split("\t")[1])] for line in tally.format()]
            objects.append(obj)
        _emit_json(out, objects)
        return
    blocks = []
    for g in graphs:
        tally = support_tally(g)
        sig = multiplicity_signature(tally)
        lines = []
        if args.full:
            lines += [f"A{line}" for line in tally.format()]
        lines += [
            f"W\t{weight_distribution(tally)}",
            f"signature\t{sig}",
            f"compact\t{compact_invariant(sig)}",
        ]
        blocks.append(lines)
    _emit_blocks(out, graphs, blocks)


def cmd_classify(args: argparse.Namespace, out: TextIO) -> None:
    graphs = _read_graphs(args)
    db = _load_db(args.db)
    objects, blocks = [], []
    for g in graphs:
        try:
            if args.per_component:
                parts = classify_components(g, db)
                objects.append(
                    {
                        "n": g.n,
                        "components": [
                            {"vertices": verts, **(_record_json(rec) if rec else {"class_id": None})}
                            for verts, rec in parts
                        ],
                    }
                )
                lines = []
                for verts, rec in parts:
                    label = "{" + ",".join(map(str, verts)) + "}"
                    if rec is None:
                        lines.append(f"component {label}  unentangled")
                    else:
                        lines.append(f"component {label}  class {rec.class_id}  signature {rec.signature}")
                blocks.append(lines)
            else:
                rec = classify(g, db, compact=args.compact)
                objects.append(_record_json(rec))
                blocks.append(_record_lines(rec))
        except DisconnectedGraphError as exc:
            raise DataError(f"{exc} (or pass --per-component)") from exc
        except ClassificationError as exc:
            raise DataError(str(exc)) from exc
    if args.output == "json":
        _emit_json(out, objects)
    else:
        _emit_blocks(out, graphs, blocks)


def cmd_orbits(args: argparse.Namespace, out: TextIO) -> None:
    try:
        db = build_class_database(args.build, reference=None if args.no_reference else "default")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except ClassDatabaseError as exc:
        raise DataError(str(exc)) from exc
    try:
        write_database(db, args.db)
    except OSError as exc:
        raise DataError(f"cannot write {args.db}: {exc.strerror}") from exc
    for n, count in sorted(db.counts().items()):
        out.write(f"n={n}\t{count}\n")
    out.write(f"total\t{len(db)}\n")
    out.write(f"wrote {args.db}\n")


def table_rows(db: ClassDatabase, which: int) -> list[list[str]]:
    lo, hi = TABLE_SIZES[which]
    rows = []
    for rec in db.records:
        if not lo <= rec.n <= hi:
            continue
        if which == 2:
            w = weight_distribution(support_tally(rec.representative))
            rows.append([str(rec.class_id), *map(str, w.a)])
        else:
            rows.append([str(rec.class_id), str(rec.signature)])
    return rows


def cmd_tables(args: argparse.Namespace, out: TextIO) -> None:
    lo, hi = TABLE_SIZES[args.which]
    if args.db:
        db = _load_db(args.db)
        if db.n_max < hi:
            raise DataError(f"database covers n <= {db.n_max}; table {args.which} needs n = {hi}")
    else:
        db = build_class_database(hi)
    rows = table_rows(db, args.which)
    if args.output == "json":
        key = "weight_distribution" if args.which == 2 else "signature"
        objects = []
        for row in rows:
            rec = db[int(row[0])]
            value = [int(x) for x in row[1:]] if args.which == 2 else [list(p) for p in rec.signature.pairs]
            objects.append({"n": rec.n, "class_id": rec.class_id, key: value})
        _emit_json(out, objects)
        return
    if args.which == 2:
        out.write("# No.\t" + "\t".join(f"A_{d}" for d in range(hi + 1)) + "\n")
    else:
        out.write("# No.\tInvariants\n")
    out.write("".join("\t".join(row) + "\n" for row in rows))


def cmd_counts(args: argparse.Namespace, out: TextIO) -> None:
    try:
        value = count_total_invariants(args.n) if args.total else count_r_invariants(args.n, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    mantissa, exponent = scientific(value)
    if args.output == "json":
        obj = {"n": args.n, "r": "total" if args.total else args.r, "count": str(value)}
        obj["scientific"] = f"{mantissa}e{exponent}"
        _emit_json(out, [obj])
    elif args.sci:
        out.write(f"{mantissa}e{exponent}\n")
    else:
        out.write(f"{value}\n")


COMMANDS = {
    "stabilizer": cmd_stabilizer,
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "orbits": cmd_orbits,
    "tables": cmd_tables,
    "counts": cmd_counts,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s", stream=err)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"graphclass: error: {exc}\n")
        return 1
    except DataError as exc:
        err.write(f"graphclass: error: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
