"""Command line front end and corpus handling.

Inputs are notation strings: ``pd:X(1,4,2,5) X(3,8,4,1) ...`` for planar
diagram codes (1-based table labels accepted) and ``braid:2:[1,1,1]`` for
braid closures.  Corpus files are line-oriented, one ``name<TAB>notation``
entry per line, ``#`` comments ignored.

Subcommands: ``qpoly``, ``det``, ``classify``, ``certify``, ``batch``.
Exit codes: 0 all entries processed; 1 parse or usage error; 2 a resource
budget was exceeded on at least one entry (the entry is marked in the
output and the remaining entries are still emitted).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .certifier import certificate_json, certificate_text, certify, verify_certificate
from .determinant import det_via_q, determinant
from .diagram import DiagramError, LinkDiagram, from_braid, parse_pd
from .obstruction import Report, classify
from .qpoly import BudgetExceededError, DEFAULT_NODE_BUDGET, q_polynomial

__all__ = [
    "CorpusEntry",
    "parse_notation",
    "load_corpus",
    "bundled_corpus_path",
    "run",
    "main",
]

_REPORT_COLUMNS = ["name", "crossings", "det", "det_q", "q", "deg_q", "verdict", "theorem"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: str
    parsed: LinkDiagram


def parse_notation(text: str) -> LinkDiagram:
    text = text.strip()
    if text.startswith("pd:"):
        return parse_pd(text[3:])
    if text.startswith("braid:"):
        body = text[len("braid:") :]
        strands_str, _, word_str = body.partition(":")
        try:
            strands = int(strands_str)
        except ValueError:
            raise DiagramError(f"bad strand count in {text!r}") from None
        word_str = word_str.strip()
        if not (word_str.startswith("[") and word_str.endswith("]")):
            raise DiagramError(f"braid word must be bracketed: {text!r}")
        inner = word_str[1:-1].strip()
        try:
            word = [int(t) for t in inner.split(",")] if inner else []
        except ValueError:
            raise DiagramError(f"bad braid letters in {text!r}") from None
        return from_braid(word, strands)
    raise DiagramError(f"unknown notation {text!r} (expected pd: or braid:)")


def load_corpus(path) -> list[CorpusEntry]:
    entries = []
    names = set()
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, source = line.partition("\t")
        if not sep or not source.strip():
            raise DiagramError(f"{path}:{lineno}: expected name<TAB>notation")
        name = name.strip()
        if name in names:
            raise DiagramError(f"{path}:{lineno}: duplicate corpus name {name!r}")
        names.add(name)
        entries.append(CorpusEntry(name, source.strip(), parse_notation(source)))
    return entries


def bundled_corpus_path() -> Path:
    """Location of the corpus file shipped with the package."""
    return Path(resources.files("qalink") / "data" / "corpus.tsv")


def _report_row(report: Report) -> dict:
    return report.fields()


def _emit_reports(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        out.write("#" + "\t".join(_REPORT_COLUMNS) + "\n")
        for row in rows:
            out.write("\t".join(str(row[c]) for c in _REPORT_COLUMNS) + "\n")


def _classify_entry(args: tuple[str, str, int]) -> dict:
    name, source, max_nodes = args
    diagram = parse_notation(source)
    try:
        report = classify(diagram, name=name, max_nodes=max_nodes)
    except BudgetExceededError:
        return {
            "name": name,
            "crossings": len(diagram.crossings),
            "det": determinant(diagram),
            "det_q": "",
            "q": "",
            "deg_q": "",
            "verdict": "error:budget-exceeded",
            "theorem": "",
        }
    return _report_row(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qalink",
        description="Q polynomials, link determinants, and quasi-alternating "
        "obstructions from planar diagrams.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="pd:... or braid:S:[...] notation")
        p.add_argument(
            "--max-nodes",
            type=int,
            default=DEFAULT_NODE_BUDGET,
            help="node budget for recursions (default %(default)s)",
        )

    add_common(sub.add_parser("qpoly", help="print the Q polynomial and its degree"))
    add_common(sub.add_parser("det", help="print the determinant two ways"))
    p = sub.add_parser("classify", help="print the full obstruction report")
    add_common(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p = sub.add_parser("certify", help="search for a quasi-alternating certificate")
    add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = sub.add_parser("batch", help="classify every entry of a corpus file")
    p.add_argument("file", help="corpus file, one name<TAB>notation per line")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--parallel", action="store_true", help="classify entries in parallel")
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else 1
    try:
        return _dispatch(args, out)
    except (DiagramError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args, out) -> int:
    if args.command == "qpoly":
        d = parse_notation(args.input)
        q, stats = q_polynomial(d, max_nodes=args.max_nodes)
        out.write(f"q\t{q}\n")
        out.write(f"deg_q\t{q.degree() if not q.is_zero() else 0}\n")
        if not args.quiet:
            out.write(
                f"# nodes={stats.nodes_expanded} cache_hits={stats.cache_hits} "
                f"max_depth={stats.max_depth}\n"
            )
        return 0

    if args.command == "det":
        d = parse_notation(args.input)
        det = determinant(d)
        q, _ = q_polynomial(d, max_nodes=args.max_nodes)
        out.write(f"det\t{det}\n")
        out.write(f"det_via_q\t{det_via_q(q)}\n")
        return 0

    if args.command == "classify":
        d = parse_notation(args.input)
        report = classify(d, name=args.input, max_nodes=args.max_nodes)
        _emit_reports([_report_row(report)], args.format, out)
        return 0

    if args.command == "certify":
        d = parse_notation(args.input)
        cert = certify(d, max_nodes=args.max_nodes)
        if cert is None:
            out.write("no certificate over this diagram\n")
            return 0
        if not verify_certificate(cert):
            raise AssertionError("search produced an unverifiable certificate")
        if args.format == "json":
            json.dump(certificate_json(cert), out, indent=2)
            out.write("\n")
        else:
            out.write(certificate_text(cert) + "\n")
        return 0

    if args.command == "batch":
        entries = load_corpus(args.file)
        tasks = [(e.name, e.source, args.max_nodes) for e in entries]
        if args.parallel and tasks:
            with ProcessPoolExecutor() as pool:
                rows = list(pool.map(_classify_entry, tasks))
        else:
            rows = [_classify_entry(t) for t in tasks]
        _emit_reports(rows, args.format, out)
        return 2 if any(r["verdict"] == "error:budget-exceeded" for r in rows) else 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
