"""Command-line front end: segment, eval, patterns, inspect, serve.

Exit codes: 0 success, 1 usage error, 2 data error (bad input file, bad
gold corpus), with diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from . import corpus_io, evaluation, patterns, script
from .segmenter import extract_syllables

STDIN_MARKER = "-"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; reserve 2 for data errors instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mayeksyl",
        description="Segment Meetei Mayek words into syllabic units, "
        "classify CV patterns and score against a gold corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument(
                "--input", "-i", default=STDIN_MARKER,
                help="input file, or '-' for standard input (default)",
            )
        p.add_argument(
            "--delimiter", "-d", default="/",
            help="syllable delimiter for rendered output (default '/')",
        )
        p.add_argument(
            "--format", "-f", choices=("plain", "tsv", "json"), default="plain",
            help="output format (default plain)",
        )

    p_segment = sub.add_parser("segment", help="segment words in running text")
    add_common(p_segment)

    p_eval = sub.add_parser("eval", help="score the segmenter against a gold corpus")
    p_eval.add_argument("--gold", "-g", required=True, help="gold corpus file")
    p_eval.add_argument("--beta", "-b", type=float, default=1.0,
                        help="F-score weight (default 1)")
    add_common(p_eval, with_input=False)

    p_patterns = sub.add_parser("patterns", help="pattern histogram over input text")
    add_common(p_patterns)

    p_inspect = sub.add_parser("inspect", help="dump the character inventory")
    add_common(p_inspect, with_input=False)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _open_input(path: str) -> TextIO:
    if path == STDIN_MARKER:
        return sys.stdin
    return open(path, encoding="utf-8")


def _check_delimiter(parser: argparse.ArgumentParser, delimiter: str) -> None:
    if not delimiter:
        parser.error("delimiter must not be empty")
    if any(script.classify(ch).category is not script.CharCategory.FOREIGN for ch in delimiter):
        parser.error("delimiter must not contain Meetei Mayek characters")


def _cmd_segment(args, out: TextIO) -> int:
    with _open_input(args.input) as handle:
        for line_no, raw in enumerate(handle, 1):
            results = corpus_io.segment_line(raw, line_no)
            if args.format == "plain":
                out.write(corpus_io.format_plain(results, args.delimiter) + "\n")
            elif args.format == "tsv":
                for r in results:
                    out.write(corpus_io.format_tsv(r, args.delimiter) + "\n")
            else:
                for r in results:
                    out.write(corpus_io.format_json(r) + "\n")
    return EXIT_OK


def _cmd_eval(args, out: TextIO) -> int:
    with open(args.gold, encoding="utf-8") as handle:
        golds = corpus_io.parse_gold(handle.read())
    systems = [extract_syllables(g.word) for g in golds]
    report = evaluation.evaluate(systems, golds, beta=args.beta)
    if args.format == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write(report.render_text() + "\n")
    return EXIT_OK


def _cmd_patterns(args, out: TextIO) -> int:
    with _open_input(args.input) as handle:
        results = corpus_io.segment_text(handle)
        hist = patterns.pattern_histogram(
            r.segmented for r in results if r.segmented is not None
        )
    if args.format == "json":
        payload = {p.value: n for p, n in hist.counts.items()}
        payload["unsegmented"] = hist.unsegmented
        out.write(json.dumps(payload) + "\n")
    else:
        for pattern, count in hist.counts.items():
            out.write(f"{pattern.value}\t{count}\n")
        out.write(f"unsegmented\t{hist.unsegmented}\n")
    return EXIT_OK


def _cmd_inspect(args, out: TextIO) -> int:
    if args.format == "json":
        for c in script.inventory():
            out.write(json.dumps({
                "codepoint": f"U+{c.codepoint:04X}",
                "class": c.char_class.category.value,
                "traditional_name": c.traditional_name,
                "romanization": c.romanization,
            }, ensure_ascii=False) + "\n")
    else:
        out.write(script.dump_inventory() + "\n")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if hasattr(args, "delimiter"):
        _check_delimiter(parser, args.delimiter)
    if getattr(args, "beta", 1.0) <= 0:
        parser.error("beta must be positive")

    try:
        if args.command == "segment":
            return _cmd_segment(args, sys.stdout)
        if args.command == "eval":
            return _cmd_eval(args, sys.stdout)
        if args.command == "patterns":
            return _cmd_patterns(args, sys.stdout)
        if args.command == "inspect":
            return _cmd_inspect(args, sys.stdout)
        return _cmd_serve(args)
    except OSError as exc:
        print(f"mayeksyl: cannot read input: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"mayeksyl: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
