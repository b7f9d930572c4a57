"""Batch normalization command line.

Reads newline-delimited UTF-8 text (or JSON lines with --jsonl), writes
one normalized line per input line, and never lets a bad line abort the
batch. Exit codes: 0 success, 1 I/O error, 2 configuration/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Iterable, Iterator, TextIO

from .dictionaries import DictionaryError
from .pipeline import VietnameseNormalizer

_BATCH_LINES = 1024


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vntextnorm",
        description="Normalize Vietnamese text to its fully spoken form, line by line.",
    )
    parser.add_argument("--input", metavar="FILE", help="read from FILE instead of stdin")
    parser.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")
    parser.add_argument(
        "--jsonl",
        action="store_true",
        help='JSON-lines mode: {"id","text"} in, {"id","text","normalized"} out',
    )
    parser.add_argument(
        "--trace",
        action="store_true",
        help="include trace records in JSONL output (requires --jsonl)",
    )
    parser.add_argument(
        "--no-preprocess",
        action="store_true",
        help="dictionary-only mode: skip date/time/currency/percent/number passes",
    )
    parser.add_argument("--acronyms", metavar="CSV", help="custom acronym dictionary")
    parser.add_argument("--loanwords", metavar="CSV", help="custom loanword dictionary")
    parser.add_argument(
        "--bench",
        type=int,
        metavar="N",
        help="normalize the input N times and print utterances/minute",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="N",
        help="normalize lines in N parallel threads, preserving order",
    )
    return parser


def _batched(lines: Iterable[str], size: int) -> Iterator[list[str]]:
    iterator = iter(lines)
    while batch := list(islice(iterator, size)):
        yield batch


def _trace_json(result) -> list[dict]:
    return [
        {
            "pass": r.pass_id,
            "start": r.start,
            "end": r.end,
            "original": r.original,
            "replacement": r.replacement,
        }
        for r in result.trace
    ]


class _LineProcessor:
    def __init__(self, normalizer: VietnameseNormalizer, args: argparse.Namespace):
        self._normalizer = normalizer
        self._preprocess = not args.no_preprocess
        self._jsonl = args.jsonl
        self._trace = args.trace

    def process(self, numbered: tuple[int, str]) -> str:
        line_no, line = numbered
        if not self._jsonl:
            return self._normalizer.normalize(line, self._preprocess).text
        try:
            record = json.loads(line)
            if not isinstance(record, dict) or not isinstance(record.get("text"), str):
                raise ValueError("expected an object with a string 'text' field")
        except ValueError as exc:
            # The original line still goes to the output so line counts and
            # ids stay aligned for resumable corpus jobs.
            print(f"line {line_no}: skipping malformed JSONL: {exc}", file=sys.stderr)
            return line
        result = self._normalizer.normalize(record["text"], self._preprocess)
        record["normalized"] = result.text
        if self._trace:
            record["trace"] = _trace_json(result)
        return json.dumps(record, ensure_ascii=False)


def _run_bench(normalizer: VietnameseNormalizer, lines: list[str], repeats: int,
               preprocess: bool, sink: TextIO) -> None:
    total = len(lines) * repeats
    start = time.perf_counter()
    for _ in range(repeats):
        for line in lines:
            normalizer.normalize(line, preprocess)
    elapsed = time.perf_counter() - start
    rate = total / elapsed * 60 if elapsed > 0 else float("inf")
    print(f"{total} utterances in {elapsed:.3f} s: {rate:.0f} utterances/minute", file=sink)


def _stripped_lines(handle: TextIO) -> Iterator[str]:
    for line in handle:
        yield line.rstrip("\r\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.trace and not args.jsonl:
        parser.error("--trace requires --jsonl")
    if args.bench is not None and args.bench < 1:
        parser.error("--bench must be a positive repeat count")
    if args.threads < 1:
        parser.error("--threads must be at least 1")

    try:
        normalizer = VietnameseNormalizer(
            acronyms_path=args.acronyms, loanwords_path=args.loanwords
        )
    except DictionaryError as exc:
        print(f"vntextnorm: {exc}", file=sys.stderr)
        return 2

    for stream in (sys.stdin, sys.stdout):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")

    try:
        source = open(args.input, encoding="utf-8") if args.input else sys.stdin
    except OSError as exc:
        print(f"vntextnorm: {exc}", file=sys.stderr)
        return 1
    try:
        sink = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    except OSError as exc:
        if args.input:
            source.close()
        print(f"vntextnorm: {exc}", file=sys.stderr)
        return 1

    processor = _LineProcessor(normalizer, args)
    try:
        if args.bench is not None:
            _run_bench(
                normalizer, list(_stripped_lines(source)), args.bench,
                not args.no_preprocess, sink,
            )
            return 0
        numbered = enumerate(_stripped_lines(source), start=1)
        if args.threads == 1:
            for item in numbered:
                print(processor.process(item), file=sink, flush=sink is sys.stdout)
        else:
            with ThreadPoolExecutor(max_workers=args.threads) as pool:
                for batch in _batched(numbered, _BATCH_LINES):
                    for out in pool.map(processor.process, batch):
                        print(out, file=sink, flush=sink is sys.stdout)
        return 0
    except OSError as exc:
        print(f"vntextnorm: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.input:
            source.close()
        if args.output:
            sink.close()


if __name__ == "__main__":
    sys.exit(main())
