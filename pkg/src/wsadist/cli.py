"""Command-line surface: ``wsadist dist|normalize|detect``.

Exit codes: 0 success, 2 bad flags or bad cost-model document,
3 unreadable input, 4 distance size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cost_model import CostModel, ModelError, appendix_model, load_model_file, unit_model
from .distance import (
    Algorithm,
    SizeLimitError,
    levenshtein_standard,
    levenshtein_ws_agnostic,
    ws_agnostic_naive,
)
from .normalizer import NormalizationMode, normalize_line
from .table_detect import DetectConfig, detect_tables

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_SIZE = 4

_MODES = {
    "standard": levenshtein_standard,
    "ws-agnostic": levenshtein_ws_agnostic,
    "naive-oracle": ws_agnostic_naive,
}


def _resolve_model(spec: str) -> CostModel:
    if spec == "unit":
        return unit_model()
    if spec == "appendix-a":
        return appendix_model()
    return load_model_file(spec)


def _read_text(operand: str) -> str:
    if operand == "-":
        return sys.stdin.read()
    with open(operand, "r", encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsadist",
        description="Trailing-whitespace-agnostic string distances, "
        "shape normalization, and plaintext table detection.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, with_model=True):
        p.add_argument(
            "--normalize",
            choices=[m.value for m in NormalizationMode],
            default="cased",
            help="shape normalization applied to inputs (default: cased)",
        )
        p.add_argument(
            "--format", choices=["text", "json"], default="text",
            help="output format (default: text)",
        )
        if with_model:
            p.add_argument(
                "--model", default="appendix-a",
                help="cost model: 'unit', 'appendix-a', or a path to a "
                "model file (default: appendix-a)",
            )

    p_dist = sub.add_parser("dist", help="edit distance between two strings or files")
    p_dist.add_argument("--mode", choices=sorted(_MODES), default="ws-agnostic")
    p_dist.add_argument(
        "--files", action="store_true",
        help="treat the operands as files compared line-by-line "
        "('-' reads standard input)",
    )
    p_dist.add_argument("--tab-width", type=int, default=8)
    add_common(p_dist)
    p_dist.add_argument("left")
    p_dist.add_argument("right")

    p_norm = sub.add_parser("normalize", help="normalize a text stream")
    add_common(p_norm, with_model=False)
    p_norm.add_argument("input", nargs="?", default="-")

    p_det = sub.add_parser("detect", help="detect table regions in a text stream")
    p_det.add_argument("--threshold", type=float, default=0.5)
    p_det.add_argument("--min-rows", type=int, default=3)
    p_det.add_argument("--tab-width", type=int, default=8)
    add_common(p_det)
    p_det.add_argument("input", nargs="?", default="-")
    return parser


def _run_dist(args) -> int:
    compute = _MODES[args.mode]
    model = _resolve_model(args.model)
    mode = NormalizationMode(args.normalize)

    def prepare(s: str) -> str:
        return normalize_line(s.expandtabs(args.tab_width), mode)

    if args.files:
        lines1 = _read_text(args.left).splitlines()
        lines2 = _read_text(args.right).splitlines()
        pairs = []
        for k in range(max(len(lines1), len(lines2))):
            a = lines1[k] if k < len(lines1) else ""
            b = lines2[k] if k < len(lines2) else ""
            pairs.append({"line": k, "cost": compute(prepare(a), prepare(b), model)})
        total = sum(p["cost"] for p in pairs)
        if args.format == "json":
            print(json.dumps({"pairs": pairs, "total": total}))
        else:
            for p in pairs:
                print(f"{p['line']}\t{p['cost']}")
            print(f"total\t{total}")
    else:
        cost = compute(prepare(args.left), prepare(args.right), model)
        if args.format == "json":
            print(json.dumps({"pairs": [{"line": 0, "cost": cost}], "total": cost}))
        else:
            print(cost)
    return EXIT_OK


def _run_normalize(args) -> int:
    mode = NormalizationMode(args.normalize)
    text = _read_text(args.input)
    out = []
    for raw in text.splitlines(keepends=True):
        body = raw.rstrip("\r\n")
        out.append(normalize_line(body, mode) + raw[len(body):])
    sys.stdout.write("".join(out))
    return EXIT_OK


def _run_detect(args) -> int:
    config = DetectConfig(
        threshold=args.threshold,
        min_rows=args.min_rows,
        mode=NormalizationMode(args.normalize),
        model=_resolve_model(args.model),
        tab_width=args.tab_width,
    )
    lines = _read_text(args.input).splitlines()
    regions = detect_tables(lines, config)
    if args.format == "json":
        print(json.dumps({
            "regions": [
                {"start_line": r.start_line, "end_line": r.end_line, "score": r.score}
                for r in regions
            ]
        }))
    else:
        for r in regions:
            print(f"{r.start_line} {r.end_line} {r.score:.4f}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "dist":
            return _run_dist(args)
        if args.subcommand == "normalize":
            return _run_normalize(args)
        return _run_detect(args)
    except ModelError as exc:
        print(f"wsadist: bad cost model: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"wsadist: {exc}", file=sys.stderr)
        return EXIT_USAGE if not isinstance(exc, SizeLimitError) else EXIT_SIZE
    except OSError as exc:
        print(f"wsadist: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
