"""Command line interface.

Exit codes: 0 for a positive answer, 1 for a negative one (no match,
not a factor, inconclusive), 2 for bad input, 3 when a size or
enumeration cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .avoidability import (
    Verdict,
    is_unavoidable_by_ranking,
    is_unavoidable_by_reduction,
)
from .compressed import compose, compress, decompress
from .errors import EnumerationLimitError, NotAFactorError, SizeLimitError
from .matching import (
    DEFAULT_ENUM_LIMIT,
    RankedPattern,
    compressed_embedding,
    count_instances,
    enumerate_instances,
    instance_length,
    shortest_instance,
)
from .verification import run_bench, run_small_suite
from .words import first_violation, format_word, generate_zimin, parse_word

FORMAT_VERSION = "1"


def parse_code(text: str) -> tuple:
    parts = [p for p in text.replace(",", " ").split() if p]
    return tuple(int(p) for p in parts)


def format_code(code) -> str:
    return ",".join(str(x) for x in code)


def parse_pattern(text: str) -> tuple:
    """Single token means one variable per character, otherwise the
    tokens are the variable names."""
    tokens = text.split()
    if len(tokens) == 1:
        return tuple(tokens[0])
    return tuple(tokens)


def parse_ranks(text: str) -> dict:
    ranks: dict = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        var, _, value = item.partition("=")
        if not _:
            raise ValueError(f"expected VAR=RANK, got {item!r}")
        ranks[var.strip()] = int(value)
    return ranks


def _emit(args, payload: dict, text: str):
    if args.json:
        payload = {"format_version": FORMAT_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def _valuation_payload(valuation) -> dict:
    return {str(var): list(code) for var, code in valuation.items()}


def _valuation_text(pattern: RankedPattern, valuation) -> str:
    return "\n".join(
        f"{var} = {format_code(valuation[var])}" for var in pattern.variables
    )


def cmd_gen(args) -> int:
    word = generate_zimin(args.order)
    _emit(args, {"word": list(word)}, format_word(word))
    return 0


def cmd_factor(args) -> int:
    word = parse_word(args.word)
    violation = first_violation(word)
    ok = violation is None
    _emit(
        args,
        {"factor": ok, "violation": violation},
        "FACTOR" if ok else f"NOT-FACTOR (letter {violation})",
    )
    return 0 if ok else 1


def cmd_compress(args) -> int:
    word = parse_word(args.word)
    code = compress(word)
    _emit(args, {"code": list(code)}, format_code(code))
    return 0


def cmd_decompress(args) -> int:
    word = decompress(parse_code(args.code))
    _emit(args, {"word": list(word)}, format_word(word))
    return 0


def cmd_concat(args) -> int:
    code = compose([parse_code(c) for c in args.codes])
    _emit(args, {"code": list(code)}, format_code(code))
    return 0


def _ranked(args) -> RankedPattern:
    return RankedPattern(parse_pattern(args.pattern), parse_ranks(args.ranks))


def cmd_match(args) -> int:
    rp = _ranked(args)
    res = compressed_embedding(rp)
    if res is None:
        _emit(args, {"valuation": None}, "NO-MATCH")
        return 1
    _emit(
        args,
        {"valuation": _valuation_payload(res.valuation), "l": res.free_components},
        _valuation_text(rp, res.valuation) + f"\nl = {res.free_components}",
    )
    return 0


def cmd_shortest(args) -> int:
    rp = _ranked(args)
    res = shortest_instance(rp)
    if res is None:
        _emit(args, {"valuation": None}, "NO-MATCH")
        return 1
    length = instance_length(rp, res.valuation)
    _emit(
        args,
        {"valuation": _valuation_payload(res.valuation), "length": length},
        _valuation_text(rp, res.valuation) + f"\nlength = {length}",
    )
    return 0


def cmd_count(args) -> int:
    count = count_instances(_ranked(args))
    _emit(args, {"count": count}, str(count))
    return 0


def cmd_enumerate(args) -> int:
    rp = _ranked(args)
    instances = enumerate_instances(rp, limit=args.limit)
    lines = [
        " ".join(f"{var}={format_code(val[var])}" for var in rp.variables)
        for val in instances
    ]
    _emit(
        args,
        {
            "count": len(instances),
            "valuations": [_valuation_payload(v) for v in instances],
        },
        "\n".join(lines) if lines else "NO-MATCH",
    )
    return 0 if instances else 1


def cmd_avoid(args) -> int:
    pattern = parse_pattern(args.pattern)
    payload: dict = {"verdict": None, "ranking": None, "valuation": None, "trace": None}
    lines: list[str] = []
    verdict = None
    if args.method in ("ranking", "both"):
        rk = is_unavoidable_by_ranking(pattern)
        verdict = rk.verdict
        if rk.ranking is not None:
            payload["ranking"] = {str(v): r for v, r in rk.ranking.items()}
            lines.append(
                "ranking: " + ", ".join(f"{v}={r}" for v, r in rk.ranking.items())
            )
        if rk.match is not None:
            payload["valuation"] = _valuation_payload(rk.match.valuation)
    if args.method in ("reduction", "both"):
        rd = is_unavoidable_by_reduction(pattern, args.max_size)
        if verdict is None or verdict is Verdict.INCONCLUSIVE:
            verdict = rd.verdict
        elif rd.verdict is not Verdict.INCONCLUSIVE and rd.verdict is not verdict:
            print("error: deciders disagree, please report this input", file=sys.stderr)
            return 1
        if rd.trace:
            payload["trace"] = [
                ["".join(str(s) for s in pat), sorted(str(s) for s in deleted)]
                for pat, deleted in rd.trace
            ]
            lines.extend(
                "delete {%s} from %s" % (",".join(sorted(map(str, deleted))), "".join(map(str, pat)))
                for pat, deleted in rd.trace
            )
    payload["verdict"] = verdict.value
    _emit(args, payload, "\n".join([verdict.value.upper()] + lines))
    return 1 if verdict is Verdict.INCONCLUSIVE else 0


def cmd_verify(args) -> int:
    code = 0
    if args.bench:
        sizes = tuple(int(s) for s in args.sizes.split(",")) if args.sizes else (50000, 100000)
        rows = run_bench(sizes)
        if args.json:
            payload = {
                "format_version": FORMAT_VERSION,
                "bench": [
                    {"n": n, "top_rank": k, "seconds": sec, "l": l, "cells": cells}
                    for n, k, sec, l, cells in rows
                ],
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            print("n\ttop_rank\tseconds\tl\tcells")
            for n, k, sec, l, cells in rows:
                print(f"{n}\t{k}\t{sec:.3f}\t{l}\t{cells}")
        return code
    rows = run_small_suite()
    failed = [name for name, ok in rows if not ok]
    if args.json:
        payload = {
            "format_version": FORMAT_VERSION,
            "suite": [{"name": name, "passed": ok} for name, ok in rows],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for name, ok in rows:
            print(f"{name}: {'PASS' if ok else 'FAIL'}")
        print(f"{len(rows) - len(failed)}/{len(rows)} passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")

    parser = argparse.ArgumentParser(
        prog="zimin",
        description="Zimin words, compressed factors, and ranked pattern matching",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print the Zimin word Z_ORDER")
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("factor", parents=[common], help="test the Zimin factor condition")
    p.add_argument("word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("compress", parents=[common], help="record letters of a factor")
    p.add_argument("word")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", parents=[common], help="expand a code to its word")
    p.add_argument("code")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser(
        "concat", parents=[common], help="code of a concatenation of coded factors"
    )
    p.add_argument("codes", nargs="+")
    p.set_defaults(func=cmd_concat)

    for name, func, extra in (
        ("match", cmd_match, "canonical match of a ranked pattern"),
        ("shortest", cmd_shortest, "match with the shortest instance"),
        ("count", cmd_count, "number of matches"),
        ("enumerate", cmd_enumerate, "list all matches"),
    ):
        p = sub.add_parser(name, parents=[common], help=extra)
        p.add_argument("pattern", help="variable names, e.g. 'aba' or 'x y x'")
        p.add_argument("--ranks", required=True, help="comma list, e.g. a=2,b=1")
        if name == "enumerate":
            p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
        p.set_defaults(func=func)

    p = sub.add_parser("avoid", parents=[common], help="decide unavoidability")
    p.add_argument("pattern")
    p.add_argument("--method", choices=("ranking", "reduction", "both"), default="both")
    p.add_argument(
        "--max-size",
        type=int,
        default=None,
        help="cap on deleted free set size (reduction only)",
    )
    p.set_defaults(func=cmd_avoid)

    p = sub.add_parser("verify", parents=[common], help="run self checks")
    p.add_argument("--suite", action="store_true", help="run the small suite (default)")
    p.add_argument("--bench", action="store_true", help="run the scaling benchmark")
    p.add_argument("--sizes", default=None, help="bench sizes, comma separated")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SizeLimitError, EnumerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotAFactorError as exc:
        print(f"NOT-FACTOR: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
