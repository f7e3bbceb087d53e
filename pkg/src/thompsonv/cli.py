"""Command-line interface.

One subcommand per capability; every subcommand takes --json for a
machine-readable envelope documented in docs/cli-schema.json.  Exit codes:
0 on success, 1 on a domain error (a violated precondition), 2 on a parse
error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from . import algebra, generators, normalform, subgroups, tables, words
from .words import ParseError

DEFAULT_SEED = 97


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonv",
        description="Exact computation in Thompson's group V")
    sub = parser.add_subparsers(required=True, metavar="command")

    p = sub.add_parser("eval", help="evaluate a generator word to a table")
    p.add_argument("word", help="whitespace-separated generator tokens, e.g. 'sigma theta^-1'")
    p.add_argument("--balanced", action="store_true",
                   help="use the logarithmic-depth composition tree")
    _common(p, handler=_cmd_eval)

    p = sub.add_parser("wp", help="decide the word problem")
    p.add_argument("word")
    _common(p, handler=_cmd_wp)

    p = sub.add_parser("compose", help="functional composite of two tables (second first)")
    p.add_argument("second")
    p.add_argument("first")
    p.add_argument("--extend", action="store_true",
                   help="apply the maximum extension to the composite")
    _common(p, handler=_cmd_compose)

    p = sub.add_parser("reduce", help="maximum extension of a table")
    p.add_argument("table")
    _common(p, handler=_cmd_reduce)

    p = sub.add_parser("factor", help="canonical factorization beta * pi * alpha")
    p.add_argument("table")
    _common(p, handler=_cmd_factor)

    p = sub.add_parser("compile", help="compile a table to a generator word")
    p.add_argument("table")
    _common(p, handler=_cmd_compile)

    p = sub.add_parser("distortion", help="distortion witness for a free word, e.g. 'a^3 b^-2'")
    p.add_argument("word")
    _common(p, handler=_cmd_distortion)

    alg = sub.add_parser("algebra", help="polycyclic monoid algebra operations")
    alg_sub = alg.add_subparsers(required=True, metavar="operation")
    p = alg_sub.add_parser("mul", help="product of two sums")
    p.add_argument("left")
    p.add_argument("right")
    _common(p, handler=_cmd_algebra_mul)
    p = alg_sub.add_parser("reduce", help="normal form of a unary sum modulo aa^-1 + bb^-1 -> 1")
    p.add_argument("sum")
    _common(p, handler=_cmd_algebra_reduce)
    p = alg_sub.add_parser("from-table", help="unary sum of a table")
    p.add_argument("table")
    _common(p, handler=_cmd_algebra_from_table)

    p = sub.add_parser("enumerate", help="all maximal prefix codes of a given size")
    p.add_argument("n", type=int)
    _common(p, handler=_cmd_enumerate)

    p = sub.add_parser("bench", help="sequential vs balanced evaluation timings (CSV)")
    p.add_argument("--sizes", default="1,4,16,64",
                   help="comma-separated word lengths (default 1,4,16,64)")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--parallel", type=int, default=0, metavar="WORKERS",
                   help="also time balanced evaluation on a thread pool")
    _common(p, handler=_cmd_bench)

    return parser


def _common(p: argparse.ArgumentParser, handler) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="seed for any randomized subcommand (default %(default)s)")
    p.set_defaults(handler=handler)


def _table_payload(t: tables.Table) -> dict:
    return tables.to_json_dict(t)


def _cmd_eval(args):
    word = generators.parse_genword(args.word)
    t = (generators.evaluate_balanced(word) if args.balanced
         else generators.evaluate_sequential(word))
    return ({"command": "eval", "input": args.word, "balanced": args.balanced,
             "table": _table_payload(t)},
            tables.format_table(t))


def _cmd_wp(args):
    word = generators.parse_genword(args.word)
    witness = generators.find_witness(word)
    payload = {"command": "wp", "identity": witness is None,
               "witness": witness if witness is None else words.format_word(witness)}
    return payload, ("IDENTITY" if witness is None
                     else f"WITNESS {words.format_word(witness)}")


def _cmd_compose(args):
    second = tables.parse_table(args.second)
    first = tables.parse_table(args.first)
    t = tables.compose(second, first)
    if args.extend:
        t = tables.max_extend(t)
    return ({"command": "compose", "extend": args.extend,
             "table": _table_payload(t)},
            tables.format_table(t))


def _cmd_reduce(args):
    t = tables.max_extend(tables.parse_table(args.table))
    return ({"command": "reduce", "table": _table_payload(t)},
            tables.format_table(t))


def _cmd_factor(args):
    g = tables.max_extend(tables.parse_table(args.table))
    fact = normalform.canonical_factor(g)
    payload = {"command": "factor",
               "alpha": _table_payload(fact.alpha),
               "pi": _table_payload(fact.pi),
               "beta": _table_payload(fact.beta)}
    text = "\n".join([f"alpha = {tables.format_table(fact.alpha)}",
                      f"pi    = {tables.format_table(fact.pi)}",
                      f"beta  = {tables.format_table(fact.beta)}"])
    return payload, text


def _cmd_compile(args):
    g = tables.max_extend(tables.parse_table(args.table))
    word = normalform.element_to_word(g)
    n = g.size
    denom = n * (1 + math.ceil(math.log2(n))) if n > 1 else 1
    ratio = len(word) / denom
    payload = {"command": "compile", "word": generators.format_genword(word),
               "length": len(word), "table_size": n, "ratio": ratio}
    text = (f"{generators.format_genword(word) or '(empty word)'}\n"
            f"length {len(word)}  table-size {n}  ratio {ratio:.3f}")
    return payload, text


def _cmd_distortion(args):
    mu = subgroups.parse_free_word(args.word)
    if not mu:
        raise ValueError("the empty free word has no distortion witness")
    report = subgroups.verify_distortion(mu)
    payload = {"command": "distortion",
               "witness": words.format_word(report.witness.y),
               "witness_length": len(report.witness.y),
               "free_length": report.free_length,
               "table_size": report.table_size,
               "closed_form_matches": report.closed_form_matches,
               "witness_exceeds_free_length": report.witness_exceeds_free_length,
               "table_size_exceeds_free_length": report.table_size_exceeds_free_length}
    text = "\n".join([
        f"witness {words.format_word(report.witness.y)}",
        f"witness length {len(report.witness.y)}  free length {report.free_length}"
        f"  table size {report.table_size}",
        f"closed-form matches: {report.closed_form_matches}",
        f"witness > free length: {report.witness_exceeds_free_length}",
        f"table size > free length: {report.table_size_exceeds_free_length}"])
    return payload, text


def _cmd_algebra_mul(args):
    product = algebra.multiply(algebra.parse_sum(args.left),
                               algebra.parse_sum(args.right))
    return ({"command": "algebra-mul", "sum": algebra.format_sum(product)},
            algebra.format_sum(product))


def _cmd_algebra_reduce(args):
    reduced = algebra.reduce_mod_iv(algebra.parse_sum(args.sum))
    return ({"command": "algebra-reduce", "sum": algebra.format_sum(reduced)},
            algebra.format_sum(reduced))


def _cmd_algebra_from_table(args):
    s = algebra.sigma_of(tables.parse_table(args.table))
    return ({"command": "algebra-from-table", "sum": algebra.format_sum(s)},
            algebra.format_sum(s))


def _cmd_enumerate(args):
    codes = words.enumerate_maximal_codes(args.n)
    payload = {"command": "enumerate", "n": args.n, "count": len(codes),
               "codes": [list(c) for c in codes]}
    text = "\n".join([str(len(codes))] + [words.format_code(c) for c in codes])
    return payload, text


def _cmd_bench(args):
    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    symbols = [(name, sign) for name in generators.GENERATOR_NAMES
               for sign in (1, -1)]
    rows = []
    for n in sizes:
        for trial in range(args.trials):
            word = tuple(rng.choice(symbols) for _ in range(n))
            row = {"n": n, "trial": trial}
            row["sequential_s"] = _timed(generators.evaluate_sequential, word)
            row["balanced_s"] = _timed(generators.evaluate_balanced, word)
            if args.parallel > 1:
                row["parallel_s"] = _timed(
                    lambda w: generators.evaluate_balanced(w, max_workers=args.parallel),
                    word)
            rows.append(row)
    header = list(rows[0].keys()) if rows else []
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            f"{row[k]:.6f}" if isinstance(row[k], float) else str(row[k])
            for k in header))
    return {"command": "bench", "rows": rows}, "\n".join(lines)


def _timed(fn, arg) -> float:
    start = time.perf_counter()
    fn(arg)
    return time.perf_counter() - start


if __name__ == "__main__":
    sys.exit(main())
