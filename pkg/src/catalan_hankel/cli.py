"""Command-line front end.

Exit codes: 0 success, 1 data-level failure (short or unreadable sequence,
disagreeing verification), 2 usage error.
"""

import argparse
import json
import sys
import time

from . import closed_form, exact_linalg
from .errors import (
    DimensionCapExceeded,
    EmptySequence,
    MethodUnavailable,
    ParseError,
    SequenceIOError,
    SequenceTooShort,
)
from .hankel import HankelSpec, cigler_matrix, hankel_matrix, hankel_transform
from .sequences import CATALAN, catalan_prefix, load_sequence, read_sequence_file

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "csv", "markdown")
DET_METHODS = ("auto", "laplace", "bareiss", "cigler", "closed-form")
BENCH_REPEATS = 3


# -- rendering ---------------------------------------------------------------

def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _jsonable(value):
    # ints become decimal strings: most JSON readers lose precision past 2**53
    if isinstance(value, bool) or isinstance(value, float) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_json(doc):
    return json.dumps(_jsonable(doc), separators=(",", ":"))


def render_csv(columns, rows):
    lines = [",".join(columns)]
    lines += [",".join(_cell(row[c]) for c in columns) for row in rows]
    return "\n".join(lines)


def render_markdown(columns, rows):
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    lines += ["| " + " | ".join(_cell(row[c]) for c in columns) + " |" for row in rows]
    return "\n".join(lines)


def render_plain(columns, rows):
    return "\n".join(" ".join(_cell(row[c]) for c in columns) for row in rows)


def emit(fmt, doc, columns, rows, plain_columns=None):
    if fmt == "json":
        text = render_json(doc)
    elif fmt == "csv":
        text = render_csv(columns, rows)
    elif fmt == "markdown":
        text = render_markdown(columns, rows)
    else:
        text = render_plain(plain_columns or columns, rows)
    if text:
        print(text)


def _sig3(x):
    return float(f"{x:.3g}")


def _elapsed_ms(start):
    return _sig3((time.perf_counter() - start) * 1000.0)


# -- argument types ----------------------------------------------------------

def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text):
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _int_list(text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty list")
    return [_non_negative(p.strip()) for p in parts]


def _add_format(p, default="plain"):
    p.add_argument("--format", choices=FORMATS, default=default)


def _add_sequence(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument(
        "--seq",
        default="catalan",
        help="'catalan' (default) or an inline comma-separated list of integers",
    )
    g.add_argument("--seq-file", metavar="PATH", help="file with one integer per line")


def _resolve_sequence(args):
    if args.seq_file is not None:
        return read_sequence_file(args.seq_file)
    return load_sequence(args.seq)


# -- commands ----------------------------------------------------------------

def cmd_catalan(args):
    values = catalan_prefix(args.count)
    rows = [{"n": k, "value": v} for k, v in enumerate(values)]
    doc = {"sequence": "catalan", "values": values}
    emit(args.format, doc, ["n", "value"], rows, plain_columns=["value"])
    return EXIT_OK


def _hankel_value(args, source):
    method = args.method
    if method in ("cigler", "closed-form"):
        if not source.is_catalan:
            raise MethodUnavailable(f"method {method!r} applies only to --seq catalan")
        if method == "cigler":
            return exact_linalg.det_bareiss(cigler_matrix(args.n, args.r))
        return closed_form.eval_general(args.n, args.r)
    m = hankel_matrix(HankelSpec(source, args.n, args.r))
    return exact_linalg.det(m, method)


def cmd_hankel_det(args):
    source = _resolve_sequence(args)
    start = time.perf_counter()
    value = _hankel_value(args, source)
    elapsed = _elapsed_ms(start)
    row = {
        "n": args.n,
        "r": args.r,
        "sequence": source.describe(),
        "method": args.method,
        "value": value,
        "elapsed_ms": elapsed,
    }
    columns = list(row)
    emit(args.format, row, columns, [row], plain_columns=["value"])
    if args.format == "plain":
        meta = " ".join(f"{c}={row[c]}" for c in columns if c != "value")
        print(f"# {meta}", file=sys.stderr)
    return EXIT_OK


def cmd_transform(args):
    source = _resolve_sequence(args)
    values = hankel_transform(source, args.r, args.max_n)
    rows = [{"n": n, "value": v} for n, v in enumerate(values)]
    doc = {"sequence": source.describe(), "r": args.r, "max_n": args.max_n, "values": values}
    emit(args.format, doc, ["n", "value"], rows, plain_columns=["value"])
    return EXIT_OK


VERIFY_COLUMNS = ["r", "n", "direct", "cigler", "closed_form", "agree"]


def cmd_verify(args):
    records = closed_form.sweep(args.max_n, args.max_r)
    rows = [
        {
            "r": rec.shift_r,
            "n": rec.order_n,
            "direct": rec.direct_value,
            "cigler": rec.cigler_value,
            "closed_form": rec.closed_form_value,
            "agree": rec.agree,
        }
        for rec in records
    ]
    bad = [rec for rec in records if not rec.agree]
    doc = {
        "max_n": args.max_n,
        "max_r": args.max_r,
        "all_agree": not bad,
        "records": rows,
    }
    emit(args.format, doc, VERIFY_COLUMNS, rows)
    for rec in bad:
        print(
            f"disagreement at n={rec.order_n}, r={rec.shift_r}: "
            f"direct={rec.direct_value} cigler={rec.cigler_value} "
            f"closed_form={rec.closed_form_value}",
            file=sys.stderr,
        )
    return EXIT_DATA if bad else EXIT_OK


def _best_of(fn, repeats=BENCH_REPEATS):
    best = None
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return value, best * 1000.0


BENCH_COLUMNS = ["n", "r", "bareiss_ms", "closed_form_ms", "speedup", "equal"]


def cmd_bench(args):
    rows = []
    for r in args.r:
        for n in args.n:
            m = hankel_matrix(HankelSpec(CATALAN, n, r))
            direct, t_direct = _best_of(lambda: exact_linalg.det_bareiss(m))
            formula, t_formula = _best_of(lambda: closed_form.eval_general(n, r))
            rows.append({
                "n": n,
                "r": r,
                "bareiss_ms": _sig3(t_direct),
                "closed_form_ms": _sig3(t_formula),
                "speedup": _sig3(t_direct / t_formula) if t_formula > 0 else None,
                "equal": direct == formula,
                "value": direct,
            })
    doc = {"repeats": BENCH_REPEATS, "results": rows}
    emit(args.format, doc, BENCH_COLUMNS, rows)
    unequal = [row for row in rows if not row["equal"]]
    for row in unequal:
        print(f"value mismatch at n={row['n']}, r={row['r']}", file=sys.stderr)
    return EXIT_DATA if unequal else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catalan-hankel",
        description="Exact Hankel determinants of shifted Catalan and user-supplied sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalan", help="print C_0 .. C_{count-1}")
    p.add_argument("--count", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("hankel-det", help="det(a_{i+j+r}) for 0 <= i, j < n")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--r", type=_non_negative, default=0)
    p.add_argument("--method", choices=DET_METHODS, default="auto")
    _add_sequence(p)
    _add_format(p)
    p.set_defaults(func=cmd_hankel_det)

    p = sub.add_parser("transform", help="Hankel transform for n = 0 .. max-n")
    p.add_argument("--r", type=_non_negative, default=0)
    p.add_argument("--max-n", type=_non_negative, required=True)
    _add_sequence(p)
    _add_format(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="compare direct, Cigler and closed-form values on a grid")
    p.add_argument("--max-n", type=_non_negative, required=True)
    p.add_argument("--max-r", type=_non_negative, required=True)
    _add_format(p, default="markdown")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time Bareiss against the closed form")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated orders")
    p.add_argument("--r", type=_int_list, required=True, help="comma-separated shifts")
    _add_format(p, default="markdown")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MethodUnavailable, DimensionCapExceeded) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SequenceTooShort, ParseError, EmptySequence, SequenceIOError) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
