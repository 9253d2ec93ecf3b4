"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded (modulus or
precision), 4 time budget exceeded. Documents and values go to stdout,
diagnostics to stderr.
"""
import argparse
import csv
import json
import sys
import time

from .classifier import classify
from .degeneracy import MODULUS_CAP_ENV, default_modulus_cap
from .documents import AnalysisDocument, parse_spec
from .errors import BudgetExceeded, ConsistencyError, ModulusCapExceeded, PrecisionExhausted, SpecError
from .evaluator import EvalMethod, bench_compare, eval_matrix, eval_pio
from .powersum import format_enclosure, power_sum, verify_powersum, zero_scan
from .recurrence import char_poly, eval_simple, section

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_BUDGET = 4

DEFAULT_BUDGET = 30.0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def _index_list(text):
    return [_positive_int(t) for t in text.split(",") if t.strip()]


def _read_spec(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecError(f"cannot read {path}: {exc.strerror}", field="input") from exc
    return parse_spec(text)


def _cap(args):
    return args.modulus_cap if args.modulus_cap is not None else default_modulus_cap()


def cmd_analyze(args, out):
    spec = _read_spec(args.input)
    doc = AnalysisDocument.from_classification(classify(spec, modulus_cap=_cap(args)))
    out.write(doc.to_json())


def cmd_eval(args, out):
    spec = _read_spec(args.input)
    method = EvalMethod(args.method)
    deadline = time.perf_counter() + args.budget if method is EvalMethod.SIMPLE else None
    if method is EvalMethod.SIMPLE:
        value = eval_simple(spec, args.n, deadline)
    elif method is EvalMethod.MATRIX:
        value = eval_matrix(spec, args.n)
    else:
        value = eval_pio(classify(spec, modulus_cap=_cap(args)), args.n, method)
    out.write(f"{value}\n")


_BENCH_FIELDS = ("n", "residue", "kind", "auto_seconds", "simple_seconds", "auto_ops", "simple_ops", "output_bits", "agree", "note")


def cmd_bench(args, out):
    spec = _read_spec(args.input)
    cls = classify(spec, modulus_cap=_cap(args))
    rows = bench_compare(spec, args.ns, budget=args.budget, cls=cls)
    if args.format == "json":
        payload = {"format_version": 1, "rows": [{f: getattr(r, f) for f in _BENCH_FIELDS} for r in rows]}
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    if args.format == "csv":
        w = csv.writer(out)
        w.writerow(_BENCH_FIELDS)
        for r in rows:
            w.writerow(["" if getattr(r, f) is None else getattr(r, f) for f in _BENCH_FIELDS])
        return
    out.write(f"{'n':>16} {'residue':>7} {'kind':>11} {'auto_s':>11} {'simple_s':>11} {'bits':>8}\n")
    for r in rows:
        simple = "skipped" if r.simple_seconds is None else f"{r.simple_seconds:.3e}"
        out.write(f"{r.n:>16} {r.residue:>7} {r.kind:>11} {r.auto_seconds:>11.3e} {simple:>11} {r.output_bits:>8}\n")
    for r in rows:
        if r.note:
            print(f"n={r.n}: {r.note}", file=sys.stderr)


def cmd_zeros(args, out):
    spec = _read_spec(args.input)
    zeros = zero_scan(spec, args.limit, cls=classify(spec, modulus_cap=_cap(args)))
    out.write((", ".join(str(z.n) for z in zeros) if zeros else "none") + "\n")
    if args.annotate:
        for z in zeros:
            out.write(f"n={z.n} residue={z.residue} kind={z.kind}\n")


def cmd_powersum(args, out):
    spec = _read_spec(args.input)
    S = power_sum(spec, args.precision)
    if not S.terms:
        out.write("empty power sum (zero sequence)\n")
        return
    out.write(f"precision {S.precision} bits, {len(S.terms)} distinct roots\n")
    for i, t in enumerate(S.terms, start=1):
        out.write(f"root {i}: {format_enclosure(t.root)}  multiplicity {t.multiplicity}\n")
        for d, c in enumerate(t.coeffs):
            out.write(f"  coeff n^{d}: {format_enclosure(c)}\n")
    check = verify_powersum(S, max(2 * spec.order, 1))
    status = "ok" if check.ok else f"FAILED at n={check.failures}"
    out.write(f"containment n=1..{check.N}: {status}\n")


def cmd_sections(args, out):
    spec = _read_spec(args.input)
    for j in range(1, args.m + 1):
        sec = section(spec, args.m, j)
        coeffs = ", ".join(str(a) for a in sec.coeffs)
        init = ", ".join(str(v) for v in sec.initial)
        out.write(f"section {j}: order {sec.order}; coeffs [{coeffs}]; initial [{init}]; char {char_poly(sec)}\n")


def build_parser():
    parser = _Parser(prog="pioformula", description="Exact PIO-time evaluation of integer linear recurrences.")
    parser.add_argument(
        "--modulus-cap",
        type=_positive_int,
        default=None,
        help=f"largest sectioning modulus to accept (default {default_modulus_cap()}, env {MODULUS_CAP_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="classify residue classes and print the analysis document")
    p.add_argument("input", nargs="?", default="-", help="spec file, '-' for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("eval", help="print f(n)")
    p.add_argument("input", help="spec file, '-' for stdin")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--method", choices=[m.value for m in EvalMethod], default="auto")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds allowed for --method simple")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bench", help="time dispatch evaluation against forward iteration")
    p.add_argument("input", help="spec file, '-' for stdin")
    p.add_argument("--ns", type=_index_list, required=True, help="comma-separated indices")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds per index for forward iteration")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("zeros", help="list n <= limit with f(n) = 0")
    p.add_argument("input", help="spec file, '-' for stdin")
    p.add_argument("--limit", type=_positive_int, default=1000)
    p.add_argument("--annotate", action="store_true", help="also print residue class and kind per zero")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("powersum", help="certified power-sum representation")
    p.add_argument("input", help="spec file, '-' for stdin")
    p.add_argument("--precision", type=_positive_int, default=64)
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("sections", help="minimal recurrences of the m-sections")
    p.add_argument("input", help="spec file, '-' for stdin")
    p.add_argument("--m", type=_positive_int, required=True)
    p.set_defaults(func=cmd_sections)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except SpecError as exc:
        where = f" [{exc.field}]" if exc.field else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ModulusCapExceeded, PrecisionExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BudgetExceeded as exc:
        print(f"error: time budget exceeded; {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
