"""Evaluation of f(n) by residue-class dispatch, plus a benchmark against plain iteration.

On a polynomial class f(n) is a Horner evaluation of a fixed rational
polynomial, so the cost is polylogarithmic in n. On an exponential class
the output already has Theta(n) bits, so forward iteration is polynomial in
the size of the output.
"""
import enum
import time
from dataclasses import dataclass

from . import kernels
from .classifier import Kind, classify
from .errors import BudgetExceeded, ConsistencyError, SpecError
from .recurrence import eval_simple, window_at


class EvalMethod(str, enum.Enum):
    AUTO = "auto"
    SIMPLE = "simple"
    MATRIX = "matrix"
    # dispatch like AUTO, but exponential classes iterate their own section recurrence
    PIO = "pio"


def eval_matrix(spec, n):
    """f(n) from the window M**(n-1) (f(1), ..., f(k))."""
    if n < 1:
        raise SpecError(f"index must be >= 1, got {n}", field="n")
    if spec.order == 0:
        return 0
    return window_at(spec, n)[0]


def eval_polynomial_class(info, n):
    num, den = info.scaled_poly
    value = kernels.horner(num, n)
    q, r = divmod(value, den)
    if r:
        raise ConsistencyError(f"polynomial class {info.residue} gives a non-integer at n={n}")
    return q


def eval_pio(cls, n, method=EvalMethod.AUTO, deadline=None):
    """Exact f(n) for the classified sequence."""
    method = EvalMethod(method)
    if n < 1:
        raise SpecError(f"index must be >= 1, got {n}", field="n")
    if method is EvalMethod.SIMPLE:
        return eval_simple(cls.spec, n, deadline)
    if method is EvalMethod.MATRIX:
        return eval_matrix(cls.spec, n)
    info = cls.class_of(n)
    if info.kind is Kind.POLYNOMIAL:
        return eval_polynomial_class(info, n)
    if method is EvalMethod.PIO:
        return eval_simple(info.section_spec, (n - info.residue) // cls.m + 1, deadline)
    return eval_simple(cls.spec, n, deadline)


def output_bits(value):
    """Bit length of 2 + |value|, the output-size term of the PIO bound."""
    return (abs(value) + 2).bit_length()


@dataclass
class BenchRow:
    n: int
    residue: int
    kind: str
    auto_seconds: float
    simple_seconds: float = None
    auto_ops: int = 0
    simple_ops: int = None
    output_bits: int = 0
    agree: bool = None
    note: str = ""


def _timed(fn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def _iteration_ops(spec, n):
    nnz = sum(1 for a in spec.coeffs if a)
    return max(n - spec.order, 0) * nnz


def bench_compare(spec, indices, budget=30.0, cls=None, repeat=5):
    """Time AUTO against forced forward iteration at each index.

    Forward iteration gets ``budget`` seconds per index; once it runs out,
    that index and every larger one are reported as skipped.
    """
    if cls is None:
        cls = classify(spec)
    rows = []
    skip_from = None
    for n in indices:
        info = cls.class_of(n)
        poly_path = info.kind is Kind.POLYNOMIAL
        reps = repeat if poly_path or n <= 10_000 else 1
        value, t_auto = _timed(lambda: eval_pio(cls, n), reps)
        auto_ops = len(info.poly.coeffs) if poly_path else _iteration_ops(spec, n)
        row = BenchRow(n, info.residue, info.kind.value, t_auto, auto_ops=auto_ops, output_bits=output_bits(value))
        if skip_from is not None and n >= skip_from:
            row.note = f"simple skipped: budget exhausted at n={skip_from}"
        else:
            t0 = time.perf_counter()
            try:
                simple = eval_simple(spec, n, deadline=t0 + budget)
            except BudgetExceeded as exc:
                skip_from = n if skip_from is None else min(skip_from, n)
                row.note = f"simple skipped: {exc} within {budget:g}s"
            else:
                row.simple_seconds = time.perf_counter() - t0
                row.simple_ops = _iteration_ops(spec, n)
                row.agree = simple == value
        rows.append(row)
    return rows
