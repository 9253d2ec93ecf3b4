"""Exact evaluation of integer linear recurrence sequences in time polynomial
in the sizes of n and f(n).

Residue classes modulo a computed m are split into classes on which f is a
rational polynomial (evaluated directly) and classes on which f grows
exponentially (evaluated by the recurrence).
"""
from .algebra import Poly
from .classifier import Classification, Kind, ResidueClassInfo, classify
from .degeneracy import UnityReport, compute_modulus
from .errors import BudgetExceeded, ConsistencyError, ModulusCapExceeded, PioError, PrecisionExhausted, SpecError
from .evaluator import EvalMethod, bench_compare, eval_matrix, eval_pio
from .kernels import BACKEND
from .powersum import growth_report, isolate_roots, power_sum, verify_powersum, zero_scan
from .recurrence import MinimalRecurrence, RecurrenceSpec, eval_backward, eval_simple, minimal_recurrence, section

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "Classification",
    "ConsistencyError",
    "EvalMethod",
    "Kind",
    "MinimalRecurrence",
    "ModulusCapExceeded",
    "PioError",
    "Poly",
    "PrecisionExhausted",
    "RecurrenceSpec",
    "ResidueClassInfo",
    "SpecError",
    "UnityReport",
    "bench_compare",
    "classify",
    "compute_modulus",
    "eval_backward",
    "eval_matrix",
    "eval_pio",
    "eval_simple",
    "growth_report",
    "isolate_roots",
    "minimal_recurrence",
    "power_sum",
    "section",
    "verify_powersum",
    "zero_scan",
]
