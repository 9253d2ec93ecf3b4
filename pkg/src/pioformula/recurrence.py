"""Integer linear recurrence sequences: evaluation, sections, minimal recurrences.

A sequence is indexed from 1 and determined by
``f(n + k) = a_0 f(n) + a_1 f(n + 1) + ... + a_{k-1} f(n + k - 1)``
together with the initial terms ``f(1), ..., f(k)``. ``k = 0`` is the zero
sequence.
"""
import time
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .algebra import Poly
from .errors import BudgetExceeded, ConsistencyError, SpecError

_CHUNK = 4096
# section terms up to this index come from one forward pass instead of matrix powers
_DIRECT_LIMIT = 4096


@dataclass(frozen=True)
class RecurrenceSpec:
    """Recurrence coefficients ``a_0..a_{k-1}`` and initial terms ``f(1)..f(k)``."""

    coeffs: tuple
    initial: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        initial = tuple(self.initial)
        for name, vals in (("coeffs", coeffs), ("initial", initial)):
            for v in vals:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise SpecError(f"{name} entries must be integers, got {v!r}", field=name)
        if len(coeffs) != len(initial):
            raise SpecError(
                f"coeffs has length {len(coeffs)} but initial has length {len(initial)}", field="initial"
            )
        if coeffs and coeffs[0] == 0:
            raise SpecError("a_0 must be nonzero", field="coeffs")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "initial", initial)

    @property
    def order(self):
        return len(self.coeffs)

    @classmethod
    def zero(cls):
        return cls((), ())

    @classmethod
    def from_encoded(cls, abar):
        """Build from the flat tuple (a_0, ..., a_{k-1}, f(1), ..., f(k))."""
        abar = tuple(abar)
        if len(abar) % 2:
            raise SpecError("encoded recurrence must have even length", field="coeffs")
        k = len(abar) // 2
        return cls(abar[:k], abar[k:])

    def encoded(self):
        return self.coeffs + self.initial

    def __str__(self):
        k = self.order
        if k == 0:
            return "f = 0"
        rhs = " + ".join(f"{a}*f(n+{i})" if i else f"{a}*f(n)" for i, a in enumerate(self.coeffs))
        init = ", ".join(str(v) for v in self.initial)
        return f"f(n+{k}) = {rhs}; f(1..{k}) = {init}"


@dataclass(frozen=True)
class MinimalRecurrence:
    spec: RecurrenceSpec
    certified_integral: bool

    @property
    def order(self):
        return self.spec.order


def char_poly(spec):
    """x^k - a_{k-1} x^{k-1} - ... - a_0; the constant 1 for the zero sequence."""
    return Poly([-a for a in spec.coeffs] + [1])


def companion(spec):
    """Matrix mapping the window (f(n), ..., f(n+k-1)) to (f(n+1), ..., f(n+k))."""
    k = spec.order
    if k == 0:
        raise SpecError("the zero sequence has no companion matrix", field="coeffs")
    rows = [tuple(1 if c == r + 1 else 0 for c in range(k)) for r in range(k - 1)]
    rows.append(tuple(spec.coeffs))
    return tuple(rows)


def identity(k):
    return tuple(tuple(int(r == c) for c in range(k)) for r in range(k))


def mat_pow(M, e):
    """M**e by square-and-multiply."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    k = len(M)
    result = None
    base = [list(r) for r in M]
    while e:
        if e & 1:
            result = base if result is None else kernels.matmul(result, base)
        e >>= 1
        if e:
            base = kernels.matmul(base, base)
    if result is None:
        return identity(k)
    return tuple(tuple(r) for r in result)


def terms(spec, count):
    """[f(1), ..., f(count)]."""
    if spec.order == 0:
        return [0] * count
    return kernels.terms(spec.coeffs, spec.initial, count)


def eval_simple(spec, n, deadline=None):
    """f(n) by forward iteration of the recurrence.

    ``deadline`` is an optional ``time.perf_counter()`` value; passing it
    raises :class:`BudgetExceeded` once the deadline is crossed.
    """
    if n < 1:
        raise SpecError(f"index must be >= 1, got {n}", field="n")
    k = spec.order
    if k == 0:
        return 0
    if n <= k:
        return spec.initial[n - 1]
    steps = n - k
    state = list(spec.initial)
    if deadline is None:
        return kernels.iterate(spec.coeffs, state, steps)[-1]
    done = 0
    while done < steps:
        chunk = min(_CHUNK, steps - done)
        state = kernels.iterate(spec.coeffs, state, chunk)
        done += chunk
        if done < steps and time.perf_counter() > deadline:
            raise BudgetExceeded(f"forward iteration reached f({done + k}) of f({n})", progress=done + k)
    return state[-1]


def eval_backward(spec, n):
    """f(n) for n <= 0, running the recurrence backwards over Q."""
    if n > 0:
        raise SpecError(f"backward evaluation needs n <= 0, got {n}", field="n")
    k = spec.order
    if k == 0:
        return Fraction(0)
    a = spec.coeffs
    window = [Fraction(v) for v in spec.initial]
    # window holds f(t), ..., f(t+k-1); walk t from 1 down to n
    for _ in range(1 - n):
        prev = (window[-1] - sum(a[i] * window[i - 1] for i in range(1, k))) / a[0]
        window = [prev] + window[:-1]
    return window[0]


def window_at(spec, n):
    """(f(n), ..., f(n+k-1)) via the companion-matrix power M**(n-1)."""
    k = spec.order
    if k == 0:
        return ()
    if n == 1:
        return spec.initial
    return tuple(kernels.matvec(mat_pow(companion(spec), n - 1), spec.initial))


def faddeev_leverrier(A):
    """Characteristic polynomial det(xI - A) of an integer matrix, exactly."""
    n = len(A)
    coeffs = [0] * n + [1]
    Mk = [[0] * n for _ in range(n)]
    A = [list(r) for r in A]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        Mk = kernels.matmul(A, Mk)
        for i in range(n):
            Mk[i][i] += c_prev
        AM = kernels.matmul(A, Mk)
        tr = sum(AM[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ConsistencyError("non-integral Faddeev-LeVerrier coefficient")
        coeffs[n - k] = q
    return Poly(coeffs)


def section_terms(spec, m, j, count):
    """[f(j), f(j+m), ..., f(j+m(count-1))]."""
    if m < 1 or not 1 <= j:
        raise SpecError(f"need m >= 1 and j >= 1, got m={m}, j={j}", field="m")
    k = spec.order
    if k == 0:
        return [0] * count
    last = j + m * (count - 1)
    if last <= _DIRECT_LIMIT:
        return terms(spec, last)[j - 1 :: m]
    step = mat_pow(companion(spec), m)
    state = list(window_at(spec, j))
    out = []
    for _ in range(count):
        out.append(state[0])
        state = kernels.matvec(step, state)
    return out


def section_char_poly(spec, m):
    """Characteristic polynomial of M**m; every m-section satisfies its recurrence."""
    if spec.order == 0:
        return Poly.const(1)
    return faddeev_leverrier(mat_pow(companion(spec), m))


def spec_from_char_poly(q, initial):
    """Recurrence whose characteristic polynomial is the monic ``q``."""
    if q.lc != 1 or not q.is_integral():
        raise ConsistencyError(f"characteristic polynomial {q} is not monic integral")
    k = q.degree
    return RecurrenceSpec(tuple(-c for c in q.coeffs[:k]), tuple(initial[:k]))


def section(spec, m, j):
    """The m-section f(j + m(n-1)) as a minimal recurrence spec of order <= k."""
    if m < 1 or not 1 <= j <= m:
        raise SpecError(f"need 1 <= j <= m, got m={m}, j={j}", field="m")
    k = spec.order
    if k == 0:
        return RecurrenceSpec.zero()
    q_sec = section_char_poly(spec, m)
    vals = section_terms(spec, m, j, 2 * k)
    full = spec_from_char_poly(q_sec, vals)
    if terms(full, 2 * k) != vals:
        raise ConsistencyError(f"section ({m}, {j}) does not satisfy the recurrence of M^{m}")
    minimal = minimal_recurrence(vals, k).spec
    if q_sec % char_poly(minimal):
        raise ConsistencyError("minimal section polynomial does not divide char poly of M^m")
    return minimal


def berlekamp_massey(seq):
    """Shortest linear feedback relation over Q.

    Returns ``(L, C)`` with ``C[0] = 1`` and
    ``seq[n] + C[1] seq[n-1] + ... + C[L] seq[n-L] = 0`` for every n >= L.
    """
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, shift, b = 0, 1, Fraction(1)
    for n, s in enumerate(seq):
        d = Fraction(s)
        for i in range(1, min(L, len(C) - 1) + 1):
            d += C[i] * seq[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        T = list(C)
        need = len(B) + shift
        if len(C) < need:
            C.extend([Fraction(0)] * (need - len(C)))
        for i, bi in enumerate(B):
            C[i + shift] -= coef * bi
        if 2 * L <= n:
            L = n + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    C = C[: L + 1] + [Fraction(0)] * (L + 1 - len(C))
    return L, C


def minimal_recurrence(seq, order_bound):
    """Shortest recurrence (from n = 1) fitting ``seq``; its coefficients must be integers.

    ``seq`` must hold at least ``2 * order_bound`` terms of a sequence known
    to satisfy a recurrence of order at most ``order_bound``.
    """
    seq = list(seq)
    if len(seq) < 2 * order_bound:
        raise ValueError(f"need at least {2 * order_bound} terms, got {len(seq)}")
    L, C = berlekamp_massey(seq)
    if L > order_bound:
        raise ConsistencyError(f"minimal order {L} exceeds the bound {order_bound}")
    coeffs = [-C[L - i] for i in range(L)]
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(f"shortest rational recurrence is not integral: {coeffs}")
    coeffs = tuple(int(c) for c in coeffs)
    if L and coeffs[0] == 0:
        raise ConsistencyError("shortest recurrence has a_0 = 0")
    spec = RecurrenceSpec(coeffs, tuple(seq[:L]))
    if terms(spec, len(seq)) != seq:
        raise ConsistencyError("shortest recurrence does not reproduce the supplied terms")
    return MinimalRecurrence(spec, certified_integral=True)


def minimize(spec):
    """Minimal recurrence of the sequence generated by ``spec``."""
    k = spec.order
    return minimal_recurrence(terms(spec, 2 * k), k)
