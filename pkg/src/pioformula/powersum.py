"""Certified numeric power sums, zero scans and growth diagnostics.

A sequence with minimal characteristic polynomial q is written as
``f(n) = sum_i p_i(n) * alpha_i**n`` with alpha_i the roots of q and
deg p_i < multiplicity(alpha_i). Roots are isolated in boxes with dyadic
endpoints; the inclusion test is the Smith (Braess-Hadeler) theorem for
simultaneous root inclusion, evaluated in exact rational arithmetic. The
coefficients come from an interval solve of the confluent Vandermonde
system, so every reported enclosure is rigorous.

Interval arithmetic uses the global precision of ``mpmath.iv``; the
helpers here save and restore it but are not thread-safe.
"""
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import mpmath
from mpmath import iv, mp

from .algebra import squarefree_decomposition
from .classifier import Kind, classify
from .errors import PrecisionExhausted
from .recurrence import char_poly, minimize, terms

PRECISION_START = 64
PRECISION_CAP = 4096
_GUARD = 32


@contextmanager
def _ivprec(bits):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def _mpf_to_fraction(x):
    if not isinstance(x, mpmath.mpf):
        x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise PrecisionExhausted("interval endpoint overflowed to infinity")
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)


def _fraction_to_mpf(fr):
    """Exact conversion of a dyadic rational."""
    den = fr.denominator
    if den & (den - 1):
        raise ValueError(f"{fr} is not dyadic")
    return mp.make_mpf(mpmath.libmp.from_man_exp(fr.numerator, -(den.bit_length() - 1)))


def _interval(lo, hi):
    return iv.mpf([_fraction_to_mpf(lo), _fraction_to_mpf(hi)])


def _endpoints(x):
    lo, hi = x._mpi_
    return _mpf_to_fraction(mp.make_mpf(lo)), _mpf_to_fraction(mp.make_mpf(hi))


class CInterval:
    """Rectangular complex interval over ``mpmath.iv`` real intervals."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = re if isinstance(re, iv.mpf) else iv.mpf(re)
        self.im = im if isinstance(im, iv.mpf) else iv.mpf(im)

    def __add__(self, o):
        o = _as_ci(o)
        return CInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _as_ci(o)
        return CInterval(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        o = _as_ci(o)
        return CInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def abs2(self):
        return self.re**2 + self.im**2

    def __truediv__(self, o):
        o = _as_ci(o)
        den = o.abs2()
        if 0 in den:
            raise ZeroDivisionError("complex interval divisor contains 0")
        return CInterval((self.re * o.re + self.im * o.im) / den, (self.im * o.re - self.re * o.im) / den)

    def __pow__(self, e):
        result, base = CInterval(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def abs(self):
        return iv.sqrt(self.abs2())

    def magnitude_mid(self):
        return abs(complex(float(self.re.mid), float(self.im.mid)))

    def contains(self, z):
        z = complex(z) if not isinstance(z, (int, Fraction)) else z
        if isinstance(z, complex):
            return z.real in self.re and z.imag in self.im
        return _fraction_to_mpf_or_int(z) in self.re and 0 in self.im


def _fraction_to_mpf_or_int(z):
    if isinstance(z, int):
        return mpmath.mpf(z) if z.bit_length() <= 52 else z
    return z


def _as_ci(x):
    return x if isinstance(x, CInterval) else CInterval(x)


@dataclass(frozen=True)
class ComplexEnclosure:
    """Box [re_lo, re_hi] + i [im_lo, im_hi] with dyadic rational endpoints."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    @classmethod
    def from_interval(cls, z):
        re_lo, re_hi = _endpoints(z.re)
        im_lo, im_hi = _endpoints(z.im)
        return cls(re_lo, re_hi, im_lo, im_hi)

    def to_interval(self):
        return CInterval(_interval(self.re_lo, self.re_hi), _interval(self.im_lo, self.im_hi))

    @property
    def width(self):
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def center(self):
        return (self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2

    def contains(self, re, im=0):
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def disjoint(self, other):
        return (
            self.re_hi < other.re_lo
            or other.re_hi < self.re_lo
            or self.im_hi < other.im_lo
            or other.im_hi < self.im_lo
        )

    def modulus_interval(self):
        return self.to_interval().abs()

    def __str__(self):
        return format_enclosure(self)


def _fmt_part(lo, hi, digits):
    mid = (lo + hi) / 2
    rad = (hi - lo) / 2
    with mp.workprec(max(64, int(digits * 3.33) + 16)):
        m = mpmath.nstr(mpmath.mpf(mid.numerator) / mid.denominator, digits)
        r = mpmath.nstr(mpmath.mpf(rad.numerator) / rad.denominator, 2)
    return f"{m}±{r}"


def format_enclosure(e, digits=20):
    """Decimal rendering ``re±w + im±w·i`` (midpoint and half-width)."""
    return f"{_fmt_part(e.re_lo, e.re_hi, digits)} + {_fmt_part(e.im_lo, e.im_hi, digits)}·i"


# exact Gaussian-rational helpers for the inclusion test
def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gabs2(a):
    return a[0] * a[0] + a[1] * a[1]


def _geval(coeffs, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _gmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def _sqrt_up(r2, bits):
    """Dyadic upper bound for sqrt(r2) with ``bits`` fractional bits."""
    if r2 == 0:
        return Fraction(0)
    scaled = r2 * 4**bits
    t = -(-scaled.numerator // scaled.denominator)
    s = isqrt(t)
    if s * s < t:
        s += 1
    return Fraction(s, 2**bits)


class _Retry(Exception):
    pass


def _approx_roots(s, wp):
    desc = [int(c) for c in reversed(s.coeffs)]
    with mp.workprec(wp):
        try:
            roots = mpmath.polyroots(desc, maxsteps=200 + 4 * s.degree, extraprec=wp)
        except mpmath.libmp.NoConvergence as exc:
            raise _Retry from exc
        return [(_mpf_to_fraction(mpmath.mpc(r).real), _mpf_to_fraction(mpmath.mpc(r).imag)) for r in roots]


def _certify_factor(s, p, wp):
    """Enclosures for the simple roots of the squarefree ``s``, each with width <= 2**-p."""
    d = s.degree
    centers = _approx_roots(s, wp)
    lc = s.lc
    radii = []
    for i, z in enumerate(centers):
        den = (Fraction(lc), Fraction(0))
        for j, w in enumerate(centers):
            if j != i:
                den = _gmul(den, _gsub(z, w))
        den2 = _gabs2(den)
        if den2 == 0:
            raise _Retry
        val2 = _gabs2(_geval(s.coeffs, z))
        radii.append(_sqrt_up(d * d * val2 / den2, wp + 8))
    for i in range(d):
        for j in range(i + 1, d):
            gap2 = _gabs2(_gsub(centers[i], centers[j]))
            if gap2 <= (radii[i] + radii[j]) ** 2:
                raise _Retry
    limit = Fraction(1, 2**p)
    out = []
    for (re, im), r in zip(centers, radii):
        if 2 * r > limit:
            raise _Retry
        out.append(ComplexEnclosure(re - r, re + r, im - r, im + r))
    return out


def isolate_roots(q, precision=PRECISION_START):
    """Disjoint certified boxes of width <= 2**-precision around every root, with multiplicities."""
    if not q or q.degree < 0:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if q.degree > 0 and q.coeffs[0] == 0:
        raise ValueError("isolate_roots needs q(0) != 0")
    factors = squarefree_decomposition(q)
    wp = precision + _GUARD
    top = max(PRECISION_CAP, wp)
    while wp <= top:
        try:
            boxes = []
            for s, mult in factors:
                boxes.extend((e, mult) for e in _certify_factor(s, precision, wp))
            for i in range(len(boxes)):
                for j in range(i + 1, len(boxes)):
                    if not boxes[i][0].disjoint(boxes[j][0]):
                        raise _Retry
            return sorted(boxes, key=lambda b: (-b[0].center[0], -b[0].center[1]))
        except _Retry:
            wp *= 2
    raise PrecisionExhausted(f"could not separate the roots of {q} within {top} bits")


@dataclass(frozen=True)
class PowerSumTerm:
    root: ComplexEnclosure
    multiplicity: int
    coeffs: tuple  # ComplexEnclosure per power of n, ascending


@dataclass(frozen=True)
class NumericPowerSum:
    terms: tuple
    source_spec: object
    precision: int

    def evaluate(self, n):
        """Complex interval enclosing S(n)."""
        with _ivprec(self.precision + _GUARD + 2 * n.bit_length()):
            total = CInterval(0)
            for t in self.terms:
                poly = CInterval(0)
                for c in reversed(t.coeffs):
                    poly = poly * n + c.to_interval()
                total = total + poly * (t.root.to_interval() ** n)
            return total


def _interval_solve(A, b):
    """Interval Gaussian elimination with pivoting on midpoint magnitude."""
    n = len(A)
    A = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: A[r][col].magnitude_mid())
        A[col], A[piv] = A[piv], A[col]
        pivot = A[col][col]
        if 0 in pivot.abs2():
            raise ZeroDivisionError("pivot interval contains 0")
        for r in range(col + 1, n):
            factor = A[r][col] / pivot
            for c in range(col, n + 1):
                A[r][c] = A[r][c] - factor * A[col][c]
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = A[r][n]
        for c in range(r + 1, n):
            acc = acc - A[r][c] * x[c]
        x[r] = acc / A[r][r]
    return x


def power_sum(spec, precision=PRECISION_START):
    """Certified power-sum representation of the sequence of ``spec``."""
    mspec = minimize(spec).spec
    k = mspec.order
    if k == 0:
        return NumericPowerSum((), spec, precision)
    q = char_poly(mspec)
    values = terms(mspec, k)
    p = precision
    top = max(PRECISION_CAP, precision)
    while p <= top:
        roots = isolate_roots(q, p)
        try:
            with _ivprec(p + _GUARD):
                cols = []
                for enc, mult in roots:
                    z = enc.to_interval()
                    for t in range(mult):
                        cols.append((z, t))
                A = [[(z**n) * (n**t) for z, t in cols] for n in range(1, k + 1)]
                x = _interval_solve(A, [CInterval(v) for v in values])
        except ZeroDivisionError:
            p *= 2
            continue
        out, pos = [], 0
        for enc, mult in roots:
            coeffs = tuple(ComplexEnclosure.from_interval(x[pos + t]) for t in range(mult))
            out.append(PowerSumTerm(enc, mult, coeffs))
            pos += mult
        return NumericPowerSum(tuple(out), spec, p)
    raise PrecisionExhausted(f"power-sum solve lost all precision within {top} bits")


@dataclass
class PowerSumCheck:
    N: int
    failures: list = field(default_factory=list)
    max_width: Fraction = Fraction(0)

    @property
    def ok(self):
        return not self.failures


def verify_powersum(S, N):
    """Check that the enclosure of S(n) contains the exact f(n) for n = 1..N."""
    exact = terms(S.source_spec, N)
    report = PowerSumCheck(N)
    for n in range(1, N + 1):
        z = S.evaluate(n)
        enc = ComplexEnclosure.from_interval(z)
        report.max_width = max(report.max_width, enc.width)
        if not enc.contains(exact[n - 1], 0):
            report.failures.append(n)
    return report


@dataclass(frozen=True)
class ZeroRecord:
    n: int
    residue: int
    kind: str


def zero_scan(spec, limit, cls=None):
    """Every n <= limit with f(n) = 0, tagged with its residue class and kind."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if cls is None:
        cls = classify(spec)
    vals = terms(spec, limit)
    out = []
    for n, v in enumerate(vals, start=1):
        if v == 0:
            info = cls.class_of(n)
            out.append(ZeroRecord(n, info.residue, info.kind.value))
    return out


@dataclass(frozen=True)
class GrowthRow:
    residue: int
    n: int
    empirical: float
    log_c_lo: float
    log_c_hi: float
    epsilon: float
    passes: bool
    monotone_tail: bool

    @property
    def log_c(self):
        return (self.log_c_lo + self.log_c_hi) / 2

    @property
    def relative_error(self):
        return abs(self.empirical - self.log_c) / self.log_c


def _log_abs(v):
    return math.log(abs(v)) if v else float("-inf")


def growth_report(spec, cls=None, limit=2000, epsilon=0.05, precision=PRECISION_START, tail=10):
    """Empirical exponent log|f(n)|/n per exponential class against the certified log of the dominant root.

    For class j the dominant modulus is taken over the roots of the
    section's minimal polynomial (roots alpha**m), so its log is divided by m.
    """
    if limit < 100:
        raise ValueError("growth report needs limit >= 100")
    if cls is None:
        cls = classify(spec)
    m = cls.m
    vals = terms(spec, limit)
    rows = []
    for info in cls.classes:
        if info.kind is not Kind.EXPONENTIAL:
            continue
        j = info.residue
        n = limit - ((limit - j) % m)
        roots = isolate_roots(char_poly(info.section_spec), precision)
        with _ivprec(precision + _GUARD):
            mods = [enc.modulus_interval() for enc, _ in roots]
            lo = max(float(z.a) for z in mods)
            hi = max(float(z.b) for z in mods)
            log_lo = float(iv.log(iv.mpf(lo)).a) / m
            log_hi = float(iv.log(iv.mpf(hi)).b) / m
        emp = _log_abs(vals[n - 1]) / n
        seq = [abs(vals[i - 1]) for i in range(n - m * (tail - 1), n + 1, m) if i >= 1]
        monotone = all(a < b for a, b in zip(seq, seq[1:]))
        rows.append(GrowthRow(j, n, emp, log_lo, log_hi, epsilon, emp >= (1 - epsilon) * log_hi, monotone))
    return rows
