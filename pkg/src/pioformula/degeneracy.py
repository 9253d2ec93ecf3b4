"""Roots of unity among the roots of a characteristic polynomial and among their ratios.

The sectioning modulus is the lcm of every root-of-unity order that occurs
as a root or as a ratio of two distinct roots. After passing to residue
classes modulo that m, no section is degenerate and 1 is the only root of
unity that can remain among its roots.
"""
import os
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .algebra import Poly, cyclotomic, lagrange_interpolate, resultant, squarefree_part, totient
from .errors import ConsistencyError, ModulusCapExceeded

DEFAULT_MODULUS_CAP = 1_000_000
MODULUS_CAP_ENV = "PIOFORMULA_MODULUS_CAP"


def default_modulus_cap():
    raw = os.environ.get(MODULUS_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MODULUS_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{MODULUS_CAP_ENV} must be a positive integer")
    return cap


@dataclass(frozen=True)
class UnityReport:
    root_orders: frozenset
    ratio_orders: frozenset
    m: int


def ratio_poly(q):
    """Integer polynomial whose roots are all ratios a/b of roots of ``q``.

    This is Res_y(q(y), q(x*y)) as a polynomial in x, of degree (deg q)**2;
    the ratio 1 comes from the diagonal pairs. It is recovered by evaluating
    the resultant at x = 1, ..., (deg q)**2 + 1 and interpolating, which is
    valid because q(t*y) keeps its full degree in y for t != 0.
    """
    if not q:
        raise ValueError("ratio polynomial of the zero polynomial is undefined")
    if q.coeffs[0] == 0:
        raise ValueError("ratio polynomial needs q(0) != 0")
    s = q.degree
    if s <= 0:
        return Poly.const(1)
    xs = list(range(1, s * s + 2))
    ys = [resultant(q, q.scale_var(t)) for t in xs]
    r = lagrange_interpolate(xs, ys)
    if not r.is_integral() or r.degree != s * s:
        raise ConsistencyError(f"ratio polynomial of {q} came out as {r}")
    return r


@lru_cache(maxsize=None)
def order_candidates(D):
    """All N with phi(N) <= D. phi(N) >= sqrt(N/2) bounds the search by 2*D**2 + 2."""
    return [N for N in range(1, 2 * D * D + 3) if totient(N) <= D]


def unity_orders(p, D):
    """{N : Phi_N shares a root with p}, over candidates with phi(N) <= D."""
    if not p:
        raise ValueError("unity orders of the zero polynomial are undefined")
    out = set()
    if p.degree <= 0:
        return out
    for N in order_candidates(D):
        if totient(N) > p.degree:
            continue
        # Phi_N is irreducible, so a common root means Phi_N divides p
        if not p % cyclotomic(N):
            out.add(N)
    return out


def is_cyclotomic_product(p):
    """True iff the monic ``p`` is a product of cyclotomic polynomials (1 counts as the empty product)."""
    if not p or p.lc != 1:
        raise ValueError("is_cyclotomic_product expects a monic polynomial")
    if p.degree > 0 and p.coeffs[0] == 0:
        raise ValueError("is_cyclotomic_product expects p(0) != 0")
    changed = True
    while p.degree > 0 and changed:
        changed = False
        for N in order_candidates(p.degree):
            if totient(N) > p.degree:
                continue
            quo, rem = divmod(p, cyclotomic(N))
            if not rem:
                p = quo
                changed = True
                break
    return p == 1


def strip_unipotent(p):
    """Split a monic p as (x-1)**d * rest with rest(1) != 0; return (d, rest)."""
    d = 0
    x1 = Poly((-1, 1))
    while p.degree > 0 and p(1) == 0:
        p = p // x1
        d += 1
    return d, p


def compute_modulus(q_min, cap=None):
    """Smallest m killing every root-of-unity root and root-of-unity ratio of ``q_min``."""
    if cap is None:
        cap = default_modulus_cap()
    k = q_min.degree
    if k <= 0:
        return UnityReport(frozenset(), frozenset(), 1)
    if q_min.coeffs[0] == 0:
        raise ValueError("compute_modulus needs q_min(0) != 0")
    sqf = squarefree_part(q_min)
    roots = unity_orders(sqf, k)
    ratios = unity_orders(ratio_poly(sqf), k * k) - {1}
    m = lcm(1, *roots, *ratios)
    if m > cap:
        raise ModulusCapExceeded(m, cap)
    return UnityReport(frozenset(roots), frozenset(ratios), m)
