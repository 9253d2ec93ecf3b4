"""Split the residue classes modulo m into polynomial classes and exponential classes.

A class j is polynomial exactly when the minimal characteristic polynomial
of its m-section is (x - 1)**d. Then f agrees with a rational polynomial of
degree < d on n = j (mod m), recovered by interpolation and checked on extra
points before it is returned. Any other class has a root of modulus > 1 and
grows exponentially along the class.
"""
import enum
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .algebra import Poly, lagrange_interpolate
from .degeneracy import compute_modulus
from .errors import ConsistencyError
from .recurrence import RecurrenceSpec, char_poly, minimize, section, section_terms


class Kind(str, enum.Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class ResidueClassInfo:
    residue: int
    kind: Kind
    section_spec: RecurrenceSpec
    poly: Poly = None

    @cached_property
    def scaled_poly(self):
        """(integer coefficients, denominator) with poly = coefficients / denominator."""
        den = self.poly.common_denominator()
        return tuple(int(c * den) for c in self.poly.coeffs), den


@dataclass(frozen=True)
class Classification:
    spec: RecurrenceSpec
    minimal: object
    unity: object
    classes: tuple

    @property
    def m(self):
        return self.unity.m

    @property
    def X(self):
        return tuple(c.residue for c in self.classes if c.kind is Kind.POLYNOMIAL)

    def residue(self, n):
        r = n % self.m
        return r if r else self.m

    def class_of(self, n):
        return self.classes[self.residue(n) - 1]


def is_unipotent(p):
    """(True, d) if the monic p equals (x - 1)**d, else (False, None)."""
    d = p.degree
    if d < 0 or p.lc != 1:
        return False, None
    expected = tuple(comb(d, i) * (-1) ** (d - i) for i in range(d + 1))
    if p.coeffs == expected:
        return True, d
    return False, None


def interpolate_class(spec, m, j, d):
    """Polynomial in n of degree <= d through f at the first d+1 indices n = j (mod m).

    The result is checked against the next 2d+2 indices of the class and a
    mismatch raises :class:`ConsistencyError`.
    """
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    nodes = [j + m * i for i in range(d + 1)]
    vals = section_terms(spec, m, j, 3 * d + 3)
    q = lagrange_interpolate(nodes, vals[: d + 1])
    for i in range(d + 1, 3 * d + 3):
        n = j + m * i
        if q(n) != vals[i]:
            raise ConsistencyError(f"interpolated polynomial fails at n={n} for class {j} mod {m}")
    return q


def _zero_class_check(spec, m, j, count):
    if any(section_terms(spec, m, j, count)):
        raise ConsistencyError(f"class {j} mod {m} classified as zero but has a nonzero term")


def classify(spec, modulus_cap=None):
    """Compute m and classify every residue j in [1, m]."""
    minimal = minimize(spec)
    mspec = minimal.spec
    k_min = mspec.order
    unity = compute_modulus(char_poly(mspec), cap=modulus_cap)
    m = unity.m
    classes = []
    for j in range(1, m + 1):
        sec = section(mspec, m, j)
        unipotent, d = is_unipotent(char_poly(sec))
        if not unipotent:
            classes.append(ResidueClassInfo(j, Kind.EXPONENTIAL, sec))
            continue
        if d == 0:
            _zero_class_check(mspec, m, j, 2 * k_min + 2)
            q = Poly()
        else:
            q = interpolate_class(mspec, m, j, d - 1)
        if q.degree >= max(k_min, 1):
            raise ConsistencyError(f"class {j} polynomial degree {q.degree} is not below k_min={k_min}")
        classes.append(ResidueClassInfo(j, Kind.POLYNOMIAL, sec, q))
    return Classification(spec, minimal, unity, tuple(classes))
