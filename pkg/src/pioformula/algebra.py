"""Exact univariate polynomial arithmetic over Z and Q.

Integers are Python ints and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and canonical already. A :class:`Poly` holds
dense ascending coefficients. A polynomial whose coefficients are all
ints plays the role of an integer polynomial; any Fraction coefficient
with denominator 1 is stored as an int so equality and hashing do not
depend on how a value was produced.
"""
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm

from . import kernels


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"polynomial coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Immutable dense polynomial, ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_norm(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls((0,) * degree + (c,))

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def lc(self):
        return self._c[-1] if self._c else 0

    def is_zero(self):
        return not self._c

    def is_integral(self):
        return all(isinstance(c, int) for c in self._c)

    def is_monic(self):
        return self.lc == 1

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.const(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Poly({list(self._c)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        return kernels.horner(self._c, x)

    def __neg__(self):
        return Poly(-c for c in self._c)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._c)
        other = _coerce(other)
        return Poly(kernels.poly_mul(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dd = other.degree
        lead = other.lc
        divc = other._c
        exact_int = lead in (1, -1) and self.is_integral() and other.is_integral()
        if len(rem) - 1 < dd:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t = c * lead if exact_int else Fraction(c) / lead
            quot[i - dd] = t
            for j in range(dd + 1):
                rem[i - dd + j] -= t * divc[j]
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return Poly(i * c for i, c in enumerate(self._c) if i)

    def scale_var(self, s):
        """p(s*x)."""
        out, pw = [], 1
        for c in self._c:
            out.append(c * pw)
            pw *= s
        return Poly(out)

    def shift_var(self, s):
        """p(x + s), by Horner composition."""
        acc = Poly()
        lin = Poly((s, 1))
        for c in reversed(self._c):
            acc = acc * lin + c
        return acc

    def common_denominator(self):
        return reduce(lcm, (c.denominator for c in self._c if isinstance(c, Fraction)), 1)


def _coerce(p):
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.const(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def poly_arith(p, q, op):
    """Apply ``op`` in {"add", "sub", "mul", "divmod"}; divmod works over Q."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divmod":
        return divmod(p, q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def content_primitive(p):
    """Split an integer polynomial into positive content and primitive part."""
    if not p:
        raise ValueError("content of the zero polynomial is undefined")
    if not p.is_integral():
        raise TypeError("content_primitive expects an integer polynomial")
    c = reduce(gcd, p.coeffs, 0)
    return c, Poly(x // c for x in p.coeffs)


def primitive(p):
    """Primitive integer multiple of ``p`` (over Q) with positive leading coefficient."""
    if not p:
        return p
    if not p.is_integral():
        p = p * p.common_denominator()
    _, prim = content_primitive(p)
    return -prim if prim.lc < 0 else prim


def pseudo_rem(a, b):
    """lc(b)**(deg a - deg b + 1) * a  mod  b, computed over Z."""
    if a.degree < b.degree:
        return a
    lead = b.lc
    rem = list(a.coeffs)
    db = b.degree
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lead for x in rem]
        for j in range(db + 1):
            rem[i - db + j] -= c * bc[j]
    return Poly(rem[:db])


def poly_gcd(p, q):
    """Greatest common divisor over Q, returned primitive with positive leading coefficient.

    Runs the primitive polynomial remainder sequence so every intermediate
    stays in Z[x].
    """
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = primitive(p), primitive(q)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def exact_quotient(p, q):
    """p / q when q divides p over Q; raise ArithmeticError otherwise."""
    quo, rem = divmod(p, q)
    if rem:
        raise ArithmeticError(f"{q} does not divide {p}")
    return quo


def sylvester_matrix(p, q):
    """Sylvester matrix with the deg(q) rows of p first, coefficients descending."""
    m, n = p.degree, q.degree
    size = m + n
    pd, qd = list(reversed(p.coeffs)), list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - n - 1 - i))
    return rows


def resultant(p, q):
    """Res(p, q) as the Sylvester determinant (p rows first), via fraction-free Bareiss."""
    if not p or not q:
        raise ValueError("resultant with the zero polynomial is undefined")
    if not (p.is_integral() and q.is_integral()):
        raise TypeError("resultant expects integer polynomials")
    return kernels.bareiss_det(sylvester_matrix(p, q))


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial: x**n - 1 divided by every Phi_d with d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Poly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        p = exact_quotient(p, cyclotomic(d))
    return p


def squarefree_part(p):
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if p.degree <= 0:
        return Poly.const(1)
    return primitive(exact_quotient(p, poly_gcd(p, p.derivative())))


def squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors primitive, squarefree, coprime.

    The product of factor**multiplicity equals ``p`` up to a rational constant.
    """
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial is undefined")
    if p.degree <= 0:
        return []
    p = primitive(p)
    out = []
    a = poly_gcd(p, p.derivative())
    b = exact_quotient(p, a)
    c = exact_quotient(p.derivative(), a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = exact_quotient(b, g)
        c = exact_quotient(d, g)
        d = c - b.derivative()
        i += 1
    return out


def lagrange_interpolate(xs, ys):
    """Unique polynomial of degree < len(xs) through the points (xs[i], ys[i]), over Q."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly.const(1)
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly((-xj, 1))
                denom *= xi - xj
        result = result + basis * Fraction(yi, denom)
    return result
