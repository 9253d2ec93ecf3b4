import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import F1, FIBONACCI, QUADRATIC_ZEROS, ROOTS_PM_I, ZERO, full_corpus
from pioformula import Kind, RecurrenceSpec, classify, growth_report, isolate_roots, power_sum, verify_powersum
from pioformula.algebra import Poly
from pioformula.powersum import ComplexEnclosure, _fraction_to_mpf, _mpf_to_fraction, format_enclosure, zero_scan
from pioformula.recurrence import char_poly, minimize, terms
from strategies import specs

x = Poly.x()


@given(st.integers(-(10**40), 10**40), st.integers(0, 200))
def test_dyadic_round_trip_is_exact(num, shift):
    fr = Fraction(num, 2**shift)
    assert _mpf_to_fraction(_fraction_to_mpf(fr)) == fr


def test_round_trip_keeps_sign():
    assert _mpf_to_fraction(mpmath.mpf(-3)) == -3


def test_isolate_f1_roots():
    boxes = isolate_roots((x**2 - 9) * (x - 1) ** 5, 64)
    assert [mult for _, mult in boxes] == [1, 5, 1]
    for (enc, _), r in zip(boxes, (3, 1, -3)):
        assert enc.contains(r, 0)
        assert enc.width <= Fraction(1, 2**64)


def test_isolate_complex_pair():
    boxes = isolate_roots(x**2 + 1, 80)
    assert len(boxes) == 2
    assert any(e.contains(0, 1) for e, _ in boxes)
    assert any(e.contains(0, -1) for e, _ in boxes)
    assert boxes[0][0].disjoint(boxes[1][0])


def test_isolate_clustered_roots_needs_more_precision():
    # Mignotte-like polynomial with two very close real roots
    q = x**6 - 2 * (2**20 * x - 1) ** 2
    boxes = isolate_roots(q, 64)
    assert len(boxes) == 6
    for i, (a, _) in enumerate(boxes):
        for b, _ in boxes[i + 1 :]:
            assert a.disjoint(b)


def test_isolate_rejects_bad_input():
    with pytest.raises(ValueError):
        isolate_roots(Poly())
    with pytest.raises(ValueError):
        isolate_roots(x**2 + x)


def test_fibonacci_coefficients_enclose_inverse_sqrt5():
    S = power_sum(FIBONACCI, 128)
    with mpmath.workprec(300):
        inv = mpmath.mpf(1) / mpmath.sqrt(5)
        lo = _mpf_to_fraction(inv - mpmath.mpf(2) ** -250)
        hi = _mpf_to_fraction(inv + mpmath.mpf(2) ** -250)
    signs = []
    for t in S.terms:
        (c,) = t.coeffs
        assert c.width <= Fraction(1, 2**10)
        sign = 1 if c.re_lo > 0 else -1
        signs.append(sign)
        # the box for sign/sqrt(5) must meet a tiny interval around the true value
        assert sign * c.re_lo <= hi if sign > 0 else sign * c.re_hi <= hi
        assert sign * c.re_hi >= lo if sign > 0 else sign * c.re_lo >= lo
        assert c.im_lo <= 0 <= c.im_hi
    assert sorted(signs) == [-1, 1]


@pytest.mark.parametrize("spec", [FIBONACCI, F1, ROOTS_PM_I, QUADRATIC_ZEROS])
def test_verify_powersum_known(spec):
    S = power_sum(spec, 128)
    assert verify_powersum(S, 2 * spec.order).ok
    assert verify_powersum(S, 40).ok


def test_zero_sequence_power_sum_is_empty():
    S = power_sum(ZERO, 64)
    assert S.terms == ()
    assert verify_powersum(S, 5).ok


@given(specs(max_order=4))
@settings(max_examples=30, deadline=None)
def test_power_sum_contains_exact_terms(spec):
    S = power_sum(spec, 96)
    assert verify_powersum(S, 2 * spec.order + 6).ok


def test_format_enclosure():
    e = ComplexEnclosure(Fraction(1), Fraction(3), Fraction(-1, 4), Fraction(1, 4))
    assert format_enclosure(e, 5) == "2.0±1.0 + 0.0±0.25·i"


def test_zero_scan():
    assert [z.n for z in zero_scan(QUADRATIC_ZEROS, 1000)] == [2, 3]
    assert zero_scan(FIBONACCI, 1000) == []
    recs = zero_scan(RecurrenceSpec((-1, 0), (0, 1)), 8)
    assert [z.n for z in recs] == [1, 3, 5, 7]
    assert {z.kind for z in recs} == {"polynomial"}


def test_growth_fibonacci_and_f1():
    (fib,) = growth_report(FIBONACCI, limit=2000)
    assert fib.passes
    assert abs(fib.log_c - math.log((1 + 5**0.5) / 2)) < 1e-9
    assert fib.relative_error < 0.05
    (even,) = growth_report(F1, limit=2000)
    assert even.residue == 2
    assert abs(even.log_c - math.log(3)) < 1e-9
    assert even.relative_error < 0.05


def _dominant_is_real(spec):
    boxes = isolate_roots(char_poly(spec), 64)
    mods = [(e.modulus_interval(), e) for e, _ in boxes]
    top = max(float(z.a) for z, _ in mods)
    dominant = [e for z, e in mods if float(z.b) >= top]
    return len(dominant) == 1 and dominant[0].im_lo <= 0 <= dominant[0].im_hi


def test_growth_witness_on_corpus():
    for name, spec in full_corpus():
        cls = classify(spec)
        vals = terms(spec, 2000)
        for row in growth_report(spec, cls, limit=2000):
            assert abs(vals[row.n - 1]) > 1.01**row.n, name
            assert row.passes, name
            sec = cls.classes[row.residue - 1].section_spec
            # with a complex dominant pair |f(n)| oscillates, so monotonicity is only checked for a real one
            if _dominant_is_real(sec):
                assert row.monotone_tail, name


def test_complex_dominant_pair_breaks_monotonicity():
    # roots 2 +- i: |f(n)| ~ 5**(n/2) |cos(n t + p)| keeps dipping
    spec = RecurrenceSpec((-5, 4), (2, 3))
    (row,) = growth_report(spec, limit=2000, tail=40)
    assert row.passes
    assert not row.monotone_tail


CORPUS = full_corpus()


@pytest.mark.parametrize("name,spec", CORPUS, ids=[n for n, _ in CORPUS])
def test_corpus_power_sum_structure(name, spec):
    if spec.order:
        q = char_poly(spec)
        assert sum(mult for _, mult in isolate_roots(q, 64)) == q.degree
    S = power_sum(spec, 128)
    k_min = minimize(spec).order
    assert sum(t.multiplicity for t in S.terms) == k_min
    for t in S.terms:
        assert len(t.coeffs) == t.multiplicity
    low = verify_powersum(power_sum(spec, 64), 2 * spec.order + 4)
    high = verify_powersum(S, 2 * spec.order + 4)
    assert high.ok
    # doubling the precision keeps every containment that held before
    assert set(high.failures) <= set(low.failures)


@pytest.mark.parametrize("name,spec", CORPUS, ids=[n for n, _ in CORPUS])
def test_zeros_in_polynomial_classes_are_roots(name, spec):
    cls = classify(spec)
    for z in zero_scan(spec, 300, cls=cls):
        info = cls.class_of(z.n)
        assert info.residue == z.residue
        if info.kind is Kind.POLYNOMIAL:
            assert info.poly(z.n) == 0
