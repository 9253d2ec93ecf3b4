"""Seeded specs shared by the test modules."""
import random

from pioformula import RecurrenceSpec

SEED = 20240611
CORPUS_SIZE = 60

F1 = RecurrenceSpec((-9, 45, -89, 85, -35, -1, 5), (-1, 30, 75, 410, 615, 2742, 2387))
FIBONACCI = RecurrenceSpec((1, 1), (1, 1))
ROOTS_PM_I = RecurrenceSpec((-1, 0), (0, 1))
PHI6 = RecurrenceSpec((-1, 1), (1, 2))
ZERO = RecurrenceSpec.zero()
QUADRATIC_ZEROS = RecurrenceSpec((1, -3, 3), (2, 0, 0))

CRAFTED = {"f1": F1, "roots_pm_i": ROOTS_PM_I, "phi6": PHI6, "zero": ZERO}


def random_spec(rng, max_order=5, bound=9):
    k = rng.randint(1, max_order)
    coeffs = [rng.randint(-bound, bound) for _ in range(k)]
    while coeffs[0] == 0:
        coeffs[0] = rng.randint(-bound, bound)
    initial = [rng.randint(-bound, bound) for _ in range(k)]
    return RecurrenceSpec(tuple(coeffs), tuple(initial))


def random_corpus(size=CORPUS_SIZE, seed=SEED):
    rng = random.Random(seed)
    return [random_spec(rng) for _ in range(size)]


def full_corpus():
    named = [(f"random{i:02d}", s) for i, s in enumerate(random_corpus())]
    return named + list(CRAFTED.items())
