"""Regenerate eval_corpus.json from an independent oracle (sympy's linrec).

    python tests/golden/make_golden.py
"""
import hashlib
import json
import os
import sys

from sympy.discrete.recurrences import linrec

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(HERE))

from corpus import full_corpus  # noqa: E402

from pioformula.documents import spec_to_dict  # noqa: E402

LIMIT = 500
SAMPLES = (1, 2, 3, 7, 50, 99, 100, 101, 257, 499, 500)


def oracle(spec, n):
    if spec.order == 0:
        return 0
    return int(linrec(list(reversed(spec.coeffs)), list(spec.initial), n - 1))


def digest(values):
    return hashlib.sha256("\n".join(str(v) for v in values).encode()).hexdigest()


def build():
    entries = []
    for name, spec in full_corpus():
        values = [oracle(spec, n) for n in range(1, LIMIT + 1)]
        entries.append(
            {
                "name": name,
                "spec": spec_to_dict(spec),
                "samples": {str(n): str(values[n - 1]) for n in SAMPLES},
                "sha256": digest(values),
            }
        )
    return {"format_version": 1, "oracle": "sympy.discrete.recurrences.linrec", "limit": LIMIT, "specs": entries}


if __name__ == "__main__":
    with open(os.path.join(HERE, "eval_corpus.json"), "w") as fh:
        json.dump(build(), fh, indent=1)
        fh.write("\n")
