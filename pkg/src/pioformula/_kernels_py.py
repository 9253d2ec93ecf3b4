"""Pure-Python inner loops. Mirrors the API of the compiled ``_ckernels``."""
from operator import mul


def iterate(coeffs, state, steps):
    """Advance the window ``state`` = (f(n), ..., f(n+k-1)) by ``steps`` positions."""
    k = len(coeffs)
    if k == 0 or steps <= 0:
        return list(state)
    state = list(state)
    nz = [i for i, c in enumerate(coeffs) if c]
    if len(nz) == k:
        for _ in range(steps):
            state.append(sum(map(mul, coeffs, state)))
            del state[0]
    else:
        pairs = [(coeffs[i], i) for i in nz]
        for _ in range(steps):
            state.append(sum([c * state[i] for c, i in pairs]))
            del state[0]
    return state


def terms(coeffs, initial, count):
    """First ``count`` terms of the sequence starting at the window ``initial``."""
    k = len(coeffs)
    out = list(initial[:count])
    if k == 0:
        return out + [0] * (count - len(out))
    state = list(initial)
    for _ in range(count - k):
        new = sum(map(mul, coeffs, state))
        out.append(new)
        state.append(new)
        del state[0]
    return out


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


def matvec(a, v):
    return [sum(map(mul, row, v)) for row in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def bareiss_det(rows):
    """Fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - lead * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
