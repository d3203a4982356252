"""Dense polynomial helpers over a GaloisField.

Polynomials are lists of raw exponents (see field.ZERO for the zero
coefficient), low degree first.  The zero polynomial is the empty list.
Inputs are never mutated.
"""

from __future__ import annotations

from .field import ZERO, GaloisField


def trim(c: list[int]) -> list[int]:
    out = list(c)
    while out and out[-1] == ZERO:
        out.pop()
    return out


def is_zero(c: list[int]) -> bool:
    return all(x == ZERO for x in c)


def degree(c: list[int]) -> int:
    """Degree, or -1 for the zero polynomial."""
    for i in range(len(c) - 1, -1, -1):
        if c[i] != ZERO:
            return i
    return -1


def add(f: GaloisField, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = f.add_exp(out[i], x)
    return trim(out)


def scale(f: GaloisField, a: list[int], e: int) -> list[int]:
    return trim([f.mul_exp(x, e) for x in a])


def mul(f: GaloisField, a: list[int], b: list[int]) -> list[int]:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == ZERO:
            continue
        for j, y in enumerate(b):
            if y == ZERO:
                continue
            out[i + j] = f.add_exp(out[i + j], f.mul_exp(x, y))
    return trim(out)


def mul_linear(f: GaloisField, a: list[int], root: int) -> list[int]:
    """a(x) * (x - w^root); root may be ZERO for a(x) * x."""
    neg_root = f.neg_exp(root)
    out = [ZERO] + list(a)
    for i, x in enumerate(a):
        out[i] = f.add_exp(out[i], f.mul_exp(x, neg_root))
    return trim(out)


def divmod_poly(
    f: GaloisField, a: list[int], b: list[int]
) -> tuple[list[int], list[int]]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a)
    db = len(b) - 1
    lead_inv = f.inv_exp(b[-1])
    quot = [ZERO] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        coef = f.mul_exp(rem[-1], lead_inv)
        quot[shift] = coef
        for i in range(db + 1):
            rem[shift + i] = f.sub_exp(rem[shift + i], f.mul_exp(coef, b[i]))
        rem = trim(rem)
    return trim(quot), rem


def eval_at(f: GaloisField, a: list[int], x: int) -> int:
    """a(w^x) by Horner; x may be ZERO to evaluate at zero."""
    acc = ZERO
    for c in reversed(a):
        acc = f.add_exp(f.mul_exp(acc, x), c)
    return acc
