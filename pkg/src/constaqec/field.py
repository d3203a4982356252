"""Exact arithmetic in GF(p^m) using a discrete-log representation.

Every nonzero element is stored as an exponent of a fixed primitive
element w, so multiplication and inversion are modular integer
arithmetic.  Addition goes through a precomputed Zech-logarithm table
(z[e] = log(1 + w^e)).  Fields are immutable after construction and
cached by (p, m), so repeated lookups are cheap and deterministic.

The modulus is the lexicographically smallest monic polynomial of
degree m over GF(p) (coefficients compared high degree first) whose
root x is primitive.  This pins the whole representation: two runs,
or two machines, always agree on what "w^e" means.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

# Exponent code for the zero element.  All raw-exponent helpers accept
# and return it; nonzero elements use 0 <= e < p^m - 1.
ZERO = -1

# Zech tables are materialised in RAM, one int per nonzero element.
FIELD_SIZE_CAP = 2 ** 24

_TABLE_BLOCK = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, a) with n = p^a, or None if n is not a prime power."""
    if n < 2:
        return None
    ps = prime_factors(n)
    if len(ps) != 1:
        return None
    p = ps[0]
    a = 0
    while n > 1:
        n //= p
        a += 1
    return p, a


# ----------------------------------------------------------------------
# dense polynomial arithmetic over GF(p), used only for modulus search
# ----------------------------------------------------------------------

def _gfp_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic; coefficient lists are low degree first
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m):
                res[i - m + j] = (res[i - m + j] - c * mod[j]) % p
    del res[m:]
    while res and res[-1] == 0:
        res.pop()
    return res


def _gfp_x_pow(e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = [0, 1] if len(mod) > 2 else _gfp_mulmod([0, 1], [1], mod, p)
    while e:
        if e & 1:
            result = _gfp_mulmod(result, base, mod, p)
        base = _gfp_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _x_has_full_order(mod: list[int], p: int, n_units: int, divisors: list[int]) -> bool:
    if _gfp_x_pow(n_units, mod, p) != [1]:
        return False
    return all(_gfp_x_pow(n_units // d, mod, p) != [1] for d in divisors)


def find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic degree-m polynomial over GF(p) with x primitive.

    If x has order exactly p^m - 1 modulo f, then the quotient ring is a
    field (all p^m - 1 nonzero residues are powers of x, hence units), so
    primitivity of x implies irreducibility of f and no separate test is
    needed.
    """
    n_units = p ** m - 1
    divisors = prime_factors(n_units)
    for packed in range(p ** m):
        coeffs, v = [], packed
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        if coeffs[0] == 0:
            continue  # x divides f
        mod = coeffs + [1]
        if _x_has_full_order(mod, p, n_units, divisors):
            return tuple(mod)
    raise RuntimeError(f"no primitive polynomial of degree {m} over GF({p})")


# ----------------------------------------------------------------------
# the field itself
# ----------------------------------------------------------------------

class GaloisField:
    """GF(p^m) with a fixed primitive element w and Zech-log addition.

    Do not instantiate directly; use :func:`field` so that equal
    parameters share one table set.
    """

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        order = p ** m
        if order > FIELD_SIZE_CAP:
            raise ValueError(f"field order {order} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.m = m
        self.order = order
        self.n_units = order - 1
        self.modulus = find_modulus(p, m)
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, n = self.p, self.m, self.n_units
        # Row-vector action of multiplication by x modulo the modulus.
        step = np.zeros((m, m), dtype=np.int64)
        for i in range(m - 1):
            step[i, i + 1] = 1
        for j in range(m):
            step[m - 1, j] = (step[m - 1, j] - self.modulus[j]) % p

        block = min(n, _TABLE_BLOCK)
        chains = -(-n // block)
        # step^block, for jumping between chain start points
        jump = np.eye(m, dtype=np.int64)
        b, sq = block, step.copy()
        while b:
            if b & 1:
                jump = (jump @ sq) % p
            sq = (sq @ sq) % p
            b >>= 1

        starts = np.zeros((chains, m), dtype=np.int64)
        starts[0, 0] = 1
        for c in range(1, chains):
            starts[c] = (starts[c - 1] @ jump) % p

        pack = p ** np.arange(m, dtype=np.int64)
        exp = np.zeros(chains * block, dtype=np.int64)
        v = starts
        for j in range(block):
            exp[j::block] = v @ pack
            if j + 1 < block:
                v = (v @ step) % p
        exp = exp[:n]

        log = np.full(self.order, ZERO, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if int(np.count_nonzero(log >= 0)) != n:
            raise RuntimeError("primitive element does not enumerate all units")

        c0 = exp % p
        plus_one = np.where(c0 == p - 1, exp - (p - 1), exp + 1)
        zech = log[plus_one]

        if self.order <= 2 ** 16:
            # plain lists index faster than numpy scalars in hot loops
            self._exp = exp.tolist()
            self._log = log.tolist()
            self._zech = zech.tolist()
        else:
            self._exp = exp
            self._log = log
            self._zech = zech

    # -- raw exponent arithmetic (ints; ZERO marks the zero element) --

    def add_exp(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        n = self.n_units
        d = b - a
        if d < 0:
            d += n
        z = self._zech[d]
        if z == ZERO:
            return ZERO
        r = a + z
        if r >= n:
            r -= n
        return int(r)

    def neg_exp(self, a: int) -> int:
        if a == ZERO or self.p == 2:
            return a
        h = self.n_units >> 1
        r = a + h
        return r - self.n_units if r >= self.n_units else r

    def sub_exp(self, a: int, b: int) -> int:
        return self.add_exp(a, self.neg_exp(b))

    def mul_exp(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        r = a + b
        return r - self.n_units if r >= self.n_units else r

    def inv_exp(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return (-a) % self.n_units

    def pow_exp(self, a: int, k: int) -> int:
        if a == ZERO:
            if k == 0:
                return 0
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO
        return (a * k) % self.n_units

    # -- polynomial-basis views (used by tests and serialisation) --

    def coeffs_of(self, e: int) -> tuple[int, ...]:
        """Polynomial-basis coefficients (low degree first) of w^e."""
        packed = 0 if e == ZERO else int(self._exp[e])
        out = []
        for _ in range(self.m):
            out.append(packed % self.p)
            packed //= self.p
        return tuple(out)

    def exp_of_coeffs(self, coeffs) -> int:
        packed = 0
        for c in reversed(list(coeffs)):
            packed = packed * self.p + (c % self.p)
        if packed == 0:
            return ZERO
        if packed >= self.order:
            raise ValueError("coefficient vector out of range")
        return int(self._log[packed])

    # -- element construction --

    def zero(self) -> "FieldElement":
        return FieldElement(self, ZERO)

    def one(self) -> "FieldElement":
        return FieldElement(self, 0)

    def omega(self) -> "FieldElement":
        return FieldElement(self, 1 % self.n_units)

    def element(self, e: int) -> "FieldElement":
        if e != ZERO:
            e %= self.n_units
        return FieldElement(self, e)

    def elements(self):
        """All field elements, zero first then w^0, w^1, ..."""
        yield self.zero()
        for e in range(self.n_units):
            yield FieldElement(self, e)

    def describe(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"GaloisField({self.p}^{self.m})"


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> GaloisField:
    """Shared, deterministic GF(p^m) instance."""
    return GaloisField(p, m)


class FieldElement:
    """A value in a GaloisField: the zero marker or an exponent of w."""

    __slots__ = ("field", "exp")

    def __init__(self, fld: GaloisField, exp: int):
        self.field = fld
        self.exp = exp

    @property
    def is_zero(self) -> bool:
        return self.exp == ZERO

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add_exp(self.exp, other.exp))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub_exp(self.exp, other.exp))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_exp(self.exp, other.exp))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_exp(self.exp, self.field.inv_exp(other.exp)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_exp(self.exp))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow_exp(self.exp, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_exp(self.exp))

    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.exp)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.exp == self.exp
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.exp))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"<0 in {self.field!r}>"
        return f"<w^{self.exp} in {self.field!r}>"


# ----------------------------------------------------------------------
# subfield embeddings
# ----------------------------------------------------------------------

class Embedding:
    """Field homomorphism GF(p^m1) -> GF(p^m2) for m1 | m2.

    Maps w_base^e to w_ext^(t*e) where w_ext^t is the first root of the
    base modulus along the subgroup of order p^m1 - 1, scanning
    w_ext^(s*j) for j = 1, 2, ... with s = (p^m2 - 1) / (p^m1 - 1).
    Anchoring t at a root of the base modulus is what makes the map
    additive, not just multiplicative.
    """

    __slots__ = ("base", "ext", "scale", "_j_inv")

    def __init__(self, base: GaloisField, ext: GaloisField):
        if base.p != ext.p or ext.m % base.m != 0:
            raise ValueError(
                f"GF({base.p}^{base.m}) does not embed in GF({ext.p}^{ext.m})"
            )
        self.base = base
        self.ext = ext
        s = ext.n_units // base.n_units
        t = None
        for j in range(1, base.n_units + 1):
            if math.gcd(j, base.n_units) != 1:
                continue
            if self._modulus_vanishes_at(s * j):
                t = s * j
                self._j_inv = pow(j, -1, base.n_units) if base.n_units > 1 else 0
                break
        if t is None:
            raise RuntimeError("base modulus has no root in extension")
        self.scale = t

    def _modulus_vanishes_at(self, e: int) -> bool:
        ext = self.ext
        acc = ZERO
        for c in reversed(self.base.modulus):
            acc = ext.mul_exp(acc, e)
            if c:
                acc = ext.add_exp(acc, int(ext._log[c]))
        return acc == ZERO

    def apply(self, e: int) -> int:
        if e == ZERO:
            return ZERO
        return (self.scale * e) % self.ext.n_units

    def retract(self, e_ext: int) -> int:
        """Exponent in the base field of an embedded element.

        Raises ValueError if the element is outside the embedded image.
        """
        if e_ext == ZERO:
            return ZERO
        s = self.ext.n_units // self.base.n_units
        if e_ext % s != 0:
            raise ValueError(f"w^{e_ext} lies outside the embedded subfield")
        e = ((e_ext // s) * self._j_inv) % self.base.n_units
        if self.apply(e) != e_ext:
            raise ValueError(f"w^{e_ext} lies outside the embedded subfield")
        return e


@lru_cache(maxsize=None)
def embedding(base: GaloisField, ext: GaloisField) -> Embedding:
    return Embedding(base, ext)
