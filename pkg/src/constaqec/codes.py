"""Constacyclic codes over GF(q^2): dimension, distances, generators.

A code is (context, shift-constant exponent, defining set).  Dimension
and the designed distance are pure coset combinatorics; the generator
polynomial is built as a product of linear factors in the splitting
field GF(q^(2m)) and checked to divide x^n - eta with coefficients in
the base field.  Exact minimum distances for small instances come from
two independent oracles: full codeword enumeration, and the classical
column-independence certificate for the Singleton bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from . import poly
from .cosets import CosetContext, DefiningSet
from .families import FamilySpec, family_defining_set
from .field import (
    FIELD_SIZE_CAP,
    ZERO,
    Embedding,
    GaloisField,
    embedding,
    field,
    prime_power,
)

DEFAULT_ENUM_BUDGET = 10 ** 7
DEFAULT_MDS_BUDGET = 10 ** 9


class SplittingFieldError(ValueError):
    """The splitting field exceeds the table size cap."""


def multiplicative_order(a: int, mod: int) -> int:
    if mod == 1:
        return 1
    if math.gcd(a, mod) != 1:
        raise ValueError(f"{a} is not a unit modulo {mod}")
    acc, k = a % mod, 1
    while acc != 1:
        acc = (acc * a) % mod
        k += 1
    return k


def bch_designed_distance(defining_set: DefiningSet) -> int:
    """One plus the longest run of consecutive root positions.

    Positions live on the circle Z_n via j = 1 + i*r; a run may start
    anywhere and wrap around, which never weakens the classical bound
    that fixes the start.
    """
    ctx = defining_set.ctx
    n, r, rn = ctx.n, ctx.r, ctx.modulus
    if not defining_set.members:
        return 1
    present = [False] * n
    for z in defining_set.members:
        present[((z - 1) % rn) // r] = True
    if all(present):
        return n + 1
    longest = current = 0
    # doubling handles wrap-around runs; capped by the all() check above
    for flag in itertools.chain(present, present):
        if flag:
            current += 1
            longest = max(longest, current)
        else:
            current = 0
    return min(longest, n) + 1


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum-distance computation."""

    lower: int
    upper: int
    method: str  # enumeration | mds_certificate | mds_refuted | bch_singleton
    mds: bool | None

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_json_fragment(self) -> dict:
        if self.exact is not None:
            out: dict = {"distance_exact": self.exact}
        else:
            out = {"distance_bounds": [self.lower, self.upper]}
        out["distance_method"] = self.method
        out["mds"] = self.mds
        return out


class ConstacyclicCode:
    """An eta-constacyclic code of length n over GF(q^2)."""

    def __init__(self, defining_set: DefiningSet, eta_exponent: int):
        ctx = defining_set.ctx
        pp = prime_power(ctx.q)
        if pp is None:
            raise ValueError(f"q={ctx.q} must be a prime power")
        self._p, self._a = pp
        n_units = ctx.q * ctx.q - 1
        e = eta_exponent % n_units
        order = n_units // math.gcd(e, n_units)
        if order != ctx.r:
            raise ValueError(
                f"shift constant w^{e} has order {order}, context requires r={ctx.r}"
            )
        self.defining_set = defining_set
        self.ctx = ctx
        self.eta_exponent = e

    @classmethod
    def from_family(cls, spec: FamilySpec, count: int) -> "ConstacyclicCode":
        return cls(family_defining_set(spec, count), spec.eta_exponent)

    # -- basic parameters ------------------------------------------------

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def k(self) -> int:
        return self.n - len(self.defining_set)

    @property
    def is_zero_code(self) -> bool:
        return self.k == 0

    @cached_property
    def designed_distance(self) -> int:
        if self.is_zero_code:
            raise ValueError("the zero code has no distance")
        return bch_designed_distance(self.defining_set)

    @cached_property
    def base_field(self) -> GaloisField:
        return field(self._p, 2 * self._a)

    # -- splitting field and generator polynomial ------------------------

    @property
    def splitting_degree(self) -> int:
        """m with GF(q^2m) the splitting field of x^n - eta."""
        return multiplicative_order(self.ctx.multiplier, self.ctx.modulus)

    @cached_property
    def _splitting(self) -> tuple[GaloisField, Embedding, int]:
        """(extension field, embedding, exponent of the root delta)."""
        base = self.base_field
        m_ord = self.splitting_degree
        if base.order ** m_ord > FIELD_SIZE_CAP:
            raise SplittingFieldError(
                f"splitting field GF({base.order}^{m_ord}) exceeds size cap"
            )
        ext = field(self._p, base.m * m_ord)
        emb = embedding(base, ext)
        rn = self.ctx.modulus
        step = ext.n_units // rn
        eta_ext = emb.apply(self.eta_exponent)
        for w in range(1, rn + 1):
            if math.gcd(w, rn) != 1:
                continue
            delta = step * w
            if (delta * self.n) % ext.n_units == eta_ext:
                return ext, emb, delta
        raise RuntimeError("no primitive rn-th root with delta^n = eta")

    @cached_property
    def generator_polynomial(self) -> list[int]:
        """Monic generator, exponent-coded over the base field.

        Product of (x - delta^z) over the defining set, mapped back from
        the splitting field; verified to divide x^n - eta exactly.
        """
        base = self.base_field
        if not self.defining_set.members:
            g = [0]
        else:
            ext, emb, delta = self._splitting
            g_ext = [0]
            for z in self.defining_set.sorted_members:
                g_ext = poly.mul_linear(ext, g_ext, (delta * z) % ext.n_units)
            try:
                g = [emb.retract(c) for c in g_ext]
            except ValueError as exc:
                raise RuntimeError(
                    f"generator coefficient outside GF({base.order}): {exc}"
                ) from exc
        if poly.degree(g) != len(self.defining_set):
            raise RuntimeError("generator degree does not match defining set size")
        _, rem = poly.divmod_poly(base, self._modulus_polynomial(), g)
        if rem:
            raise RuntimeError("generator polynomial does not divide x^n - eta")
        return g

    def _modulus_polynomial(self) -> list[int]:
        out = [ZERO] * (self.n + 1)
        out[0] = self.base_field.neg_exp(self.eta_exponent)
        out[self.n] = 0
        return out

    def evaluate_defining_set(self) -> frozenset[int]:
        """Re-derive the defining set by evaluating g at every root index."""
        ext, emb, delta = self._splitting
        g_ext = [emb.apply(c) for c in self.generator_polynomial]
        rn = self.ctx.modulus
        zeros = set()
        for i in range(self.n):
            j = (1 + i * self.ctx.r) % rn
            if poly.eval_at(ext, g_ext, (delta * j) % ext.n_units) == ZERO:
                zeros.add(j)
        return frozenset(zeros)

    @cached_property
    def generator_matrix(self) -> list[list[int]]:
        """k rows, x^i * g(x) for 0 <= i < k; exponent-coded, length n."""
        g = self.generator_polynomial
        pad = self.n - len(g)
        return [
            [ZERO] * i + list(g) + [ZERO] * (pad - i)
            for i in range(self.k)
        ]

    def contains(self, vec: list[int]) -> bool:
        """Membership of an exponent-coded length-n vector."""
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} != n = {self.n}")
        _, rem = poly.divmod_poly(self.base_field, list(vec), self.generator_polynomial)
        return not rem

    # -- minimum distance -------------------------------------------------

    def min_distance(
        self,
        enum_budget: int = DEFAULT_ENUM_BUDGET,
        mds_budget: int = DEFAULT_MDS_BUDGET,
    ) -> DistanceResult:
        if self.is_zero_code:
            raise ValueError("the zero code has no distance")
        n, k = self.n, self.k
        lower = self.designed_distance
        upper = n - k + 1
        order = self.base_field.order
        try:
            if order ** k <= enum_budget:
                d = self._enumerate_min_weight()
                return DistanceResult(d, d, "enumeration", mds=d == n - k + 1)
            if math.comb(n, k) * k ** 3 <= mds_budget:
                if self._sub_determinants_nonzero():
                    return DistanceResult(upper, upper, "mds_certificate", mds=True)
                return DistanceResult(lower, n - k, "mds_refuted", mds=False)
        except SplittingFieldError:
            pass  # bounds-only mode
        exact = lower == upper
        return DistanceResult(lower, upper, "bch_singleton",
                              mds=True if exact else None)

    def _enumerate_min_weight(self) -> int:
        """Min weight over all nonzero codewords, one per scalar class."""
        fld = self.base_field
        g = self.generator_polynomial
        n, k = self.n, self.k
        mul_exp, add_exp = fld.mul_exp, fld.add_exp
        alphabet = [ZERO] + list(range(fld.n_units))
        best = n
        for lead in range(k):
            for tail in itertools.product(alphabet, repeat=k - 1 - lead):
                word = [ZERO] * n
                for i, m in enumerate((0,) + tail):
                    if m == ZERO:
                        continue
                    off = lead + i
                    for j, c in enumerate(g):
                        if c != ZERO:
                            word[off + j] = add_exp(word[off + j], mul_exp(m, c))
                w = sum(1 for x in word if x != ZERO)
                if w < best:
                    best = w
                    if best == 1:
                        return best
        return best

    def _sub_determinants_nonzero(self) -> bool:
        """True iff the code is MDS (every coordinate set of size k informs).

        Equivalent checks: every k columns of a generator matrix are
        independent, or every n-k columns of a parity-check matrix are.
        The cheaper side is used; the root-evaluation matrix over the
        splitting field serves as the parity check.
        """
        n, k = self.n, self.k
        z = n - k
        if z == 0 or k == 0:
            return True
        if z <= k:
            ext, _, delta = self._splitting
            n_units = ext.n_units
            rows = [
                [(delta * zz) % n_units * i % n_units for i in range(n)]
                for zz in self.defining_set.sorted_members
            ]
            return _all_column_subsets_invertible(rows, z, ext)
        cols = [[row[i] for row in self.generator_matrix] for i in range(n)]
        return _all_column_subsets_invertible_t(cols, k, self.base_field)

    # -- Hermitian dual ----------------------------------------------------

    @cached_property
    def hermitian_dual_basis(self) -> list[list[int]]:
        """Basis of the Hermitian dual, via the nullspace of G^(q)."""
        fld = self.base_field
        q, n_units = self.q, fld.n_units
        conj = [
            [c if c == ZERO else (c * q) % n_units for c in row]
            for row in self.generator_matrix
        ]
        return nullspace(conj, self.n, fld)

    # -- reporting ----------------------------------------------------------

    def generator_poly_json(self) -> list:
        return [("0" if c == ZERO else c) for c in self.generator_polynomial]

    def report(
        self,
        enum_budget: int = DEFAULT_ENUM_BUDGET,
        mds_budget: int = DEFAULT_MDS_BUDGET,
    ) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "r": self.ctx.r,
            "eta_exponent": self.eta_exponent,
            "field": self.base_field.describe(),
            "defining_set": self.defining_set.to_json_dict(),
            "dual_containing": self.defining_set.is_dual_containing(),
        }
        if self.is_zero_code:
            out["zero_code"] = True
            return out
        out["designed_distance"] = self.designed_distance
        out.update(self.min_distance(enum_budget, mds_budget).to_json_fragment())
        try:
            out["generator_poly"] = self.generator_poly_json()
        except SplittingFieldError as exc:
            out["generator_poly"] = None
            out["generator_poly_note"] = str(exc)
        return out

    def __repr__(self) -> str:
        return (
            f"ConstacyclicCode(q={self.q}, n={self.n}, k={self.k}, "
            f"r={self.ctx.r}, |Z|={len(self.defining_set)})"
        )


# ----------------------------------------------------------------------
# linear algebra over a GaloisField (exponent-coded rows)
# ----------------------------------------------------------------------

def is_nonsingular(mat: list[list[int]], fld: GaloisField) -> bool:
    """Destructive Gaussian elimination on a square exponent matrix."""
    size = len(mat)
    n_units = fld.n_units
    add_exp, neg_exp = fld.add_exp, fld.neg_exp
    for col in range(size):
        piv = None
        for r in range(col, size):
            if mat[r][col] != ZERO:
                piv = r
                break
        if piv is None:
            return False
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
        prow = mat[col]
        pivot_inv = (n_units - prow[col]) % n_units
        for r in range(col + 1, size):
            row = mat[r]
            a = row[col]
            if a == ZERO:
                continue
            factor = (a + pivot_inv) % n_units
            row[col] = ZERO
            for c in range(col + 1, size):
                pv = prow[c]
                if pv != ZERO:
                    row[c] = add_exp(row[c], neg_exp((pv + factor) % n_units))
    return True


def _all_column_subsets_invertible(
    rows: list[list[int]], size: int, fld: GaloisField
) -> bool:
    n = len(rows[0])
    for cols in itertools.combinations(range(n), size):
        sub = [[row[c] for c in cols] for row in rows]
        if not is_nonsingular(sub, fld):
            return False
    return True


def _all_column_subsets_invertible_t(
    cols: list[list[int]], size: int, fld: GaloisField
) -> bool:
    n = len(cols)
    for chosen in itertools.combinations(range(n), size):
        sub = [list(cols[c]) for c in chosen]
        if not is_nonsingular(sub, fld):
            return False
    return True


def nullspace(rows: list[list[int]], width: int, fld: GaloisField) -> list[list[int]]:
    """Basis of {v : M v = 0} for an exponent-coded matrix M."""
    mat = [list(r) for r in rows]
    mul_exp, add_exp = fld.mul_exp, fld.add_exp
    neg_exp, inv_exp = fld.neg_exp, fld.inv_exp
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != ZERO:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = inv_exp(mat[rank][col])
        mat[rank] = [mul_exp(x, inv) for x in mat[rank]]
        prow = mat[rank]
        for r in range(len(mat)):
            if r == rank:
                continue
            a = mat[r][col]
            if a == ZERO:
                continue
            row = mat[r]
            for c in range(width):
                pv = prow[c]
                if pv != ZERO:
                    row[c] = add_exp(row[c], neg_exp(mul_exp(pv, a)))
        pivots.append(col)
        rank += 1
    free = [c for c in range(width) if c not in set(pivots)]
    basis = []
    for fcol in free:
        vec = [ZERO] * width
        vec[fcol] = 0
        for i, pcol in enumerate(pivots):
            vec[pcol] = neg_exp(mat[i][fcol])
        basis.append(vec)
    return basis


def hermitian_containment_oracle(
    c1: ConstacyclicCode, c2: ConstacyclicCode
) -> bool:
    """True iff the Hermitian dual of c1 is a subcode of c2.

    Works from generator matrices and polynomial division only, so it is
    independent of the coset criterion it cross-checks.
    """
    if c1.ctx != c2.ctx or c1.eta_exponent != c2.eta_exponent:
        raise ValueError("codes have different length, shift constant or field")
    return all(c2.contains(v) for v in c1.hermitian_dual_basis)
