"""Cyclotomic-coset arithmetic for constacyclic codes over GF(q^2).

A code of length n, shift constant of multiplicative order r, lives in
the residue world modulo rn.  The n roots of its modulus polynomial are
indexed by Omega = {j mod rn : j = 1 mod r}, and a code is completely
described by the subset of Omega where its generator vanishes (the
defining set), which is a union of orbits under multiplication by q^2.
Everything here is pure integer arithmetic; no field tables involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class CosetContext:
    """Residue world (q, n, r): orbits run modulo rn under times-q^2."""

    q: int
    n: int
    r: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q={self.q} must be >= 2")
        if self.n < 1 or self.r < 1:
            raise ValueError(f"invalid (n, r) = ({self.n}, {self.r})")
        if math.gcd(self.q, self.n) != 1:
            raise ValueError(f"gcd(q, n) = gcd({self.q}, {self.n}) != 1")

    @property
    def modulus(self) -> int:
        return self.r * self.n

    @property
    def multiplier(self) -> int:
        return (self.q * self.q) % self.modulus

    def in_omega(self, z: int) -> bool:
        return 0 <= z < self.modulus and z % self.r == 1 % self.r


def omega_set(ctx: CosetContext) -> frozenset[int]:
    """The root index set {1 + i*r mod rn : 0 <= i < n}."""
    rn = ctx.modulus
    return frozenset((1 + i * ctx.r) % rn for i in range(ctx.n))


def cyclotomic_coset(ctx: CosetContext, j: int) -> tuple[int, ...]:
    """Sorted orbit of j under multiplication by q^2 modulo rn."""
    rn = ctx.modulus
    if not 0 <= j < rn:
        raise ValueError(f"residue {j} out of range [0, {rn})")
    mult = ctx.multiplier
    orbit = [j]
    x = (j * mult) % rn
    while x != j:
        orbit.append(x)
        x = (x * mult) % rn
    return tuple(sorted(orbit))


@dataclass(frozen=True)
class DefiningSet:
    """A union of q^2-cyclotomic cosets inside Omega."""

    ctx: CosetContext
    members: frozenset[int]

    def __post_init__(self):
        ctx = self.ctx
        rn = ctx.modulus
        bad = sorted(z for z in self.members if not ctx.in_omega(z))
        if bad:
            raise ValueError(f"members outside Omega (mod {rn}): {bad}")
        mult = ctx.multiplier
        missing = sorted(
            {(z * mult) % rn for z in self.members} - self.members
        )
        if missing:
            raise ValueError(
                f"not closed under multiplication by q^2: missing {missing}"
            )

    @classmethod
    def from_members(cls, ctx: CosetContext, members) -> "DefiningSet":
        return cls(ctx, frozenset(int(z) for z in members))

    @classmethod
    def from_cosets(cls, ctx: CosetContext, representatives) -> "DefiningSet":
        acc: set[int] = set()
        for rep in representatives:
            acc.update(cyclotomic_coset(ctx, rep % ctx.modulus))
        return cls(ctx, frozenset(acc))

    @classmethod
    def empty(cls, ctx: CosetContext) -> "DefiningSet":
        return cls(ctx, frozenset())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, z: int) -> bool:
        return z in self.members

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def hermitian_dual(self) -> "DefiningSet":
        """Defining set of the Hermitian dual: z in Omega with -qz not in Z."""
        ctx = self.ctx
        rn = ctx.modulus
        keep = frozenset(
            z for z in omega_set(ctx) if (-ctx.q * z) % rn not in self.members
        )
        return DefiningSet(ctx, keep)

    def is_dual_containing(self) -> bool:
        """True iff the dual code is a subcode of this code."""
        ctx = self.ctx
        rn = ctx.modulus
        return all((-ctx.q * z) % rn not in self.members for z in self.members)

    def to_json_dict(self) -> dict:
        return {
            "q": self.ctx.q,
            "n": self.ctx.n,
            "r": self.ctx.r,
            "members": list(self.sorted_members),
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "DefiningSet":
        ctx = CosetContext(q=int(doc["q"]), n=int(doc["n"]), r=int(doc["r"]))
        return cls.from_members(ctx, doc["members"])


def is_subcode(z1: DefiningSet, z2: DefiningSet) -> bool:
    """True iff code(z1) is a subcode of code(z2), i.e. z2 is inside z1."""
    if z1.ctx != z2.ctx:
        raise ValueError("defining sets live in different contexts")
    return z2.members <= z1.members


def dual_contained_in(z1: DefiningSet, z2: DefiningSet) -> bool:
    """True iff the Hermitian dual of code(z1) is a subcode of code(z2).

    Combinatorial criterion: no z in z2 has -qz mod rn inside z1.
    """
    if z1.ctx != z2.ctx:
        raise ValueError("defining sets live in different contexts")
    ctx = z1.ctx
    rn = ctx.modulus
    return all((-ctx.q * z) % rn not in z1.members for z in z2.members)
