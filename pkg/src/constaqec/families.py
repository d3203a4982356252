"""The six constacyclic code families behind the quantum constructions.

Each family fixes a code length n, a shift-constant order r, and a rule
turning a coset count into a defining set:

  I     negacyclic, n = (q^2-1)/2, cosets {1, 3, ..., 2c-1}, count <= q-1
  Ir    shift constant of even order r | q+1 (r != 2), n = (q+1)(q-1)/r,
        cosets {1, 1+r, ...}, count <= (q-1)/2
  II    negacyclic, n = lam*(q+1) with lam an odd divisor of q-1,
        count <= (q-1)/2 + lam
  II2   negacyclic, n = 2*lam*(q+1), needs q = 1 mod 4,
        count <= (q-1)/2 + 2*lam
  III+  order q+1 shift constant, n = (q^2+1)/5, q = 3 or 7 mod 20,
        cosets centred at (q^2+1)/2, count <= (q+1)/4
  III-  as III+ but q = 13 or 17 mod 20 and count <= (q-1)/4

Counts are 1-based for I/Ir/II/II2 (count = number of cosets) and
0-based for III+/III- (count c takes the c+1 cosets at offsets
0..c from the centre).  Mixing these up corrupts every derived
parameter, so the mapping lives here and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import CosetContext, DefiningSet
from .field import prime_power

CONSTRUCTIONS = ("I", "Ir", "II", "II2", "III+", "III-")


class FamilyConstraintError(ValueError):
    """A family hypothesis is violated; the message names the constraint."""


def _odd_prime_power(q: int) -> None:
    pp = prime_power(q)
    if pp is None or q % 2 == 0:
        raise FamilyConstraintError(f"q={q} must be an odd prime power")


@dataclass(frozen=True)
class FamilySpec:
    """One family instance: construction id plus its parameters."""

    construction: str
    q: int
    lam: int | None = None
    r: int | None = None

    def __post_init__(self):
        c, q = self.construction, self.q
        if c not in CONSTRUCTIONS:
            raise FamilyConstraintError(
                f"unknown construction {c!r}; expected one of {CONSTRUCTIONS}"
            )
        _odd_prime_power(q)
        if c == "I":
            self._reject_params(lam=True, r=True)
        elif c == "Ir":
            self._reject_params(lam=True)
            r = self.r
            if r is None:
                raise FamilyConstraintError("construction Ir requires r")
            if r % 2 != 0:
                raise FamilyConstraintError(f"r={r} must be even")
            if r == 2:
                raise FamilyConstraintError("r=2 is construction I, not Ir")
            if (q + 1) % r != 0:
                raise FamilyConstraintError(f"r={r} must divide q+1={q + 1}")
        elif c in ("II", "II2"):
            self._reject_params(r=True)
            lam = self.lam
            if lam is None:
                raise FamilyConstraintError(f"construction {c} requires lambda")
            if lam % 2 == 0:
                raise FamilyConstraintError(f"lambda={lam} must be odd")
            if lam < 1 or (q - 1) % lam != 0:
                raise FamilyConstraintError(
                    f"lambda={lam} must be a positive divisor of q-1={q - 1}"
                )
            if c == "II2" and q % 4 != 1:
                raise FamilyConstraintError(f"q={q} must be 1 mod 4")
        else:  # III+ / III-
            self._reject_params(lam=True, r=True)
            residues = (3, 7) if c == "III+" else (13, 17)
            form = "20m+3 or 20m+7" if c == "III+" else "20m-3 or 20m-7"
            if q % 20 not in residues or q < 13:
                raise FamilyConstraintError(
                    f"q={q} must have the form {form} with m >= 1"
                )

    def _reject_params(self, lam: bool = False, r: bool = False) -> None:
        if lam and self.lam is not None:
            raise FamilyConstraintError(
                f"construction {self.construction} takes no lambda"
            )
        if r and self.r is not None:
            raise FamilyConstraintError(
                f"construction {self.construction} takes no r"
            )

    # -- derived shape --

    @property
    def n(self) -> int:
        q, c = self.q, self.construction
        if c == "I":
            return (q * q - 1) // 2
        if c == "Ir":
            return ((q + 1) // self.r) * (q - 1)
        if c == "II":
            return self.lam * (q + 1)
        if c == "II2":
            return 2 * self.lam * (q + 1)
        return (q * q + 1) // 5

    @property
    def order_r(self) -> int:
        """Multiplicative order of the shift constant."""
        c = self.construction
        if c in ("I", "II", "II2"):
            return 2
        if c == "Ir":
            return self.r
        return self.q + 1

    @property
    def eta_exponent(self) -> int:
        """Exponent e of the shift constant w^e in GF(q^2)."""
        q, c = self.q, self.construction
        if c in ("I", "II", "II2"):
            return (q * q - 1) // 2
        if c == "Ir":
            return ((q + 1) // self.r) * (q - 1)
        return q - 1

    @property
    def count_min(self) -> int:
        return 0 if self.construction.startswith("III") else 1

    @property
    def count_max(self) -> int:
        q, c = self.q, self.construction
        if c == "I":
            return q - 1
        if c == "Ir":
            return (q - 1) // 2
        if c == "II":
            return (q - 1) // 2 + self.lam
        if c == "II2":
            return (q - 1) // 2 + 2 * self.lam
        if c == "III+":
            return (q + 1) // 4
        return (q - 1) // 4

    def context(self) -> CosetContext:
        return CosetContext(q=self.q, n=self.n, r=self.order_r)

    def coset_representatives(self, count: int) -> list[int]:
        if not self.count_min <= count <= self.count_max:
            raise FamilyConstraintError(
                f"count {count} outside range "
                f"[{self.count_min}, {self.count_max}] for {self.label()}"
            )
        if self.construction.startswith("III"):
            centre = (self.q * self.q + 1) // 2
            return [centre - (self.q + 1) * j for j in range(count + 1)]
        return [1 + self.order_r * (i - 1) for i in range(1, count + 1)]

    def expected_dimension(self, count: int) -> int:
        if self.construction.startswith("III"):
            return self.n - (2 * count + 1)
        return self.n - count

    def expected_distance(self, count: int) -> int:
        if self.construction.startswith("III"):
            return 2 * count + 2
        return count + 1

    def label(self) -> str:
        parts = [f"construction {self.construction}", f"q={self.q}"]
        if self.lam is not None:
            parts.append(f"lambda={self.lam}")
        if self.r is not None:
            parts.append(f"r={self.r}")
        return " ".join(parts)


def family_defining_set(spec: FamilySpec, count: int) -> DefiningSet:
    """Defining set for the family code with the given coset count."""
    return DefiningSet.from_cosets(spec.context(), spec.coset_representatives(count))


def family_instances(construction: str, q: int) -> list[FamilySpec]:
    """All valid parameterisations of a construction at a given q."""
    out = []
    if construction == "I":
        candidates = [dict()]
    elif construction == "Ir":
        candidates = [
            {"r": r}
            for r in range(4, q + 2, 2)
            if (q + 1) % r == 0
        ]
    elif construction in ("II", "II2"):
        candidates = [
            {"lam": lam}
            for lam in range(1, q, 2)
            if (q - 1) % lam == 0
        ]
    elif construction in ("III+", "III-"):
        candidates = [dict()]
    else:
        raise FamilyConstraintError(f"unknown construction {construction!r}")
    for kw in candidates:
        try:
            out.append(FamilySpec(construction, q, **kw))
        except FamilyConstraintError:
            continue
    return out


def all_family_instances(q_max: int) -> list[FamilySpec]:
    """Every valid family instance with q <= q_max, deterministic order."""
    out = []
    for q in range(3, q_max + 1, 2):
        if prime_power(q) is None:
            continue
        for construction in CONSTRUCTIONS:
            out.extend(family_instances(construction, q))
    return out
