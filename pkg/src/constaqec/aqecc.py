"""CSS combination of nested constacyclic codes into asymmetric quantum codes.

Two classical codes over GF(q^2) of the same constacyclic shape combine
into an [[n, k1 + k2 - n, dz/dx]] quantum code once the Hermitian dual
of the first sits inside the second.  The emitted dz/dx are the designed
distances of the two ingredient codes (the purity assumption; flagged in
the output).  A code is optimal when k = n - dz - dx + 2.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .codes import ConstacyclicCode
from .cosets import dual_contained_in
from .families import FamilySpec


class ContainmentError(ValueError):
    """The CSS nesting precondition fails for the given pair."""


class OptimalityError(AssertionError):
    """A family generator produced a code missing the Singleton bound."""


@dataclass(frozen=True)
class AqeccParams:
    """Parameters [[n, k, dz/dx]] over GF(q^2), with provenance."""

    q: int
    n: int
    k: int
    dz: int
    dx: int
    optimal: bool
    family: str | None = None
    s: int | None = None
    t: int | None = None
    purity_assumed: bool = True

    def notation(self) -> str:
        return f"[[{self.n},{self.k},{self.dz}/{self.dx}]]_{self.q * self.q}"

    def key(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.dz, self.dx)

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "dz": self.dz,
            "dx": self.dx,
            "optimal": self.optimal,
            "family": self.family,
            "s": self.s,
            "t": self.t,
            "purity_assumed": self.purity_assumed,
        }


def singleton_margin(params: AqeccParams) -> int:
    """Slack against k <= n - dz - dx + 2; zero iff optimal."""
    return params.n - params.dz - params.dx + 2 - params.k


def css_combine(c1: ConstacyclicCode, c2: ConstacyclicCode) -> AqeccParams:
    """Combine c1 (X side) and c2 (Z side) into quantum parameters.

    Requires the Hermitian dual of c1 to be a subcode of c2, checked by
    the coset criterion on the defining sets.
    """
    if c1.ctx != c2.ctx or c1.eta_exponent != c2.eta_exponent:
        raise ValueError("codes have different length, shift constant or field")
    if c1.is_zero_code or c2.is_zero_code:
        raise ValueError("zero codes cannot enter the CSS combination")
    if not dual_contained_in(c1.defining_set, c2.defining_set):
        raise ContainmentError(
            "Hermitian dual of the first code is not inside the second"
        )
    k = c1.k + c2.k - c1.n
    if k <= 0:
        raise ValueError(f"non-positive quantum dimension k={k}")
    dz = c2.designed_distance
    dx = c1.designed_distance
    params = AqeccParams(
        q=c1.q, n=c1.n, k=k, dz=dz, dx=dx,
        optimal=False,
    )
    return dataclasses.replace(params, optimal=singleton_margin(params) == 0)


def enumerate_family(spec: FamilySpec) -> list[AqeccParams]:
    """All quantum codes of a family instance, sorted by (s, t).

    Corner pairs whose quantum dimension would drop to zero (possible at
    the top of the range for short lengths) are skipped, so every entry
    is a genuine code.  Each one is asserted to attain the Singleton
    bound; a violation raises OptimalityError rather than emitting a
    wrong code.
    """
    lo, hi = spec.count_min, spec.count_max
    codes = {c: ConstacyclicCode.from_family(spec, c) for c in range(lo, hi + 1)}
    out = []
    for s in range(lo, hi + 1):
        for t in range(lo, s + 1):
            if codes[s].k + codes[t].k <= spec.n:
                continue
            raw = css_combine(codes[t], codes[s])
            params = dataclasses.replace(
                raw, family=spec.construction, s=s, t=t
            )
            if not params.optimal:
                raise OptimalityError(
                    f"{spec.label()} (s={s}, t={t}) missed the Singleton bound: "
                    f"{params.notation()}"
                )
            out.append(params)
    return out


def emit_table(codes: list[AqeccParams], fmt: str = "text") -> str:
    """Render a family table; deterministic (s, t) ordering."""
    if not codes:
        raise ValueError("empty code list")
    if fmt == "text":
        head = codes[0]
        lines = [
            f"family={head.family} q={head.q} n={head.n} codes={len(codes)}"
        ]
        lines.extend(c.notation() for c in codes)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        import json

        doc = {"codes": [c.to_json_dict() for c in codes]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
