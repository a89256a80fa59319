"""Decision procedures for bipolar fuzzy subhyperspaces and soft hypervector spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import HyperVectorSpace, MalformedInput, members
from .bipolar import BipolarFuzzySet
from .soft import BipolarFuzzySoftSet

CONDITIONS = ("sub-pos", "sub-neg", "scal-pos", "scal-neg")


@dataclass(frozen=True)
class Witness:
    """One violated inequality.

    ``args`` is ``(x, y)`` for the subtraction conditions and ``(a, x)`` for
    the scaling conditions. ``lhs`` must be >= ``rhs`` for the positive
    conditions and <= ``rhs`` for the negative ones.
    """

    condition: str
    param: Optional[str]
    args: tuple[int, int]
    lhs: Fraction
    rhs: Fraction

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "param": self.param,
            "args": list(self.args),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass
class CheckReport:
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.verdict

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "witnesses": [w.as_dict() for w in self.witnesses]}


def _subhyperspace_witnesses(b: BipolarFuzzySet, hvs: HyperVectorSpace, param: Optional[str]) -> list[Witness]:
    if b.size != hvs.size:
        raise MalformedInput(f"set has {b.size} elements, space has {hvs.size}")
    G = hvs.group
    out: list[Witness] = []
    pos, neg = b.pos, b.neg
    for x in G.elements:
        for y in G.elements:
            d = G.sub(x, y)
            rhs = min(pos[x], pos[y])
            if pos[d] < rhs:
                out.append(Witness("sub-pos", param, (x, y), pos[d], rhs))
            rhs = max(neg[x], neg[y])
            if neg[d] > rhs:
                out.append(Witness("sub-neg", param, (x, y), neg[d], rhs))
    for a in hvs.field.elements:
        for x in G.elements:
            cell = members(hvs.hyperop[a][x])
            lhs = min(pos[t] for t in cell)
            if lhs < pos[x]:
                out.append(Witness("scal-pos", param, (a, x), lhs, pos[x]))
            lhs = max(neg[t] for t in cell)
            if lhs > neg[x]:
                out.append(Witness("scal-neg", param, (a, x), lhs, neg[x]))
    return out


def is_subhyperspace(b: BipolarFuzzySet, hvs: HyperVectorSpace) -> CheckReport:
    return CheckReport(_subhyperspace_witnesses(b, hvs, None))


@dataclass
class SoftCheckReport:
    per_param: dict[str, CheckReport]

    @property
    def verdict(self) -> bool:
        return all(r.verdict for r in self.per_param.values())

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def witnesses(self) -> list[Witness]:
        return [w for r in self.per_param.values() for w in r.witnesses]

    @property
    def failing_params(self) -> list[str]:
        return [e for e, r in self.per_param.items() if not r.verdict]

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "params": {e: r.as_dict() for e, r in self.per_param.items()},
        }


def is_bfs_hypervector_space(F: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> SoftCheckReport:
    """Check every parameter slice; the empty soft set passes vacuously."""
    if F.size != hvs.size:
        raise MalformedInput(f"soft set has {F.size} elements, space has {hvs.size}")
    return SoftCheckReport({e: CheckReport(_subhyperspace_witnesses(b, hvs, e)) for e, b in F.sets.items()})
