"""Bipolar fuzzy soft sets and their lattice-style operations."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .algebra import MalformedInput
from .bipolar import BipolarFuzzySet, join, meet

PAIR_SEP = "|"


def pair_id(first: str, second: str) -> str:
    return f"{first}{PAIR_SEP}{second}"


class BipolarFuzzySoftSet:
    """A map from parameter ids to bipolar fuzzy sets over one carrier.

    Parameters are kept sorted so equal values compare and print equally.
    The carrier size is stored explicitly so the empty soft set still knows
    where it lives.
    """

    __slots__ = ("size", "sets")

    def __init__(self, size: int, sets: Mapping[str, BipolarFuzzySet]):
        for e, b in sets.items():
            if not isinstance(e, str):
                raise MalformedInput(f"parameter ids are strings, got {e!r}")
            if b.size != size:
                raise MalformedInput(f"parameter {e!r} has {b.size} elements, expected {size}")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "sets", MappingProxyType(dict(sorted(sets.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("BipolarFuzzySoftSet is immutable")

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(self.sets)

    def __getitem__(self, e: str) -> BipolarFuzzySet:
        return self.sets[e]

    def __contains__(self, e: str) -> bool:
        return e in self.sets

    def __len__(self) -> int:
        return len(self.sets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipolarFuzzySoftSet):
            return NotImplemented
        return self.size == other.size and dict(self.sets) == dict(other.sets)

    def __hash__(self):
        return hash((self.size, tuple(self.sets.items())))

    def __repr__(self) -> str:
        return f"BipolarFuzzySoftSet(size={self.size}, params={list(self.params)})"

    def restrict(self, params: Iterable[str]) -> "BipolarFuzzySoftSet":
        keep = set(params)
        return BipolarFuzzySoftSet(self.size, {e: b for e, b in self.sets.items() if e in keep})

    def replace(self, e: str, b: BipolarFuzzySet) -> "BipolarFuzzySoftSet":
        sets = dict(self.sets)
        sets[e] = b
        return BipolarFuzzySoftSet(self.size, sets)


def _check(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> None:
    if F.size != G.size:
        raise MalformedInput(f"carrier mismatch: {F.size} vs {G.size}")


@dataclass(frozen=True)
class SubsetWitness:
    param: str
    element: Optional[int]
    component: str


def is_subset(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> tuple[bool, Optional[SubsetWitness]]:
    """``F`` below ``G``: parameters included, pos below and neg above pointwise.

    On failure the witness names the first offending parameter; a missing
    parameter is reported with ``element=None`` and component ``"param"``.
    """
    _check(F, G)
    for e, f in F.sets.items():
        if e not in G:
            return False, SubsetWitness(e, None, "param")
        g = G[e]
        for x in range(F.size):
            if f.pos[x] > g.pos[x]:
                return False, SubsetWitness(e, x, "pos")
            if f.neg[x] < g.neg[x]:
                return False, SubsetWitness(e, x, "neg")
    return True, None


def intersection(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    _check(F, G)
    return BipolarFuzzySoftSet(F.size, {e: meet(F[e], G[e]) for e in F.params if e in G})


def extended_intersection(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    _check(F, G)
    sets = dict(G.sets)
    for e, f in F.sets.items():
        sets[e] = meet(f, G[e]) if e in G else f
    return BipolarFuzzySoftSet(F.size, sets)


def union(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    _check(F, G)
    sets = dict(G.sets)
    for e, f in F.sets.items():
        sets[e] = join(f, G[e]) if e in G else f
    return BipolarFuzzySoftSet(F.size, sets)


def restricted_union(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    _check(F, G)
    return BipolarFuzzySoftSet(F.size, {e: join(F[e], G[e]) for e in F.params if e in G})


def and_product(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """Parameters ``first|second`` over A x B, meet of the two slices."""
    _check(F, G)
    return BipolarFuzzySoftSet(
        F.size, {pair_id(e1, e2): meet(F[e1], G[e2]) for e1 in F.params for e2 in G.params}
    )


def or_product(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    _check(F, G)
    return BipolarFuzzySoftSet(
        F.size, {pair_id(e1, e2): join(F[e1], G[e2]) for e1 in F.params for e2 in G.params}
    )


def family_union(Fs: Iterable[BipolarFuzzySoftSet]) -> BipolarFuzzySoftSet:
    """Pointwise sup of positive and inf of negative parts over a family on one parameter set."""
    Fs = list(Fs)
    if not Fs:
        raise MalformedInput("family_union of an empty family")
    first = Fs[0]
    for F in Fs[1:]:
        _check(first, F)
        if F.params != first.params:
            raise MalformedInput("family members must share one parameter set")
    out = first
    for F in Fs[1:]:
        out = union(out, F)
    return out
