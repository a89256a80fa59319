"""Sum, extended sum, scalar product and negation of soft sets over a hypervector space."""

from __future__ import annotations

from fractions import Fraction

from .algebra import HyperVectorSpace, MalformedInput
from .bipolar import ZERO, BipolarFuzzySet, bfs_negate
from .soft import BipolarFuzzySoftSet


def _over(F: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> None:
    if F.size != hvs.size:
        raise MalformedInput(f"soft set has {F.size} elements, space has {hvs.size}")


def _slice_sum(f: BipolarFuzzySet, g: BipolarFuzzySet, hvs: HyperVectorSpace) -> BipolarFuzzySet:
    # x = y + z with y free and z = x - y; every x has exactly |V| decompositions.
    G = hvs.group
    pos: list[Fraction] = []
    neg: list[Fraction] = []
    for x in G.elements:
        best_pos = None
        best_neg = None
        for y in G.elements:
            z = G.sub(x, y)
            p = min(f.pos[y], g.pos[z])
            n = max(f.neg[y], g.neg[z])
            if best_pos is None or p > best_pos:
                best_pos = p
            if best_neg is None or n < best_neg:
                best_neg = n
        pos.append(best_pos)
        neg.append(best_neg)
    return BipolarFuzzySet(tuple(pos), tuple(neg))


def soft_sum(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> BipolarFuzzySoftSet:
    """Sup-min convolution on the shared parameters (empty result if none are shared)."""
    _over(F, hvs)
    _over(G, hvs)
    return BipolarFuzzySoftSet(F.size, {e: _slice_sum(F[e], G[e], hvs) for e in F.params if e in G})


def soft_extended_sum(F: BipolarFuzzySoftSet, G: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> BipolarFuzzySoftSet:
    _over(F, hvs)
    _over(G, hvs)
    sets = dict(G.sets)
    for e, f in F.sets.items():
        sets[e] = _slice_sum(f, G[e], hvs) if e in G else f
    return BipolarFuzzySoftSet(F.size, sets)


def _slice_scale(a: int, f: BipolarFuzzySet, hvs: HyperVectorSpace) -> BipolarFuzzySet:
    n = hvs.size
    pos: list = [None] * n
    neg: list = [None] * n
    row = hvs.hyperop[a]
    for t in range(n):
        cell = row[t]
        for x in range(n):
            if cell >> x & 1:
                if pos[x] is None or f.pos[t] > pos[x]:
                    pos[x] = f.pos[t]
                if neg[x] is None or f.neg[t] < neg[x]:
                    neg[x] = f.neg[t]
    # unreachable x gets 0 in both components, negative part included
    return BipolarFuzzySet(
        tuple(ZERO if v is None else v for v in pos),
        tuple(ZERO if v is None else v for v in neg),
    )


def scalar_product(a: int, F: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> BipolarFuzzySoftSet:
    """``a o F``: at ``x``, sup of pos (inf of neg) over all ``t`` with ``x in a o t``."""
    _over(F, hvs)
    if not 0 <= a < hvs.field.size:
        raise MalformedInput(f"scalar {a} is not a field element")
    return BipolarFuzzySoftSet(F.size, {e: _slice_scale(a, f, hvs) for e, f in F.sets.items()})


def soft_negate(F: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> BipolarFuzzySoftSet:
    _over(F, hvs)
    return BipolarFuzzySoftSet(F.size, {e: bfs_negate(f, hvs.group) for e, f in F.sets.items()})
