"""Fuzzy soft functions between hypervector spaces: classification, image, preimage."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from .algebra import HyperVectorSpace, MalformedInput, members, to_mask
from .bipolar import ZERO, BipolarFuzzySet
from .soft import BipolarFuzzySoftSet


@dataclass(frozen=True)
class FuzzySoftFunction:
    """Carrier map ``phi`` (as a tuple indexed by element) plus parameter map ``f``."""

    phi: tuple[int, ...]
    f: Mapping[str, str]
    codomain_size: int

    def __init__(self, phi: Sequence[int], f: Mapping[str, str], codomain_size: Optional[int] = None):
        phi = tuple(int(v) for v in phi)
        m = codomain_size if codomain_size is not None else (max(phi) + 1 if phi else 0)
        if any(not 0 <= v < m for v in phi):
            raise MalformedInput(f"carrier map leaves the codomain of size {m}")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "f", MappingProxyType(dict(sorted(f.items()))))
        object.__setattr__(self, "codomain_size", m)

    def __hash__(self):
        return hash((self.phi, tuple(self.f.items()), self.codomain_size))

    def __eq__(self, other):
        if not isinstance(other, FuzzySoftFunction):
            return NotImplemented
        return (self.phi, dict(self.f), self.codomain_size) == (other.phi, dict(other.f), other.codomain_size)

    @property
    def domain_size(self) -> int:
        return len(self.phi)


@dataclass
class LinearityReport:
    additive: bool
    linear: bool
    good: bool
    additive_witness: Optional[tuple] = None
    linear_witness: Optional[tuple] = None
    good_witness: Optional[tuple] = None

    def as_dict(self) -> dict:
        def w(t):
            return None if t is None else [list(v) if isinstance(v, tuple) else v for v in t]

        return {
            "additive": self.additive,
            "linear": self.linear,
            "good": self.good,
            "additive_witness": w(self.additive_witness),
            "linear_witness": w(self.linear_witness),
            "good_witness": w(self.good_witness),
        }


def _image_of(phi: Sequence[int], mask: int) -> int:
    return to_mask(phi[t] for t in members(mask))


def classify_map(T: Sequence[int], V: HyperVectorSpace, W: HyperVectorSpace) -> LinearityReport:
    """Exhaustively test additivity, ``T(a o x) <= a o T(x)`` and equality.

    Witnesses: additivity ``(x, y)``; linearity and goodness
    ``(a, x, T(a o x), a o T(x))`` with the two sets as sorted tuples. Linear
    here means additive plus the inclusion, so ``good`` implies ``linear``.
    """
    if V.field != W.field:
        raise MalformedInput("domain and codomain are over different fields")
    T = tuple(T)
    if len(T) != V.size or any(not 0 <= v < W.size for v in T):
        raise MalformedInput("map is not total from V into W")
    add_w = None
    for x in V.group.elements:
        for y in V.group.elements:
            if T[V.group.add[x][y]] != W.group.add[T[x]][T[y]]:
                add_w = (x, y)
                break
        if add_w:
            break
    incl_w = eq_w = None
    for a in V.field.elements:
        for x in V.group.elements:
            left = _image_of(T, V.hyperop[a][x])
            right = W.hyperop[a][T[x]]
            if left != right and eq_w is None:
                eq_w = (a, x, members(left), members(right))
            if left & ~right and incl_w is None:
                incl_w = (a, x, members(left), members(right))
    additive = add_w is None
    linear = additive and incl_w is None
    good = linear and eq_w is None
    return LinearityReport(additive, linear, good, add_w, incl_w, eq_w)


def image(ff: FuzzySoftFunction, F: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """Push ``F`` forward: sup/inf over carrier and parameter preimages, (0, 0) off the range."""
    if F.size != ff.domain_size:
        raise MalformedInput(f"soft set has {F.size} elements, map domain has {ff.domain_size}")
    if set(F.params) != set(ff.f):
        raise MalformedInput("parameter map domain must equal the soft set's parameters")
    m = ff.codomain_size
    out: dict[str, BipolarFuzzySet] = {}
    for u in sorted(set(ff.f.values())):
        pre_params = [e for e in F.params if ff.f[e] == u]
        pos: list = [None] * m
        neg: list = [None] * m
        for x, y in enumerate(ff.phi):
            for e in pre_params:
                p, q = F[e].pos[x], F[e].neg[x]
                if pos[y] is None or p > pos[y]:
                    pos[y] = p
                if neg[y] is None or q < neg[y]:
                    neg[y] = q
        out[u] = BipolarFuzzySet(
            tuple(ZERO if v is None else v for v in pos),
            tuple(ZERO if v is None else v for v in neg),
        )
    return BipolarFuzzySoftSet(m, out)


def preimage(ff: FuzzySoftFunction, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    if G.size != ff.codomain_size:
        raise MalformedInput(f"soft set has {G.size} elements, map codomain has {ff.codomain_size}")
    missing = sorted(u for u in ff.f.values() if u not in G)
    if missing:
        raise MalformedInput(f"parameter map hits {missing} outside the soft set's parameters")
    return BipolarFuzzySoftSet(
        ff.domain_size,
        {
            e: BipolarFuzzySet(
                tuple(G[u].pos[y] for y in ff.phi),
                tuple(G[u].neg[y] for y in ff.phi),
            )
            for e, u in ff.f.items()
        },
    )
