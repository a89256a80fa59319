"""Bipolar fuzzy sets over a finite carrier with exact rational degrees."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import AbelianGroup, MalformedInput, ValidationReport

ZERO = Fraction(0)
ONE = Fraction(1)


def degree(value) -> Fraction:
    """Exact degree from an int, Fraction or literal such as ``"3/10"``/``"0.3"``.

    Floats are rejected: ``0.3`` as a binary float is not three tenths.
    """
    if isinstance(value, float):
        raise TypeError("degrees must be exact; pass a string or Fraction, not a float")
    return Fraction(value)


@dataclass(frozen=True)
class BipolarFuzzySet:
    """Positive degrees in [0, 1] and negative degrees in [-1, 0], one per element."""

    pos: tuple[Fraction, ...]
    neg: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.pos) != len(self.neg):
            raise MalformedInput("positive and negative parts differ in length")

    @classmethod
    def of(cls, pos: Iterable, neg: Iterable) -> "BipolarFuzzySet":
        return cls(tuple(degree(v) for v in pos), tuple(degree(v) for v in neg))

    @classmethod
    def constant(cls, n: int, pos, neg) -> "BipolarFuzzySet":
        return cls((degree(pos),) * n, (degree(neg),) * n)

    @classmethod
    def by_class(cls, classes: Sequence[Iterable[int]], pos: Sequence, neg: Sequence, n: int) -> "BipolarFuzzySet":
        """Piecewise-constant set: elements of ``classes[i]`` get ``pos[i]``/``neg[i]``."""
        p: list = [None] * n
        q: list = [None] * n
        for members_, tp, tn in zip(classes, pos, neg):
            for x in members_:
                p[x], q[x] = degree(tp), degree(tn)
        if None in p:
            raise MalformedInput("classes do not cover the carrier")
        return cls(tuple(p), tuple(q))

    @property
    def size(self) -> int:
        return len(self.pos)

    def __getitem__(self, x: int) -> tuple[Fraction, Fraction]:
        return self.pos[x], self.neg[x]


def validate_bfs(b: BipolarFuzzySet) -> ValidationReport:
    failures = []
    for x, v in enumerate(b.pos):
        if not ZERO <= v <= ONE:
            failures.append((x, "pos", v))
    for x, v in enumerate(b.neg):
        if not -ONE <= v <= ZERO:
            failures.append((x, "neg", v))
    return ValidationReport(not failures, failures)


def _same_carrier(*sets: BipolarFuzzySet) -> int:
    sizes = {s.size for s in sets}
    if len(sizes) != 1:
        raise MalformedInput(f"carrier mismatch: sizes {sorted(sizes)}")
    return sizes.pop()


def bfs_negate(b: BipolarFuzzySet, g: AbelianGroup) -> BipolarFuzzySet:
    """``x -> b(-x)``."""
    if b.size != g.size:
        raise MalformedInput(f"carrier mismatch: set has {b.size} elements, group {g.size}")
    return BipolarFuzzySet(
        tuple(b.pos[g.neg(x)] for x in g.elements),
        tuple(b.neg[g.neg(x)] for x in g.elements),
    )


_OPS: dict[str, Callable] = {"min": min, "max": max}


def bfs_pointwise(op: str, component: str, b1: BipolarFuzzySet, b2: BipolarFuzzySet) -> BipolarFuzzySet:
    """Combine one component pointwise with ``min``/``max``.

    The other component is combined with the dual operation, which is the
    pairing every lattice operation uses: meet-like is (min pos, max neg),
    join-like is (max pos, min neg).
    """
    _same_carrier(b1, b2)
    if op not in _OPS or component not in ("pos", "neg"):
        raise ValueError(f"bad pointwise request {op!r}/{component!r}")
    dual = "max" if op == "min" else "min"
    pos_op, neg_op = (_OPS[op], _OPS[dual]) if component == "pos" else (_OPS[dual], _OPS[op])
    return BipolarFuzzySet(
        tuple(map(pos_op, b1.pos, b2.pos)),
        tuple(map(neg_op, b1.neg, b2.neg)),
    )


def meet(b1: BipolarFuzzySet, b2: BipolarFuzzySet) -> BipolarFuzzySet:
    return bfs_pointwise("min", "pos", b1, b2)


def join(b1: BipolarFuzzySet, b2: BipolarFuzzySet) -> BipolarFuzzySet:
    return bfs_pointwise("max", "pos", b1, b2)
