"""The Z4-over-Z2 hypervector space and the soft sets defined on it."""

from __future__ import annotations

from importlib import resources

from .algebra import AbelianGroup, FiniteField, HyperVectorSpace, to_mask
from .bipolar import BipolarFuzzySet
from .soft import BipolarFuzzySoftSet

EVEN, ODD = (0, 2), (1, 3)

# degrees on (even, odd) classes for each parameter: (pos, neg)
PARITY_DEGREES = {
    "c": (("0.5", "0.3"), ("-0.4", "-0.2")),
    "d": (("0.7", "0.2"), ("-0.6", "-0.3")),
    "e": (("0.8", "0.4"), ("-0.7", "-0.5")),
}


def data_text(name: str) -> str:
    return resources.files("bfshvs").joinpath("data", name).read_text(encoding="utf-8")


def data_path(name: str):
    return resources.files("bfshvs").joinpath("data", name)


def z4_z2() -> HyperVectorSpace:
    K = FiniteField.prime(2)
    G = AbelianGroup.cyclic_product(4)
    hyperop = (
        (to_mask({0, 2}), to_mask({0}), to_mask({0}), to_mask({0})),
        (to_mask({0, 2}), to_mask({1, 2, 3}), to_mask({0, 2}), to_mask({1, 2, 3})),
    )
    return HyperVectorSpace(K, G, hyperop)


def class_constant(t1, t2, s1, s2) -> BipolarFuzzySet:
    """``t1``/``s1`` on {0, 2} and ``t2``/``s2`` on {1, 3}."""
    return BipolarFuzzySet.by_class((EVEN, ODD), (t1, t2), (s1, s2), 4)


def parity_bfs(t1="1/2", t2="3/10", s1="-2/5", s2="-1/5") -> BipolarFuzzySet:
    return class_constant(t1, t2, s1, s2)


def parity_soft_set() -> BipolarFuzzySoftSet:
    return BipolarFuzzySoftSet(
        4, {e: class_constant(pos[0], pos[1], neg[0], neg[1]) for e, (pos, neg) in PARITY_DEGREES.items()}
    )


def times(k: int) -> tuple[int, ...]:
    """The carrier map ``x -> k x`` on Z4."""
    return tuple(k * x % 4 for x in range(4))
