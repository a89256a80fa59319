"""Instance generation, the registered property suite and counterexample search.

Every random choice flows from a ``random.Random`` seeded with a string built
from the master seed and an instance index, so results do not depend on the
order in which instances are evaluated.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from . import fixtures
from .algebra import (
    COMPAT,
    STRICT,
    AbelianGroup,
    AxiomMode,
    FiniteField,
    HyperVectorSpace,
    check_axioms,
    members,
    set_negate,
    to_mask,
)
from .bipolar import BipolarFuzzySet, validate_bfs
from .hvsops import scalar_product, soft_extended_sum, soft_negate, soft_sum
from .soft import (
    BipolarFuzzySoftSet,
    and_product,
    extended_intersection,
    family_union,
    intersection,
    is_subset,
    restricted_union,
    union,
)
from .structure import is_bfs_hypervector_space
from .textio import Document, print_document
from .transforms import FuzzySoftFunction, classify_map, image, preimage

STRATEGIES = ("fixture", "constructive", "filtered-random")
MAX_SIZE = 16
MAX_FIELD = 5
PARAM_POOL = ("p", "q", "r", "s")


class Exhausted(RuntimeError):
    """A generation budget ran out before producing a single instance."""


def seeded(*parts) -> random.Random:
    return random.Random(":".join(str(p) for p in parts))


@dataclass(frozen=True)
class InstanceSpec:
    max_size: int = 8
    field: int = 2
    strategy: str = "constructive"
    mode: AxiomMode = STRICT
    seed: int = 0
    attempts: int = 2000

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.field not in (2, 3):
            raise ValueError("field must be 2 or 3")
        if not 1 <= self.max_size <= MAX_SIZE:
            raise ValueError(f"max_size must be within 1..{MAX_SIZE}")

    def as_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "field": self.field,
            "strategy": self.strategy,
            "mode": self.mode.name,
            "seed": self.seed,
        }


# -- groups and constructive spaces -----------------------------------------

def _factorisations(n: int, smallest: int = 2) -> list[tuple[int, ...]]:
    if n == 1:
        return [()]
    out = []
    for k in range(smallest, n + 1):
        if n % k == 0:
            out += [(k,) + rest for rest in _factorisations(n // k, k)]
    return out


def group_catalogue(max_size: int) -> list[tuple[tuple[int, ...], AbelianGroup]]:
    """Products of cyclic groups of order at most ``max_size`` (isomorphic repeats allowed)."""
    out = []
    for n in range(1, max_size + 1):
        for orders in _factorisations(n):
            out.append((orders or (1,), AbelianGroup.cyclic_product(*(orders or (1,)))))
    return out


def subgroups(G: AbelianGroup) -> list[int]:
    """All subgroups as bitsets, smallest first."""
    seen = {1 << G.zero}
    frontier = [1 << G.zero]

    def close(mask):
        elems = set(members(mask))
        while True:
            new = {G.add[x][y] for x in elems for y in elems} | elems
            if new == elems:
                return to_mask(elems)
            elems = new

    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if not H >> g & 1:
                    K = close(H | 1 << g)
                    if K not in seen:
                        seen.add(K)
                        nxt.append(K)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


def _scalar_multiple(G: AbelianGroup, a: int, x: int) -> int:
    out = G.zero
    for _ in range(a):
        out = G.add[out][x]
    return out


def total_space(K: FiniteField, G: AbelianGroup) -> HyperVectorSpace:
    return HyperVectorSpace(K, G, tuple((G.full,) * G.size for _ in K.elements))


def inflated_space(K: FiniteField, G: AbelianGroup, W: int) -> HyperVectorSpace:
    """``a o x = a x + W`` on a vector space over a prime field (``W = {0}`` is classical)."""
    cells = []
    for a in K.elements:
        row = []
        for x in G.elements:
            ax = _scalar_multiple(G, a, x)
            row.append(to_mask(G.add[ax][w] for w in members(W)))
        cells.append(tuple(row))
    return HyperVectorSpace(K, G, tuple(cells))


def constructive_spaces(p: int, max_size: int) -> list[tuple[str, HyperVectorSpace]]:
    """Total hyperoperation on every catalogued group; ``a x + W`` on each ``Z_p^k``."""
    K = FiniteField.prime(p)
    out = []
    for orders, G in group_catalogue(max_size):
        label = "x".join(f"Z{k}" for k in orders)
        out.append((f"total/{label}", total_space(K, G)))
        if all(k == p for k in orders) and orders != (1,):
            for W in subgroups(G):
                out.append((f"inflate/{label}/W{members(W)}", inflated_space(K, G, W)))
    return out


@dataclass
class HvsStream:
    """Iterable of hypervector spaces plus generation statistics."""

    spec: InstanceSpec
    proposed: int = 0
    accepted: int = 0
    labels: list[str] = field(default_factory=list)

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.proposed if self.proposed else 0.0

    def __iter__(self) -> Iterator[HyperVectorSpace]:
        spec = self.spec
        if spec.strategy == "fixture":
            hvs = fixtures.z4_z2()
            self.proposed += 1
            if check_axioms(hvs, spec.mode).ok:
                self.accepted += 1
                self.labels.append("fixture/z4_z2")
                yield hvs
            return
        if spec.strategy == "constructive":
            for label, hvs in constructive_spaces(spec.field, spec.max_size):
                self.proposed += 1
                if check_axioms(hvs, spec.mode).ok:
                    self.accepted += 1
                    self.labels.append(label)
                    yield hvs
            return
        catalogue = [g for g in group_catalogue(spec.max_size) if g[1].size > 1]
        if not catalogue:
            raise Exhausted("no group with more than one element fits max_size")
        K = FiniteField.prime(spec.field)
        i = 0
        while True:
            budget_left = spec.attempts
            while budget_left:
                budget_left -= 1
                rng = seeded(spec.seed, "hvs", i)
                i += 1
                orders, G = rng.choice(catalogue)
                hvs = random_hyperoperation(K, G, rng)
                self.proposed += 1
                if check_axioms(hvs, spec.mode).ok:
                    self.accepted += 1
                    self.labels.append("random/" + "x".join(f"Z{k}" for k in orders) + f"/{i - 1}")
                    yield hvs
                    break
            else:
                if not self.accepted:
                    raise Exhausted(f"no {spec.mode.name} instance in {spec.attempts} proposals")
                return


def random_hyperoperation(K: FiniteField, G: AbelianGroup, rng: random.Random) -> HyperVectorSpace:
    """Random cells already satisfying H4 and H5; H1-H3 are left to the filter.

    Each orbit ``{(a, x), (-a, x), (a, -x), (-a, -x)}`` gets one random cell R,
    with ``-R`` at the odd positions, symmetrised when the orbit folds.
    """
    n = G.size
    cells: list[list[Optional[int]]] = [[None] * n for _ in K.elements]
    density = rng.choice((0.25, 0.4, 0.6))
    for a in K.elements:
        for x in G.elements:
            if cells[a][x] is not None:
                continue
            R = to_mask(t for t in G.elements if rng.random() < density)
            if rng.random() < 0.3:
                R |= 1 << _scalar_multiple(G, a, x)
            if a == K.one:
                R |= 1 << x
            if R == 0:
                R = 1 << rng.randrange(n)
            na, nx = K.neg(a), G.neg(x)
            if na == a or nx == x:
                R |= set_negate(R, G)
            cells[a][x] = cells[na][nx] = R
            cells[na][x] = cells[a][nx] = set_negate(R, G)
    return HyperVectorSpace(K, G, tuple(tuple(row) for row in cells))


def generate_hvs(spec: InstanceSpec) -> HvsStream:
    return HvsStream(spec)


# -- soft set generation ----------------------------------------------------

def random_degree(rng: random.Random) -> Fraction:
    d = rng.choice((10, 10, 12))
    return Fraction(rng.randint(0, d), d)


def closed_subspaces(hvs: HyperVectorSpace) -> list[int]:
    """Subgroups S with ``a o x`` inside S for every x in S; V itself always qualifies."""
    out = []
    for S in subgroups(hvs.group):
        if all(hvs.hyperop[a][x] & ~S == 0 for a in hvs.field.elements for x in members(S)):
            out.append(S)
    return out


def _chain_values(hvs: HyperVectorSpace, closed: list[int], rng: random.Random) -> list[Fraction]:
    chain = [rng.choice(closed)]
    while chain[-1] != hvs.group.full:
        bigger = [S for S in closed if S != chain[-1] and S & chain[-1] == chain[-1]]
        chain.append(rng.choice(bigger))
    levels = sorted({random_degree(rng) for _ in range(len(chain) + 2)}, reverse=True)
    while len(levels) < len(chain):
        levels.append(levels[-1])
    levels = sorted(rng.sample(levels, len(chain)), reverse=True)
    values: list[Optional[Fraction]] = [None] * hvs.size
    for S, v in zip(chain, levels):
        for x in members(S):
            if values[x] is None:
                values[x] = v
    return values  # type: ignore[return-value]


def repair_pos(values: list[Fraction], hvs: HyperVectorSpace) -> list[Fraction]:
    """Smallest raise of ``values`` meeting both positive conditions (a closure, so it terminates)."""
    p = list(values)
    G = hvs.group
    changed = True
    while changed:
        changed = False
        for x in G.elements:
            for y in G.elements:
                d = G.sub(x, y)
                v = min(p[x], p[y])
                if p[d] < v:
                    p[d] = v
                    changed = True
        for a in hvs.field.elements:
            for x in G.elements:
                for t in members(hvs.hyperop[a][x]):
                    if p[t] < p[x]:
                        p[t] = p[x]
                        changed = True
    return p


def repair_neg(values: list[Fraction], hvs: HyperVectorSpace) -> list[Fraction]:
    q = [-v for v in values]
    return [-v for v in repair_pos(q, hvs)]


def random_bfs(hvs: HyperVectorSpace, rng: random.Random, closed: Optional[list[int]] = None) -> BipolarFuzzySet:
    """A bipolar fuzzy subhyperspace, by level chains or by perturb-then-repair."""
    if rng.random() < 0.5:
        closed = closed if closed is not None else closed_subspaces(hvs)
        pos = _chain_values(hvs, closed, rng)
        neg = [-v for v in _chain_values(hvs, closed, rng)]
    else:
        pos = repair_pos([random_degree(rng) for _ in range(hvs.size)], hvs)
        neg = repair_neg([-random_degree(rng) for _ in range(hvs.size)], hvs)
    return BipolarFuzzySet(tuple(pos), tuple(neg))


def arbitrary_bfs(n: int, rng: random.Random) -> BipolarFuzzySet:
    return BipolarFuzzySet(
        tuple(random_degree(rng) for _ in range(n)),
        tuple(-random_degree(rng) for _ in range(n)),
    )


def _params(rng: random.Random, lo: int = 1, hi: int = 3) -> list[str]:
    return sorted(rng.sample(PARAM_POOL, rng.randint(lo, hi)))


def random_bfshvs(hvs: HyperVectorSpace, rng: random.Random, params: Optional[list[str]] = None,
                  closed: Optional[list[int]] = None) -> BipolarFuzzySoftSet:
    params = params if params is not None else _params(rng)
    closed = closed if closed is not None else closed_subspaces(hvs)
    return BipolarFuzzySoftSet(hvs.size, {e: random_bfs(hvs, rng, closed) for e in params})


def random_bfss(n: int, rng: random.Random, params: Optional[list[str]] = None) -> BipolarFuzzySoftSet:
    params = params if params is not None else _params(rng)
    return BipolarFuzzySoftSet(n, {e: arbitrary_bfs(n, rng) for e in params})


def generate_bfshvs(hvs: HyperVectorSpace, seed: int, budget: Optional[int] = None) -> Iterator[BipolarFuzzySoftSet]:
    """Stream of soft sets that pass :func:`is_bfs_hypervector_space`, each re-checked."""
    closed = closed_subspaces(hvs)
    i = 0
    while budget is None or i < budget:
        rng = seeded(seed, "bfshvs", i)
        i += 1
        F = random_bfshvs(hvs, rng, closed=closed)
        if is_bfs_hypervector_space(F, hvs).verdict:
            yield F


def endomorphisms(G: AbelianGroup, rng: random.Random, count: int = 4, tries: int = 40) -> list[tuple[int, ...]]:
    """Identity, zero and some random group endomorphisms (found via generator images)."""
    gens: list[int] = []
    H = 1 << G.zero
    for x in G.elements:
        if not H >> x & 1:
            gens.append(x)
            H = _span(G, H, x)
    found = {tuple(G.elements), (G.zero,) * G.size}
    for _ in range(tries):
        if len(found) >= count + 2:
            break
        img = {g: rng.randrange(G.size) for g in gens}
        phi = _extend(G, gens, img)
        if phi is not None:
            found.add(phi)
    return sorted(found)


def _span(G: AbelianGroup, H: int, x: int) -> int:
    elems = set(members(H)) | {x}
    while True:
        new = elems | {G.add[a][b] for a in elems for b in elems}
        if new == elems:
            return to_mask(elems)
        elems = new


def _extend(G: AbelianGroup, gens: list[int], img: dict[int, int]) -> Optional[tuple[int, ...]]:
    phi: dict[int, int] = {G.zero: G.zero}
    queue = [G.zero]
    while queue:
        x = queue.pop()
        for g in gens:
            y, v = G.add[x][g], G.add[phi[x]][img[g]]
            if y in phi:
                if phi[y] != v:
                    return None
            else:
                phi[y] = v
                queue.append(y)
    # consistency on all pairs; generator images alone do not guarantee it
    for x in G.elements:
        for y in G.elements:
            if phi[G.add[x][y]] != G.add[phi[x]][phi[y]]:
                return None
    return tuple(phi[x] for x in G.elements)


# -- cases and properties ---------------------------------------------------

@dataclass(frozen=True)
class Case:
    """One property instance: a space, named soft sets and optional scalar/map."""

    hvs: HyperVectorSpace
    mode: AxiomMode
    inputs: tuple[tuple[str, BipolarFuzzySoftSet], ...]
    scalar: Optional[int] = None
    phi: Optional[tuple[int, ...]] = None
    fmap: Optional[tuple[tuple[str, str], ...]] = None

    def get(self, name: str) -> BipolarFuzzySoftSet:
        return dict(self.inputs)[name]

    def with_inputs(self, inputs: dict[str, BipolarFuzzySoftSet]) -> "Case":
        return replace(self, inputs=tuple(sorted(inputs.items())))

    @property
    def function(self) -> FuzzySoftFunction:
        return FuzzySoftFunction(self.phi, dict(self.fmap), self.hvs.size)

    def document(self) -> Document:
        doc = Document()
        doc.add_hvs("V", self.hvs)
        for name, F in self.inputs:
            doc.bfss[name] = F
        if self.phi is not None:
            doc.maps["T"] = self.function
        return doc

    def text(self) -> str:
        return print_document(self.document())

    def digest(self) -> str:
        extra = f"scalar={self.scalar};mode={self.mode.name}\n"
        return hashlib.sha256((self.text() + extra).encode()).hexdigest()[:16]

    def as_dict(self) -> dict:
        return {"mode": self.mode.name, "scalar": self.scalar, "document": self.text()}


Failure = dict


def _bfshvs_failure(op: str, R: BipolarFuzzySoftSet, hvs: HyperVectorSpace) -> list[Failure]:
    report = is_bfs_hypervector_space(R, hvs)
    if report.verdict:
        return []
    w = report.witnesses[0]
    return [{"operation": op, "witness": w.as_dict(), "violations": len(report.witnesses)}]


def _axioms_ok(case: Case) -> Optional[str]:
    if not check_axioms(case.hvs, case.mode).ok:
        return f"space fails the axioms under {case.mode.name} mode"
    return None


def _inputs_bfshvs(case: Case, names=None) -> Optional[str]:
    for name, F in case.inputs:
        if names is not None and name not in names:
            continue
        if not is_bfs_hypervector_space(F, case.hvs).verdict:
            return f"input {name} is not a bipolar fuzzy soft hypervector space"
    return None


def _first(*checks: Callable[[], Optional[str]]) -> Optional[str]:
    for check in checks:
        reason = check()
        if reason:
            return reason
    return None


def _valid_degrees(case: Case) -> Optional[str]:
    for name, F in case.inputs:
        for e, b in F.sets.items():
            if not validate_bfs(b).ok:
                return f"input {name}/{e} has out-of-range degrees"
    return None


# P1 -----------------------------------------------------------------------

def _sample_pair(hvs, rng, bfshvs: bool, overlap: Optional[bool] = None):
    closed = closed_subspaces(hvs) if bfshvs else None
    A = _params(rng)
    if overlap is None:
        B = _params(rng)
    elif overlap:
        B = sorted(set(_params(rng, 0, 2)) | {rng.choice(A)})
    else:
        rest = [e for e in PARAM_POOL if e not in A] or ["t"]
        B = sorted(rng.sample(rest, rng.randint(1, len(rest))))
    make = (lambda P: random_bfshvs(hvs, rng, P, closed)) if bfshvs else (lambda P: random_bfss(hvs.size, rng, P))
    return make(A), make(B)


def _p1_sample(hvs, mode, rng):
    F, G = _sample_pair(hvs, rng, bfshvs=False, overlap=True)
    return Case(hvs, mode, (("F", F), ("G", G)))


def _p1_check(case):
    F, G, hvs = case.get("F"), case.get("G"), case.hvs
    S = soft_sum(F, G, hvs)
    out = []
    add = hvs.group.add
    for e in S.params:
        for x in hvs.group.elements:
            for y in hvs.group.elements:
                s = S[e]
                lo = min(F[e].pos[x], G[e].pos[y])
                hi = max(F[e].neg[x], G[e].neg[y])
                if s.pos[add[x][y]] < lo or s.neg[add[x][y]] > hi:
                    out.append({"param": e, "x": x, "y": y,
                                "sum": [str(s.pos[add[x][y]]), str(s.neg[add[x][y]])],
                                "bound": [str(lo), str(hi)]})
    return out


# P2 -----------------------------------------------------------------------

def _p2_sample(hvs, mode, rng):
    return Case(hvs, mode, (("F", random_bfss(hvs.size, rng)),))


def _h4_h5(case):
    v = check_axioms(case.hvs, case.mode).verdicts
    if not (v["H4"] and v["H5"]):
        return "space fails H4 or H5"
    return None


def _p2_check(case):
    F, hvs = case.get("F"), case.hvs
    K = hvs.field
    out = []
    ok, w = is_subset(F, scalar_product(K.one, F, hvs))
    if not ok:
        out.append({"claim": "F <= 1 o F", "param": w.param, "element": w.element, "component": w.component})
    ok, w = is_subset(soft_negate(F, hvs), scalar_product(K.neg(K.one), F, hvs))
    if not ok:
        out.append({"claim": "-F <= (-1) o F", "param": w.param, "element": w.element, "component": w.component})
    return out


# P3 -----------------------------------------------------------------------

def _p3_sample(hvs, mode, rng):
    A = _params(rng)
    inputs = {}
    for i in range(rng.randint(1, 3)):
        inputs[f"F{i}"] = random_bfss(hvs.size, rng, A)
    for j in range(rng.randint(1, 3)):
        inputs[f"G{j}"] = random_bfss(hvs.size, rng, A)
    return Case(hvs, mode, tuple(sorted(inputs.items())), scalar=rng.randrange(hvs.field.size))


def _same_params(case):
    ps = {F.params for _, F in case.inputs}
    if len(ps) != 1:
        return "family members must share one parameter set"
    if not any(n.startswith("F") for n, _ in case.inputs) or not any(n.startswith("G") for n, _ in case.inputs):
        return "both families must be nonempty"
    return None


def _p3_check(case):
    hvs, a = case.hvs, case.scalar
    Fs = [F for n, F in case.inputs if n.startswith("F")]
    Gs = [G for n, G in case.inputs if n.startswith("G")]
    out = []
    left = soft_sum(family_union(Fs), family_union(Gs), hvs)
    right = family_union([soft_sum(F, G, hvs) for F in Fs for G in Gs])
    if left != right:
        out.append({"claim": "sum distributes over families"})
    left = scalar_product(a, family_union(Fs), hvs)
    right = family_union([scalar_product(a, F, hvs) for F in Fs])
    if left != right:
        out.append({"claim": "scalar product distributes over families", "scalar": a})
    return out


# P4..P8 -------------------------------------------------------------------

def _pair_sampler(overlap: Optional[bool]):
    def sample(hvs, mode, rng):
        ov = overlap
        if ov is None:
            ov = rng.random() < 0.6
        F, G = _sample_pair(hvs, rng, bfshvs=True, overlap=ov)
        return Case(hvs, mode, (("F", F), ("G", G)), scalar=rng.randrange(hvs.field.size))
    return sample


_P4_OPS = {
    "meet": intersection,
    "extended-meet": extended_intersection,
    "join-disjoint": union,
    "restricted-join": restricted_union,
    "and": and_product,
}


def _p4_checker(ops=tuple(_P4_OPS)):
    def check(case):
        F, G, hvs = case.get("F"), case.get("G"), case.hvs
        out = []
        for op in ops:
            if op == "join-disjoint" and set(F.params) & set(G.params):
                continue
            out += _bfshvs_failure(op, _P4_OPS[op](F, G), hvs)
        return out
    return check


def _disjoint(case):
    if set(case.get("F").params) & set(case.get("G").params):
        return "parameter sets overlap"
    return None


def _overlap(case):
    if not set(case.get("F").params) & set(case.get("G").params):
        return "parameter sets are disjoint"
    return None


def _p4_union_check(case):
    return _bfshvs_failure("join", union(case.get("F"), case.get("G")), case.hvs)


def _p5_check(case):
    return _bfshvs_failure("sum", soft_sum(case.get("F"), case.get("G"), case.hvs), case.hvs)


def _p6_check(case):
    return _bfshvs_failure("extended-sum", soft_extended_sum(case.get("F"), case.get("G"), case.hvs), case.hvs)


def _p8_check(case):
    return _bfshvs_failure("and", and_product(case.get("F"), case.get("G")), case.hvs)


def _p7_sample(hvs, mode, rng):
    return Case(hvs, mode, (("F", random_bfshvs(hvs, rng)),), scalar=rng.randrange(hvs.field.size))


def _strong_right(case):
    if not check_axioms(case.hvs, case.mode).strongly_right:
        return "space is not strongly right distributive"
    return None


def _p7_check(case):
    out = []
    for a in case.hvs.field.elements:
        for f in _bfshvs_failure(f"scalar {a}", scalar_product(a, case.get("F"), case.hvs), case.hvs):
            out.append(f)
    return out


# P9, P10 ------------------------------------------------------------------

def _maps_for(hvs: HyperVectorSpace, rng: random.Random) -> list[tuple[int, ...]]:
    maps = endomorphisms(hvs.group, rng)
    if hvs == fixtures.z4_z2():
        maps = sorted(set(maps) | {fixtures.times(3), fixtures.times(2)})
    return maps


def _p9_sample(hvs, mode, rng):
    maps = _maps_for(hvs, rng)
    good = [T for T in maps if classify_map(T, hvs, hvs).good]
    phi = rng.choice(good if good and rng.random() < 0.9 else maps)
    F = random_bfshvs(hvs, rng)
    if rng.random() < 0.5:
        targets = rng.sample(PARAM_POOL, len(F.params))
        fmap = tuple(zip(F.params, targets))
    else:
        targets = _params(rng)
        fmap = tuple((e, rng.choice(targets)) for e in F.params)
    return Case(hvs, mode, (("F", F),), phi=phi, fmap=fmap)


def _p10_sample(hvs, mode, rng):
    maps = _maps_for(hvs, rng)
    linear = [T for T in maps if classify_map(T, hvs, hvs).linear]
    phi = rng.choice(linear if linear and rng.random() < 0.9 else maps)
    G = random_bfshvs(hvs, rng)
    A = _params(rng)
    fmap = tuple((e, rng.choice(G.params)) for e in A)
    return Case(hvs, mode, (("G", G),), phi=phi, fmap=fmap)


def _good(case):
    if not classify_map(case.phi, case.hvs, case.hvs).good:
        return "map is not a good transformation"
    return None


def _linear(case):
    if not classify_map(case.phi, case.hvs, case.hvs).linear:
        return "map is not a linear transformation"
    return None


def _map_domain_matches(case):
    F = case.get("F") if "F" in dict(case.inputs) else None
    fm = dict(case.fmap)
    if F is not None and set(fm) != set(F.params):
        return "parameter map domain differs from the soft set's parameters"
    G = case.get("G") if "G" in dict(case.inputs) else None
    if G is not None and any(u not in G for u in fm.values()):
        return "parameter map leaves the soft set's parameters"
    return None


def _injective(case):
    targets = [u for _, u in case.fmap]
    if len(set(targets)) != len(targets):
        return "parameter map is not injective"
    return None


def _p9_check(case):
    return _bfshvs_failure("image", image(case.function, case.get("F")), case.hvs)


def _p10_check(case):
    return _bfshvs_failure("preimage", preimage(case.function, case.get("G")), case.hvs)


@dataclass(frozen=True)
class Property:
    pid: str
    claim: str
    sample: Callable[[HyperVectorSpace, AxiomMode, random.Random], Case]
    hypotheses: Callable[[Case], Optional[str]]
    check: Callable[[Case], list]
    # True for negated-hypothesis probes, None where nothing is claimed either way
    expect_counterexample: Optional[bool] = False


PROPERTIES: dict[str, Property] = {}


def _register(*args, **kwargs):
    p = Property(*args, **kwargs)
    PROPERTIES[p.pid] = p


_register("P1", "sum is bounded below by the meet of the summands",
          _p1_sample, lambda c: _valid_degrees(c), _p1_check)
_register("P2", "F <= 1 o F and -F <= (-1) o F",
          _p2_sample, lambda c: _first(lambda: _valid_degrees(c), lambda: _h4_h5(c)), _p2_check)
_register("P3", "sum and scalar product distribute over family unions",
          _p3_sample, lambda c: _first(lambda: _valid_degrees(c), lambda: _same_params(c)), _p3_check)
_register("P4", "meet, extended meet, disjoint join, restricted join and AND preserve the structure",
          _pair_sampler(None), lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c)), _p4_checker())
for _op in ("meet", "extended-meet", "restricted-join", "and"):
    _register(f"P4-{_op}", f"{_op} preserves the structure",
              _pair_sampler(None), lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c)),
              _p4_checker((_op,)))
_register("P4-join-disjoint", "join of soft sets with disjoint parameters preserves the structure",
          _pair_sampler(False),
          lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c), lambda: _disjoint(c)),
          _p4_checker(("join-disjoint",)))
_register("P4-union-overlap", "join with overlapping parameters (hypothesis dropped)",
          _pair_sampler(True),
          lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c), lambda: _overlap(c)),
          _p4_union_check, expect_counterexample=True)
_register("P5", "sum preserves the structure",
          _pair_sampler(None), lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c)), _p5_check)
_register("P6", "extended sum preserves the structure",
          _pair_sampler(None), lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c)), _p6_check)
_register("P7", "scalar products preserve the structure on strongly right distributive spaces",
          _p7_sample,
          lambda c: _first(lambda: _axioms_ok(c), lambda: _strong_right(c), lambda: _inputs_bfshvs(c)),
          _p7_check)
_register("P7-not-strong", "scalar products on spaces that are not strongly right distributive",
          _p7_sample, lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c),
                                       lambda: None if _strong_right(c) else "space is strongly right distributive"),
          _p7_check, expect_counterexample=None)
_register("P8", "AND preserves the structure",
          _pair_sampler(None), lambda c: _first(lambda: _axioms_ok(c), lambda: _inputs_bfshvs(c)), _p8_check)
_register("P9", "images under good transformations preserve the structure",
          _p9_sample,
          lambda c: _first(lambda: _axioms_ok(c), lambda: _good(c), lambda: _map_domain_matches(c),
                           lambda: _inputs_bfshvs(c)),
          _p9_check)
_register("P10", "preimages under linear transformations preserve the structure",
          _p10_sample,
          lambda c: _first(lambda: _axioms_ok(c), lambda: _linear(c), lambda: _map_domain_matches(c),
                           lambda: _inputs_bfshvs(c)),
          _p10_check)


_register("P9-injective", "images under good transformations with an injective parameter map",
          _p9_sample,
          lambda c: _first(lambda: _axioms_ok(c), lambda: _good(c), lambda: _map_domain_matches(c),
                           lambda: _injective(c), lambda: _inputs_bfshvs(c)),
          _p9_check)


# -- running ----------------------------------------------------------------

@dataclass
class PropertyResult:
    pid: str
    digest: str
    verdict: bool
    counterexample: Optional[dict]
    tried: int
    rejected: int
    elapsed: float = 0.0
    expect_counterexample: Optional[bool] = False
    spec: Optional[InstanceSpec] = None
    label: str = ""

    def as_dict(self, timings: bool = False) -> dict:
        d = {
            "property": self.pid,
            "label": self.label,
            "digest": self.digest,
            "verdict": "pass" if self.verdict else "counterexample",
            "expected_counterexample": self.expect_counterexample,
            "counterexample": self.counterexample,
            "instances_tried": self.tried,
            "instances_rejected": self.rejected,
            "spec": self.spec.as_dict() if self.spec else None,
        }
        if timings:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d


def _still_fails(prop: Property, case: Case) -> bool:
    try:
        return prop.hypotheses(case) is None and bool(prop.check(case))
    except Exception:
        return False


def minimize(prop: Property, case: Case) -> Case:
    """Greedy single removals: shared parameters, single parameters, then element supports."""
    improved = True
    while improved:
        improved = False
        inputs = dict(case.inputs)
        all_params = sorted({e for F in inputs.values() for e in F.params})
        for e in all_params:
            trial = {n: F.restrict([p for p in F.params if p != e]) for n, F in inputs.items()}
            cand = _drop_fmap(case.with_inputs(trial), e)
            if _still_fails(prop, cand):
                case, improved = cand, True
                break
        if improved:
            continue
        for n, F in inputs.items():
            for e in F.params:
                trial = dict(inputs)
                trial[n] = F.restrict([p for p in F.params if p != e])
                cand = _drop_fmap(case.with_inputs(trial), e) if n == "F" else case.with_inputs(trial)
                if _still_fails(prop, cand):
                    case, improved = cand, True
                    break
            if improved:
                break
        if improved:
            continue
        for n, F in inputs.items():
            for e, b in F.sets.items():
                for x in range(b.size):
                    if b.pos[x] == 0 and b.neg[x] == 0:
                        continue
                    nb = BipolarFuzzySet(
                        b.pos[:x] + (Fraction(0),) + b.pos[x + 1:],
                        b.neg[:x] + (Fraction(0),) + b.neg[x + 1:],
                    )
                    trial = dict(inputs)
                    trial[n] = F.replace(e, nb)
                    cand = case.with_inputs(trial)
                    if _still_fails(prop, cand):
                        case, improved = cand, True
                        break
                if improved:
                    break
            if improved:
                break
    return case


def _drop_fmap(case: Case, e: str) -> Case:
    if case.fmap is None or "F" not in dict(case.inputs):
        return case
    return replace(case, fmap=tuple((s, u) for s, u in case.fmap if s != e))


def run_property(pid: str, instances: Iterable[Case], budget: int) -> PropertyResult:
    """Check ``pid`` on up to ``budget`` hypothesis-satisfying instances.

    Instances failing a hypothesis are counted in ``rejected`` and do not
    use budget. Stops at the first counterexample, which is minimised.
    """
    prop = PROPERTIES[pid]
    start = time.perf_counter()
    tried = rejected = 0
    h = hashlib.sha256()
    counterexample = None
    for case in instances:
        if tried >= budget:
            break
        if prop.hypotheses(case) is not None:
            rejected += 1
            continue
        tried += 1
        h.update(case.digest().encode())
        failures = prop.check(case)
        if failures:
            small = minimize(prop, case)
            counterexample = {
                "instance": small.as_dict(),
                "instance_digest": small.digest(),
                "failures": prop.check(small),
                "original_digest": case.digest(),
            }
            break
    return PropertyResult(pid, h.hexdigest()[:16], counterexample is None, counterexample, tried, rejected,
                          time.perf_counter() - start, prop.expect_counterexample)


def cases(pid: str, spec: InstanceSpec, limit: Optional[int] = None) -> Iterator[Case]:
    """Instances for ``pid``: spaces from :func:`generate_hvs`, cycled, with seeded soft sets."""
    prop = PROPERTIES[pid]
    stream = generate_hvs(spec)
    if spec.strategy == "filtered-random":
        pool_iter = iter(stream)
        pool: list[HyperVectorSpace] = []
    else:
        pool = list(stream)
        pool_iter = None
        if not pool:
            raise Exhausted(f"no {spec.mode.name} space from strategy {spec.strategy}")
    i = 0
    while limit is None or i < limit:
        if pool_iter is not None:
            try:
                hvs = next(pool_iter)
            except StopIteration:
                return
        else:
            hvs = pool[i % len(pool)]
        rng = seeded(spec.seed, pid, i)
        yield prop.sample(hvs, spec.mode, rng)
        i += 1


def search_counterexamples(pid: str, spec: InstanceSpec, budget: int, label: str = "") -> PropertyResult:
    if pid not in PROPERTIES:
        raise KeyError(f"unknown property {pid!r}; known: {', '.join(PROPERTIES)}")
    result = run_property(pid, cases(pid, spec, limit=budget * 20), budget)
    result.spec = spec
    result.label = label or pid
    return result


def recheck(pid: str, case: Case) -> list:
    """Re-run one property on one instance from scratch (hypotheses included)."""
    prop = PROPERTIES[pid]
    reason = prop.hypotheses(case)
    if reason:
        raise ValueError(f"instance violates a hypothesis: {reason}")
    return prop.check(case)


# -- the standard suite -----------------------------------------------------

@dataclass(frozen=True)
class SuiteEntry:
    label: str
    pid: str
    spec: InstanceSpec
    budget: int


CLOSURE_PROPERTIES = (
    "P4-meet", "P4-extended-meet", "P4-join-disjoint", "P4-restricted-join", "P4-and",
    "P5", "P6", "P7", "P8", "P9", "P9-injective", "P10",
)


def standard_suite(seed: int = 0) -> list[SuiteEntry]:
    """The acceptance configuration: 200 instances for P1-P3, 100 strict ones per closure claim.

    The Z4 fixture only satisfies the axioms in compat mode, so its runs are
    listed separately from the strict-mode ones.
    """
    z2 = InstanceSpec(max_size=8, field=2, strategy="constructive", seed=seed)
    z3 = InstanceSpec(max_size=9, field=3, strategy="constructive", seed=seed)
    rnd = InstanceSpec(max_size=4, field=2, strategy="filtered-random", seed=seed)
    fix = InstanceSpec(strategy="fixture", mode=COMPAT, seed=seed)
    out = []
    for pid in ("P1", "P2", "P3"):
        out.append(SuiteEntry(f"{pid}/strict-z2", pid, z2, 100))
        out.append(SuiteEntry(f"{pid}/strict-z3", pid, z3, 100))
        out.append(SuiteEntry(f"{pid}/fixture-compat", pid, fix, 50))
    for pid in CLOSURE_PROPERTIES:
        out.append(SuiteEntry(f"{pid}/strict-z2", pid, z2, 60))
        out.append(SuiteEntry(f"{pid}/strict-z3", pid, z3, 40))
        out.append(SuiteEntry(f"{pid}/filtered-random", pid, rnd, 30))
        if pid != "P7":
            out.append(SuiteEntry(f"{pid}/fixture-compat", pid, fix, 20))
    out.append(SuiteEntry("P4-union-overlap/probe", "P4-union-overlap", z2, 10_000))
    out.append(SuiteEntry("P7-not-strong/filtered-random", "P7-not-strong", rnd, 100))
    out.append(SuiteEntry("P7-not-strong/fixture-compat", "P7-not-strong", fix, 50))
    return out


def run_suite(seed: int = 0, entries: Optional[list[SuiteEntry]] = None) -> list[PropertyResult]:
    entries = entries if entries is not None else standard_suite(seed)
    return [search_counterexamples(e.pid, e.spec, e.budget, e.label) for e in entries]


def suite_report(results: list[PropertyResult], seed: int, timings: bool = False) -> dict:
    unexpected = [r.label for r in results
                  if r.expect_counterexample is not None and r.verdict == r.expect_counterexample]
    return {
        "seed": seed,
        "ok": not unexpected,
        "unexpected": unexpected,
        "results": [r.as_dict(timings) for r in results],
    }
