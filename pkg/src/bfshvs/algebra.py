"""Finite fields, abelian groups and external hyperoperations.

Elements are dense integer ids ``0..n-1``; subsets of a carrier are bitsets
stored in plain ints (bit ``i`` set means element ``i`` is a member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

Table = tuple[tuple[int, ...], ...]

AXIOMS = ("H1", "H2", "H3", "H4", "H5")

_H12_CHOICES = ("subset", "superset", "nonempty-intersection")
_H3_CHOICES = ("equality", "superset", "subset", "nonempty-intersection")


class MalformedInput(ValueError):
    """A table or subset is structurally unusable (shape, range, emptiness)."""


# -- bitset helpers ---------------------------------------------------------

def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _as_table(rows: Sequence[Sequence[int]], name: str) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"{name}: non-integer entry") from exc
    n = len(table)
    if n == 0:
        raise MalformedInput(f"{name}: empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedInput(f"{name}: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedInput(f"{name}: entry ({i},{j})={v} out of range 0..{n - 1}")
    return table


# -- validation -------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    failures: list[tuple] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _group_failures(add: Table, zero: int) -> list[tuple]:
    n = len(add)
    failures: list[tuple] = []
    for x, y, z in product(range(n), repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            failures.append(("associativity", (x, y, z)))
            break
    for x, y in product(range(n), repeat=2):
        if add[x][y] != add[y][x]:
            failures.append(("commutativity", (x, y)))
            break
    for x in range(n):
        if add[zero][x] != x:
            failures.append(("identity", (x,)))
            break
    for x in range(n):
        if zero not in add[x]:
            failures.append(("inverse", (x,)))
            break
    return failures


def validate_abelian_group(add: Sequence[Sequence[int]], zero: int = 0) -> ValidationReport:
    table = _as_table(add, "add")
    if not 0 <= zero < len(table):
        raise MalformedInput(f"zero id {zero} out of range")
    failures = _group_failures(table, zero)
    return ValidationReport(not failures, failures)


def validate_finite_field(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    zero: int = 0,
    one: int = 1,
) -> ValidationReport:
    """Check the field axioms on a pair of Cayley tables.

    Reports the first failure of each kind. Shape problems raise
    :class:`MalformedInput` rather than producing a failing report.
    """
    a = _as_table(add, "add")
    m = _as_table(mul, "mul")
    n = len(a)
    if len(m) != n:
        raise MalformedInput(f"add is {n}x{n} but mul is {len(m)}x{len(m)}")
    if not 0 <= zero < n:
        raise MalformedInput(f"zero id {zero} out of range")
    failures = _group_failures(a, zero)
    if n < 2 or not 0 <= one < n or one == zero:
        failures.append(("multiplicative-identity", (one,)))
        return ValidationReport(False, failures)
    nonzero = [x for x in range(n) if x != zero]
    divisors = [(x, y) for x in nonzero for y in nonzero if m[x][y] == zero]
    if divisors:
        failures.append(("zero-divisor", divisors[0]))
    for x, y, z in product(range(n), repeat=3):
        if m[m[x][y]][z] != m[x][m[y][z]]:
            failures.append(("mul-associativity", (x, y, z)))
            break
    for x, y in product(range(n), repeat=2):
        if m[x][y] != m[y][x]:
            failures.append(("mul-commutativity", (x, y)))
            break
    for x in range(n):
        if m[one][x] != x:
            failures.append(("multiplicative-identity", (x,)))
            break
    for x in nonzero:
        if one not in [m[x][y] for y in nonzero]:
            failures.append(("mul-inverse", (x,)))
            break
    for x, y, z in product(range(n), repeat=3):
        if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
            failures.append(("distributivity", (x, y, z)))
            break
    return ValidationReport(not failures, failures)


# -- structures -------------------------------------------------------------

@dataclass(frozen=True)
class FiniteField:
    add: Table
    mul: Table
    zero: int = 0
    one: int = 1

    @classmethod
    def from_tables(cls, add, mul, zero: int = 0, one: int = 1) -> "FiniteField":
        report = validate_finite_field(add, mul, zero, one)
        if not report:
            raise MalformedInput(f"not a field: {report.failures[0]}")
        return cls(_as_table(add, "add"), _as_table(mul, "mul"), zero, one)

    @classmethod
    def prime(cls, p: int) -> "FiniteField":
        add = tuple(tuple((i + j) % p for j in range(p)) for i in range(p))
        mul = tuple(tuple((i * j) % p for j in range(p)) for i in range(p))
        return cls.from_tables(add, mul)

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.size)

    def neg(self, a: int) -> int:
        return self.add[a].index(self.zero)


@dataclass(frozen=True)
class AbelianGroup:
    add: Table
    zero: int = 0

    @classmethod
    def from_table(cls, add, zero: int = 0) -> "AbelianGroup":
        report = validate_abelian_group(add, zero)
        if not report:
            raise MalformedInput(f"not an abelian group: {report.failures[0]}")
        return cls(_as_table(add, "add"), zero)

    @classmethod
    def cyclic_product(cls, *orders: int) -> "AbelianGroup":
        """Direct product of cyclic groups, elements in mixed-radix order."""
        orders = orders or (1,)
        n = 1
        for k in orders:
            n *= k

        def digits(x):
            out = []
            for k in reversed(orders):
                out.append(x % k)
                x //= k
            return out[::-1]

        def index(ds):
            x = 0
            for d, k in zip(ds, orders):
                x = x * k + d
            return x

        add = tuple(
            tuple(index([(p + q) % k for p, q, k in zip(digits(i), digits(j), orders)]) for j in range(n))
            for i in range(n)
        )
        return cls.from_table(add)

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def neg(self, x: int) -> int:
        return self.add[x].index(self.zero)

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg(y)]


def set_sum(s: int, t: int, g: AbelianGroup) -> int:
    """Minkowski sum ``{p + q : p in s, q in t}`` of two bitsets."""
    out = 0
    ts = members(t)
    for p in members(s):
        row = g.add[p]
        for q in ts:
            out |= 1 << row[q]
    return out


def set_negate(s: int, g: AbelianGroup) -> int:
    return to_mask(g.neg(p) for p in members(s))


@dataclass(frozen=True)
class HyperVectorSpace:
    """Abelian group with an external hyperoperation ``K x V -> P*(V)``.

    ``hyperop[a][x]`` is the bitset of ``a o x``.
    """

    field: FiniteField
    group: AbelianGroup
    hyperop: Table

    def __post_init__(self):
        k, n = self.field.size, self.group.size
        if len(self.hyperop) != k or any(len(row) != n for row in self.hyperop):
            raise MalformedInput(f"hyperoperation table must be {k}x{n}")
        full = self.group.full
        for a, row in enumerate(self.hyperop):
            for x, cell in enumerate(row):
                if cell == 0:
                    raise MalformedInput(f"empty cell {a} o {x}")
                if cell & ~full:
                    raise MalformedInput(f"cell {a} o {x} leaves the carrier")

    @property
    def size(self) -> int:
        return self.group.size

    def cell(self, a: int, x: int) -> int:
        return self.hyperop[a][x]


def hyper_extend(a: int, s: int, hvs: HyperVectorSpace) -> int:
    """``a o S``: union of ``a o t`` over ``t`` in the bitset ``s``."""
    if s == 0:
        raise MalformedInput("hyper_extend needs a nonempty subset")
    out = 0
    row = hvs.hyperop[a]
    for t in members(s):
        out |= row[t]
    return out


# -- axioms -----------------------------------------------------------------

@dataclass(frozen=True)
class AxiomMode:
    h1: str = "subset"
    h2: str = "subset"
    h3: str = "equality"

    def __post_init__(self):
        if self.h1 not in _H12_CHOICES or self.h2 not in _H12_CHOICES:
            raise ValueError(f"h1/h2 must be one of {_H12_CHOICES}")
        if self.h3 not in _H3_CHOICES:
            raise ValueError(f"h3 must be one of {_H3_CHOICES}")

    @property
    def name(self) -> str:
        if self == STRICT:
            return "strict"
        if self == COMPAT:
            return "compat"
        return f"h1={self.h1},h2={self.h2},h3={self.h3}"


STRICT = AxiomMode()
COMPAT = AxiomMode(h1="nonempty-intersection", h3="superset")
MODES = {"strict": STRICT, "compat": COMPAT}


def compare(left: int, right: int, how: str) -> bool:
    if how == "subset":
        return left & ~right == 0
    if how == "superset":
        return right & ~left == 0
    if how == "equality":
        return left == right
    if how == "nonempty-intersection":
        return left & right != 0
    raise ValueError(how)


@dataclass(frozen=True)
class AxiomWitness:
    axiom: str
    args: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "args": list(self.args), "left": list(self.left), "right": list(self.right)}


@dataclass
class AxiomReport:
    mode: AxiomMode
    verdicts: dict[str, bool]
    witnesses: list[AxiomWitness]
    strongly_right: bool
    strongly_left: bool

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def witnesses_for(self, axiom: str) -> list[AxiomWitness]:
        return [w for w in self.witnesses if w.axiom == axiom]

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.name,
            "ok": self.ok,
            "verdicts": dict(self.verdicts),
            "strongly_right_distributive": self.strongly_right,
            "strongly_left_distributive": self.strongly_left,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


def check_axioms(hvs: HyperVectorSpace, mode: AxiomMode = STRICT) -> AxiomReport:
    """Exhaustively test H1-H5 and record every violation.

    Witness arguments are ``(a, x, y)`` for H1, ``(a, b, x)`` for H2 and H3,
    ``(a, x)`` for H4 and ``(x,)`` for H5. H4 (both equalities) and H5 do
    not depend on the mode. The strong flags always use set equality.
    """
    K, G, cell = hvs.field, hvs.group, hvs.hyperop
    witnesses: list[AxiomWitness] = []
    strong_right = strong_left = True

    def fail(axiom, args, left, right):
        witnesses.append(AxiomWitness(axiom, args, members(left), members(right)))

    for a in K.elements:
        for x in G.elements:
            for y in G.elements:
                left = cell[a][G.add[x][y]]
                right = set_sum(cell[a][x], cell[a][y], G)
                strong_right = strong_right and left == right
                if not compare(left, right, mode.h1):
                    fail("H1", (a, x, y), left, right)
    for a in K.elements:
        for b in K.elements:
            for x in G.elements:
                left = cell[K.add[a][b]][x]
                right = set_sum(cell[a][x], cell[b][x], G)
                strong_left = strong_left and left == right
                if not compare(left, right, mode.h2):
                    fail("H2", (a, b, x), left, right)
    for a in K.elements:
        for b in K.elements:
            for x in G.elements:
                left = hyper_extend(a, cell[b][x], hvs)
                right = cell[K.mul[a][b]][x]
                if not compare(left, right, mode.h3):
                    fail("H3", (a, b, x), left, right)
    for a in K.elements:
        for x in G.elements:
            left = cell[a][G.neg(x)]
            middle = cell[K.neg(a)][x]
            right = set_negate(cell[a][x], G)
            if not (left == middle == right):
                fail("H4", (a, x), left, right if left == middle else middle)
    for x in G.elements:
        if not cell[K.one][x] >> x & 1:
            fail("H5", (x,), cell[K.one][x], 1 << x)

    verdicts = {ax: not any(w.axiom == ax for w in witnesses) for ax in AXIOMS}
    return AxiomReport(mode, verdicts, witnesses, strong_right, strong_left)
