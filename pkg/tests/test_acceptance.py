"""Acceptance criteria, one group of tests per criterion.

A summary line per criterion is printed at the end of the pytest run. Two
closure claims have concrete counterexamples and are kept as strict xfails:
they report FAIL in the summary and turn the run red if they ever start
passing.
"""

import io
import time
from fractions import Fraction

import pytest

from bfshvs.algebra import COMPAT, STRICT, check_axioms
from bfshvs.cli import main
from bfshvs.fixtures import data_text, parity_bfs, parity_soft_set, times, z4_z2
from bfshvs.harness import (
    CLOSURE_PROPERTIES,
    InstanceSpec,
    arbitrary_bfs,
    constructive_spaces,
    generate_hvs,
    random_bfss,
    run_suite,
    seeded,
    standard_suite,
    suite_report,
)
from bfshvs.hvsops import scalar_product, soft_sum
from bfshvs.structure import is_bfs_hypervector_space, is_subhyperspace
from bfshvs.textio import dump_json, parse, print_document
from bfshvs.transforms import classify_map

from oracles import axiom_witnesses, scale_slice, subhyperspace_violations, sum_slice


def criterion(key, title):
    return pytest.mark.criterion(key, title)


# 1 ------------------------------------------------------------------------

Z4_ADD = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]
Z4_HYPEROP = [
    [{0, 2}, {0}, {0}, {0}],
    [{0, 2}, {1, 2, 3}, {0, 2}, {1, 2, 3}],
]


@criterion(1, "fixture fidelity")
def test_c1_fixture_tables_and_roundtrip():
    start = time.perf_counter()
    text = data_text("z4_z2.hvs")
    doc = parse(text)
    hvs = doc.only("hvs")
    entries = [(x, y) for x in range(4) for y in range(4)]
    assert len(entries) == 16
    assert all(hvs.group.add[x][y] == Z4_ADD[x][y] for x, y in entries)
    cells = [(a, x) for a in range(2) for x in range(4)]
    assert len(cells) == 8
    for a, x in cells:
        assert {i for i in range(4) if hvs.hyperop[a][x] >> i & 1} == Z4_HYPEROP[a][x]
    assert hvs == z4_z2()
    assert print_document(doc) == text
    assert time.perf_counter() - start < 1.0


# 2 ------------------------------------------------------------------------

@criterion(2, "axiom audit against exhaustive oracle")
def test_c2_axiom_audit():
    start = time.perf_counter()
    hvs = z4_z2()
    strict = check_axioms(hvs, STRICT)
    expected, right, left = axiom_witnesses(hvs, "subset", "subset", "equality")
    assert expected["H1"] == {(0, x, y) for x in range(1, 4) for y in range(1, 4) if (x + y) % 4 == 0}
    for ax in ("H1", "H2", "H3", "H4", "H5"):
        assert {w.args for w in strict.witnesses_for(ax)} == expected[ax], ax
    assert strict.verdicts == {"H1": False, "H2": True, "H3": False, "H4": True, "H5": True}
    compat = check_axioms(hvs, COMPAT)
    relaxed, _, _ = axiom_witnesses(hvs, "nonempty-intersection", "subset", "superset")
    assert compat.ok and not any(relaxed.values())
    assert (strict.strongly_right, strict.strongly_left) == (right, left) == (False, False)
    assert (compat.strongly_right, compat.strongly_left) == (False, False)
    assert time.perf_counter() - start < 1.0


# 3 ------------------------------------------------------------------------

@criterion(3, "worked examples verify")
def test_c3_examples():
    start = time.perf_counter()
    hvs = z4_z2()
    b = parity_bfs("1/2", "3/10", "-2/5", "-1/5")
    assert is_subhyperspace(b, hvs).verdict
    assert not subhyperspace_violations(b, hvs)
    report = is_bfs_hypervector_space(parity_soft_set(), hvs)
    assert report.verdict and sorted(report.per_param) == ["c", "d", "e"]
    assert all(r.verdict for r in report.per_param.values())
    assert parse(data_text("parity_soft.bfss")).only("bfss") == parity_soft_set()
    assert time.perf_counter() - start < 1.0


# 4 ------------------------------------------------------------------------

def _oracle_spaces():
    spaces = [z4_z2()] + [h for _, h in constructive_spaces(2, 8)] + [h for _, h in constructive_spaces(3, 9)]
    rnd = generate_hvs(InstanceSpec(max_size=4, strategy="filtered-random", seed=0))
    for i, h in enumerate(rnd):
        spaces.append(h)
        if i == 4:
            break
    return spaces


def _agree(F, G, hvs):
    S = soft_sum(F, G, hvs)
    assert S.params == tuple(sorted(set(F.params) & set(G.params)))
    for e in S.params:
        assert [list(S[e].pos), list(S[e].neg)] == list(sum_slice(F[e], G[e], hvs))
    for a in hvs.field.elements:
        P = scalar_product(a, F, hvs)
        for e in F.params:
            assert [list(P[e].pos), list(P[e].neg)] == list(scale_slice(a, F[e], hvs))


@criterion(4, "sum and scalar product equal brute-force oracle")
def test_c4_operation_oracles():
    start = time.perf_counter()
    hvs = z4_z2()
    F = parity_soft_set()
    _agree(F, F, hvs)
    spaces = _oracle_spaces()
    for i in range(50):
        rng = seeded(0, "oracle", i)
        hvs = spaces[i % len(spaces)]
        params = sorted(rng.sample("abcd", 2))
        F = random_bfss(hvs.size, rng, params)
        G = random_bfss(hvs.size, rng, sorted(rng.sample("abcd", 2)))
        G = G.replace(params[0], arbitrary_bfs(hvs.size, rng))
        _agree(F, G, hvs)
    assert time.perf_counter() - start < 10.0


# 5 ------------------------------------------------------------------------

FOUND_COUNTEREXAMPLES = {
    "P4-restricted-join": "pointwise max of two subhyperspaces need not be one; "
                          "two distinct lines of Z2^2 already break the sum condition",
    "P9": "with a non-injective parameter map the image takes a sup over several "
          "slices, and a sup of subhyperspaces need not be one",
}

CLAIMS = ("P1", "P2", "P3") + tuple(p for p in CLOSURE_PROPERTIES if p != "P9-injective")


@pytest.fixture(scope="module")
def suite_results():
    start = time.perf_counter()
    entries = [e for e in standard_suite(0) if e.pid in CLAIMS]
    results = run_suite(0, entries)
    return results, time.perf_counter() - start


def _claim_param(pid):
    if pid in FOUND_COUNTEREXAMPLES:
        return pytest.param(pid, marks=pytest.mark.xfail(strict=True, reason=FOUND_COUNTEREXAMPLES[pid]))
    return pid


@criterion(5, "property suite")
@pytest.mark.parametrize("pid", [_claim_param(p) for p in CLAIMS])
def test_c5_claim(pid, suite_results):
    results, _ = suite_results
    mine = [r for r in results if r.pid == pid]
    assert mine
    failures = [f"{r.label}: {r.counterexample['failures']}" for r in mine if r.counterexample]
    assert not failures, failures[0]
    strict_tried = sum(r.tried for r in mine if r.spec.mode is STRICT)
    if pid in ("P1", "P2", "P3"):
        assert sum(r.tried for r in mine) >= 200
    else:
        assert strict_tried >= 100


@criterion(5, "property suite")
def test_c5_maps_include_identity_and_tripling():
    hvs = z4_z2()
    for k in (1, 3):
        report = classify_map(times(k), hvs, hvs)
        assert report.additive and report.linear and report.good


@criterion(5, "property suite")
def test_c5_runtime(suite_results):
    _, elapsed = suite_results
    assert elapsed < 60.0


# 6 ------------------------------------------------------------------------

def _oracle_union(F, G):
    out = {}
    for e in set(F.params) | set(G.params):
        if e in F and e in G:
            pos = [max(p, q) for p, q in zip(F[e].pos, G[e].pos)]
            neg = [min(p, q) for p, q in zip(F[e].neg, G[e].neg)]
        else:
            src = F[e] if e in F else G[e]
            pos, neg = list(src.pos), list(src.neg)
        out[e] = (pos, neg)
    return out


class _Slice:
    def __init__(self, pos, neg):
        self.pos, self.neg = pos, neg


@criterion(6, "negated-hypothesis probe finds a standalone counterexample")
def test_c6_union_overlap_probe(tmp_path):
    start = time.perf_counter()
    target = tmp_path / "witness.txt"
    out, err = io.StringIO(), io.StringIO()
    code = main(["fuzz", "P4-union-overlap", "--budget", "10000", "--seed", "0", "--emit", str(target)], out, err)
    assert code == 1, err.getvalue()
    doc = parse(target.read_text(encoding="utf-8"))
    hvs = doc.only("hvs")
    F, G = doc.bfss["F"], doc.bfss["G"]
    found, _, _ = axiom_witnesses(hvs)
    assert not any(found.values())
    assert set(F.params) & set(G.params)
    for S in (F, G):
        for e in S.params:
            assert not subhyperspace_violations(S[e], hvs)
    union = _oracle_union(F, G)
    assert any(subhyperspace_violations(_Slice(*union[e]), hvs) for e in union)
    assert time.perf_counter() - start < 60.0


# 7 ------------------------------------------------------------------------

@criterion(7, "same seed gives byte-identical suite report")
def test_c7_determinism():
    first = dump_json(suite_report(run_suite(0), 0))
    out = io.StringIO()
    main(["report", "--seed", "0", "--json"], out)
    assert out.getvalue() == first
