from __future__ import annotations

import json

import pytest

from liftmrd.construct import (
    CodeParams,
    build_multi,
    component_count,
    dumps_document,
    enumerate_multi,
    export_document,
    lift,
    lift_code,
    lifted_size,
    shifted_lift,
    size_closed_form_kd,
    size_formula,
    verify_document,
    verify_multi,
)
from liftmrd.errors import CapExceeded, InvalidParams, ShapeMismatch
from liftmrd.galois import field_create
from liftmrd.linalg import MatrixGFq, intersection_dim, max_cross_intersection, min_injection_distance
from liftmrd.mrd import MrdParams, build_mrd

from . import oracles

GF2 = field_create(2)


def unit(i, n):
    return tuple(int(j == i) for j in range(n))


def test_params_validation():
    for bad in [(2, 5, 3, 2), (2, 6, 2, 3), (2, 6, 2, 0), (6, 6, 2, 2), (2, 6, 0, 1)]:
        with pytest.raises(InvalidParams):
            CodeParams(*bad)


def test_lift_examples():
    U = lift(MatrixGFq.zeros(GF2, 2, 2))
    assert U.rows() == (unit(0, 4), unit(1, 4))
    V = lift(MatrixGFq.identity(GF2, 2))
    assert V.rows() == ((1, 0, 1, 0), (0, 1, 0, 1))
    assert U != V


def test_lift_is_injective_and_canonical(backend):
    code = build_mrd(MrdParams(3, 2, 2, 1))
    from liftmrd.mrd import enumerate_mrd
    from liftmrd.linalg import row_space

    words = enumerate_mrd(code)
    lifted = [lift(A) for A in words]
    assert len(set(lifted)) == len(words) == 81
    for A, U in zip(words[:20], lifted[:20]):
        assert row_space(MatrixGFq.identity(code.base_field, 2).hstack(A)) == U


def test_shifted_lift_examples():
    A = MatrixGFq.from_rows(GF2, [[1, 1], [0, 1]])
    assert shifted_lift(A, 0) == lift(A)
    U = shifted_lift(MatrixGFq.zeros(GF2, 2, 0), 2)
    assert U.ambient_dim == 4 and U.rows() == (unit(2, 4), unit(3, 4))
    W = shifted_lift(MatrixGFq.from_rows(GF2, [[1], [0]]), 2)
    assert W.ambient_dim == 5 and W.pivots() == (2, 3)
    assert W.rows() == ((0, 0, 1, 0, 1), (0, 0, 0, 1, 0))


@pytest.mark.parametrize("q,k,n,d,size,dist", [(2, 2, 4, 2, 4, 2), (2, 2, 4, 1, 16, 1), (3, 2, 4, 2, 9, 2)])
def test_lift_code_examples(backend, q, k, n, d, size, dist):
    lc = lift_code(build_mrd(MrdParams(q, k, n - k, d)), n)
    assert lc.size == len(set(lc.codewords)) == size == q ** ((n - k) * (k - d + 1))
    assert min_injection_distance(lc.codewords) == dist
    assert oracles.min_injection_distance([U.rows() for U in lc.codewords], lc.codewords[0].field) == dist


def test_lift_code_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        lift_code(build_mrd(MrdParams(2, 2, 2, 2)), 5)


@pytest.mark.parametrize("params,expected", [((2, 6, 2, 2), 3), ((2, 7, 3, 2), 3), ((2, 6, 3, 3), 2)])
def test_component_count(params, expected):
    assert component_count(CodeParams(*params)) == expected


def oracle_cardinality(params):
    """Distinct subspaces in the enumerated union, compared as explicit vector sets."""
    code = build_multi(CodeParams(*params))
    field = field_create(*__import__("liftmrd.galois", fromlist=["prime_power"]).prime_power(params[0]))
    spans = {oracles.span(U.rows(), field) for U in enumerate_multi(code)}
    return len(spans)


# expected values: 16+4+1, 256+8+1, 8+1 by enumeration
@pytest.mark.parametrize("params,expected", [((2, 6, 2, 2), 21), ((2, 7, 3, 2), 265), ((2, 6, 3, 3), 9)])
def test_build_multi_examples(backend, params, expected):
    code = build_multi(CodeParams(*params))
    assert code.size == expected == size_formula(CodeParams(*params))
    assert oracle_cardinality(params) == expected


def test_component_sizes_2_6_2_2():
    code = build_multi(CodeParams(2, 6, 2, 2))
    assert [c.size for c in code.components] == [16, 4, 1]
    assert [c.width for c in code.components] == [4, 2, 0]
    assert [c.shift for c in code.components] == [0, 2, 4]


@pytest.mark.parametrize("params,expected", [((2, 6, 3, 2), 65), ((2, 8, 3, 2), 1089), ((2, 6, 2, 2), 21)])
def test_size_formula_examples(params, expected):
    assert size_formula(CodeParams(*params)) == expected


def test_size_formula_rejects_small_n():
    with pytest.raises(InvalidParams):
        size_formula(CodeParams(2, 5, 3, 2))


def test_size_formula_matches_enumeration_8_3_2():
    # 1024 + 64 + 1
    code = build_multi(CodeParams(2, 8, 3, 2))
    assert [c.size for c in code.components] == [1024, 64, 1]
    assert len(set(enumerate_multi(code))) == 1089


@pytest.mark.parametrize("q,n,k,expected", [(2, 6, 2, 21), (2, 7, 2, 41), (2, 20, 5, 33825)])
def test_closed_form_examples(q, n, k, expected):
    assert size_closed_form_kd(q, n, k) == expected == size_formula(CodeParams(q, n, k, k))


def test_closed_form_grid_and_spread_identity():
    for q in (2, 3):
        for k in (2, 3, 4):
            for n in range(2 * k, 2 * k + 9):
                v = size_closed_form_kd(q, n, k)
                assert v == size_formula(CodeParams(q, n, k, k))
                if n % k == 0:
                    assert v == (q**n - 1) // (q**k - 1)
                    assert (q**n - 1) % (q**k - 1) == 0
    assert (2**20 - 1) % 31 == 0 and (2**20 - 1) // 31 == 33825


def test_monotone_improvement():
    for q in (2, 3, 4):
        for k in range(1, 5):
            for d in range(1, k + 1):
                for n in range(2 * k, 2 * k + 7):
                    p = CodeParams(q, n, k, d)
                    assert size_formula(p) > lifted_size(p)
                    assert component_count(p) >= 2


def test_enumerate_multi_examples(backend):
    words = enumerate_multi(build_multi(CodeParams(2, 6, 2, 2)))
    assert len(words) == len(set(words)) == 21
    assert words[-1].rows() == (unit(4, 6), unit(5, 6))
    spread = enumerate_multi(build_multi(CodeParams(2, 6, 3, 3)))
    assert len(spread) == 9
    for i, U in enumerate(spread):
        for V in spread[i + 1:]:
            assert intersection_dim(U, V) == 0
    with pytest.raises(CapExceeded):
        enumerate_multi(build_multi(CodeParams(2, 6, 2, 2)), cap=20)


@pytest.mark.parametrize("params", [(2, 6, 2, 2), (2, 7, 3, 2), (2, 6, 3, 3)], ids=str)
def test_verify_multi_examples(backend, params):
    report = verify_multi(build_multi(CodeParams(*params)))
    assert report.cardinality == size_formula(CodeParams(*params))
    assert report.min_distance == params[3]
    assert report.components_disjoint


def test_verify_multi_distance_oracle():
    code = build_multi(CodeParams(2, 6, 2, 2))
    words = enumerate_multi(code)
    assert oracles.min_injection_distance([U.rows() for U in words], GF2) == 2


@pytest.mark.parametrize("params", [(2, 6, 2, 2), (2, 7, 3, 2), (2, 8, 3, 2), (3, 6, 2, 2), (2, 9, 3, 3), (3, 5, 2, 1)], ids=str)
def test_cross_component_intersection_bound(backend, params):
    code = build_multi(CodeParams(*params))
    k, d = params[2], params[3]
    comps = [c.codewords() for c in code.components]
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            assert max_cross_intersection(comps[a], comps[b]) <= k - d


def test_export_round_trip(backend):
    code = build_multi(CodeParams(2, 6, 2, 2))
    doc = json.loads(dumps_document(export_document(code)))
    assert doc["N"] == "21" and len(doc["codewords"]) == 21
    assert doc["components"] == [
        {"j": 0, "width": 4, "size": "16"},
        {"j": 1, "width": 2, "size": "4"},
        {"j": 2, "width": 0, "size": "1"},
    ]
    assert verify_document(doc).ok
    assert dumps_document(export_document(code)) == dumps_document(export_document(build_multi(CodeParams(2, 6, 2, 2))))


def test_export_header_only():
    doc = export_document(build_multi(CodeParams(2, 100, 10, 5)), with_codewords=False)
    assert "codewords" not in doc and int(doc["N"]) == size_formula(CodeParams(2, 100, 10, 5))


def test_verify_document_faults(backend):
    doc = export_document(build_multi(CodeParams(2, 7, 2, 2)))
    dup = dict(doc, codewords=list(doc["codewords"]))
    dup["codewords"][5] = dup["codewords"][3]
    r = verify_document(dup)
    assert not r.cardinality_ok and r.min_distance_ok and not r.ok

    over = dict(doc, d=3)
    r = verify_document(over)
    assert r.cardinality_ok and not r.min_distance_ok

    moved = dict(doc, codewords=list(doc["codewords"]))
    moved["codewords"][0] = [[0, 1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0]]
    assert not verify_document(moved).ok
