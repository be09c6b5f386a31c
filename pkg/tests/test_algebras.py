"""Algebra family constructors and descriptor document ingestion."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablekh import DomainError, SchemaError, ZMatrix
from stablekh.algebras import (
    GradedAlgebraDescriptor,
    elem_abelian_group_algebra,
    exterior,
    from_document,
    from_file,
    nakayama,
    raw,
    tensor,
    truncated_poly,
)


def cartan_sum(desc):
    return sum(
        desc.cartan[i, j]
        for i in range(desc.n_simples)
        for j in range(desc.n_simples)
    )


def test_exterior_values():
    e3 = exterior(3)
    assert e3.core_data == (1, ZMatrix(((8,),)), 8, -3)
    e1 = exterior(1)
    assert e1.total_dim == 2 and e1.gorenstein_param == -1
    with pytest.raises(DomainError):
        exterior(0)


def test_elem_abelian_values():
    d = elem_abelian_group_algebra(2, 3)
    assert d.total_dim == 8 and d.cartan == ZMatrix(((8,),))
    assert elem_abelian_group_algebra(5, 2).gorenstein_param == -8
    with pytest.raises(DomainError):
        elem_abelian_group_algebra(4, 1)
    with pytest.raises(DomainError):
        elem_abelian_group_algebra(9, 1)


def test_truncated_poly_matches_siblings():
    assert truncated_poly(2).core_data == exterior(1).core_data
    assert truncated_poly(3).core_data == elem_abelian_group_algebra(3, 1).core_data
    assert truncated_poly(4).cartan == ZMatrix(((4,),))
    with pytest.raises(DomainError):
        truncated_poly(1)


def test_nakayama_values():
    assert nakayama(1, 4).core_data == truncated_poly(4).core_data
    assert nakayama(2, 2).cartan == ZMatrix(((1, 1), (1, 1)))
    n33 = nakayama(3, 3)
    assert n33.cartan == ZMatrix(tuple((1, 1, 1) for _ in range(3)))
    assert n33.cartan.det() == 0
    # circulant with row (2,1,1) once the length wraps past the cycle
    n34 = nakayama(3, 4)
    assert n34.cartan.row(0) in ((2, 1, 1), (2, 1, 1))
    assert sorted(n34.cartan.row(i)[i] for i in range(3)) == [2, 2, 2]


def test_tensor_kronecker():
    assert tensor(exterior(1), exterior(1)).core_data == exterior(2).core_data
    t = tensor(nakayama(2, 2), truncated_poly(2))
    assert t.n_simples == 2
    assert t.cartan == ZMatrix(((2, 2), (2, 2)))
    assert t.total_dim == 8


def test_tensor_power_is_group_algebra():
    p, r = 3, 3
    d = truncated_poly(p)
    for _ in range(r - 1):
        d = tensor(d, truncated_poly(p))
    assert d.core_data == elem_abelian_group_algebra(p, r).core_data


@given(st.integers(1, 8), st.integers(2, 8))
@settings(max_examples=60, deadline=None)
def test_dim_is_cartan_entry_sum(n, length):
    d = nakayama(n, length)
    assert cartan_sum(d) == d.total_dim


@given(st.integers(1, 10))
def test_exterior_det_is_dim(g):
    d = exterior(g)
    assert d.cartan.det() == d.total_dim == 2**g


def test_nakayama_cartan_circulant():
    d = nakayama(4, 6)
    c = d.cartan
    for i in range(4):
        for j in range(4):
            assert c[i, j] == c[(i + 1) % 4, (j + 1) % 4]


def test_tensor_associative_on_snf():
    a, b, c = exterior(1), nakayama(2, 3), truncated_poly(3)
    left = tensor(tensor(a, b), c).cartan.snf().diagonal
    right = tensor(a, tensor(b, c)).cartan.snf().diagonal
    assert left == right
    assert (
        tensor(a, b).cartan.snf().diagonal == tensor(b, a).cartan.snf().diagonal
    )


# -- documents -------------------------------------------------------------


def test_document_round_trip():
    for d in (
        exterior(2),
        truncated_poly(5),
        elem_abelian_group_algebra(3, 2),
        nakayama(3, 4),
        tensor(exterior(1), truncated_poly(3)),
        raw([[1, 2], [3, 4]], 10, 2, -1),
    ):
        assert from_document(d.as_document()) == d


def test_raw_document():
    d = from_document(
        {"family": "raw", "cartan": [[8]], "dim": 8, "simples": 1, "gorenstein_param": -3}
    )
    assert d.core_data == exterior(3).core_data
    assert d.family == "raw"


def test_constructor_dispatch_document():
    assert from_document({"family": "exterior", "generators": 2}) == exterior(2)


def test_document_rejections():
    with pytest.raises(SchemaError, match="family"):
        from_document({})
    with pytest.raises(SchemaError, match="unknown family"):
        from_document({"family": "borel"})
    with pytest.raises(SchemaError, match="unknown field"):
        from_document({"family": "exterior", "generators": 2, "extra": 1})
    with pytest.raises(SchemaError, match="missing field"):
        from_document({"family": "nakayama", "simples": 2})
    with pytest.raises(SchemaError, match="not square"):
        from_document(
            {
                "family": "raw",
                "cartan": [[1, 2, 3], [4, 5, 6]],
                "dim": 21,
                "simples": 2,
                "gorenstein_param": 0,
            }
        )
    with pytest.raises(SchemaError, match="gorenstein_param"):
        from_document(
            {"family": "raw", "cartan": [[2]], "dim": 2, "simples": 1, "gorenstein_param": 3}
        )
    with pytest.raises(SchemaError, match="negative entry"):
        from_document(
            {"family": "raw", "cartan": [[-1]], "dim": 1, "simples": 1, "gorenstein_param": 0}
        )
    with pytest.raises(SchemaError, match="type"):
        from_document({"family": "exterior", "generators": "3"})


def test_from_file(tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(json.dumps({"family": "truncated_poly", "modulus": 6}))
    assert from_file(path) == truncated_poly(6)
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(SchemaError, match="invalid JSON"):
        from_file(bad)


def test_descriptor_validation_direct():
    with pytest.raises(SchemaError):
        GradedAlgebraDescriptor("raw", 2, ZMatrix(((1,),)), 1, 0)
    with pytest.raises(SchemaError):
        GradedAlgebraDescriptor("raw", 1, ZMatrix(((1,),)), 0, 0)
