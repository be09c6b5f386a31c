"""The compiled and pure kernels must be bit-identical, not merely isomorphic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablekh import _snf_pure

core = pytest.importorskip("stablekh._snf_core")


def lists(max_dim=5):
    ints = st.integers(-40, 40)
    dims = st.integers(1, max_dim)
    return dims.flatmap(
        lambda n: dims.flatmap(
            lambda m: st.lists(
                st.lists(ints, min_size=m, max_size=m), min_size=n, max_size=n
            )
        )
    )


@given(lists())
@settings(max_examples=200, deadline=None)
def test_snf_kernels_agree_exactly(rows):
    n, m = len(rows), len(rows[0])
    a = _snf_pure.snf_kernel(n, m, [list(r) for r in rows])
    b = core.snf_kernel(n, m, [list(r) for r in rows])
    assert a == b


@given(lists(6).filter(lambda r: len(r) == len(r[0])))
@settings(max_examples=200, deadline=None)
def test_det_kernels_agree_exactly(rows):
    n = len(rows)
    assert _snf_pure.det_kernel(n, [list(r) for r in rows]) == core.det_kernel(
        n, [list(r) for r in rows]
    )


def test_backends_report_distinct_names():
    assert _snf_pure.BACKEND == "pure"
    assert core.BACKEND == "compiled"
