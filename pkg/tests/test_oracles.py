"""The oracles themselves, plus the randomized cross-check suites."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablekh import AbGroup, OracleGuardError, ZMatrix
from stablekh.crosscheck import (
    mod_kernel_suite,
    nakayama_suite,
    run_suites,
    snf_suite,
)
from stablekh.oracles import (
    brute_mod_kernel,
    determinantal_divisors,
    nakayama_cartan_oracle,
)
from stablekh.shiftmat import exterior_shift_matrix


def test_divisor_chain_pins():
    c = determinantal_divisors(ZMatrix.diagonal((4, 6)))
    assert c.chain == (2, 24)
    assert c.factors == (2, 12)
    assert determinantal_divisors(ZMatrix.identity(3)).chain == (1, 1, 1)
    assert determinantal_divisors(exterior_shift_matrix(3)).chain == (1, 1, 8)


def test_divisor_chain_zero_tail():
    ones = ZMatrix(tuple((1, 1, 1) for _ in range(3)))
    c = determinantal_divisors(ones)
    assert c.chain == (1, 0, 0)
    assert c.factors == (1, 0, 0)


def test_divisor_guard():
    with pytest.raises(OracleGuardError):
        determinantal_divisors(ZMatrix.identity(7))


def test_brute_mod_kernel_pins():
    assert brute_mod_kernel(ZMatrix(((2,),)), 6) == (
        AbGroup.cyclic(2),
        AbGroup.cyclic(2),
    )
    assert brute_mod_kernel(ZMatrix.identity(2), 9) == (
        AbGroup.trivial(),
        AbGroup.trivial(),
    )
    z4 = AbGroup(0, (4, 4))
    assert brute_mod_kernel(ZMatrix.zero(2, 2), 4) == (z4, z4)


def test_brute_mod_kernel_structure_not_just_order():
    # diag(2, 4) mod 8: kernel elements orders distinguish Z/2 x Z/4 from Z/8
    m = ZMatrix(((2, 0), (0, 4)))
    ker, cok = brute_mod_kernel(m, 8)
    assert ker == AbGroup(0, (2, 4)) == cok


def test_brute_guards():
    with pytest.raises(OracleGuardError):
        brute_mod_kernel(ZMatrix.identity(4), 2)
    with pytest.raises(OracleGuardError):
        brute_mod_kernel(ZMatrix.identity(2), 13)
    with pytest.raises(OracleGuardError):
        brute_mod_kernel(ZMatrix.zero(2, 3), 4)


def test_nakayama_oracle_pins():
    assert nakayama_cartan_oracle(1, 5) == ZMatrix(((5,),))
    assert nakayama_cartan_oracle(2, 2) == ZMatrix(((1, 1), (1, 1)))
    c = nakayama_cartan_oracle(3, 4)
    assert c.row(0) == (2, 1, 1)
    assert [c[i, i] for i in range(3)] == [2, 2, 2]
    assert sum(c[i, j] for i in range(3) for j in range(3)) == 12


def test_nakayama_oracle_guard():
    with pytest.raises(OracleGuardError):
        nakayama_cartan_oracle(5, 13)


def test_snf_suite_clean():
    s = snf_suite(seed=7, samples=120)
    assert s.ok and s.samples == 120 and s.seed == 7


def test_mod_kernel_suite_clean():
    s = mod_kernel_suite(seed=7, samples=60)
    assert s.ok and s.samples == 60


def test_nakayama_suite_full():
    s = nakayama_suite()
    assert s.ok
    assert s.samples == sum(1 for n in range(1, 33) for l in range(2, 64 // n + 1))


def test_run_suites_dispatch():
    assert [s.suite for s in run_suites("all", seed=3)] == [
        "snf",
        "modkernel",
        "nakayama",
    ]
    assert run_suites("snf", seed=3)[0].suite == "snf"


small = st.integers(-6, 6)


@given(
    st.integers(1, 3).flatmap(
        lambda n: st.lists(
            st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n
        )
    ),
    st.integers(2, 12),
)
@settings(max_examples=60, deadline=None)
def test_formula_matches_enumeration(rows, modulus):
    from stablekh import mod_action_kernel_cokernel

    m = ZMatrix(tuple(tuple(r) for r in rows))
    assert mod_action_kernel_cokernel(m, modulus) == brute_mod_kernel(m, modulus)
