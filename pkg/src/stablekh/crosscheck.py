"""Randomized cross-checks of the fast kernels against the naive oracles.

These back the `verify` CLI subcommand and the acceptance tests. Seeds are
explicit so every reported run is reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .abelian import mod_action_kernel_cokernel
from .algebras import nakayama
from .oracles import brute_mod_kernel, determinantal_divisors, nakayama_cartan_oracle
from .zmatrix import ZMatrix

DEFAULT_SEED = 20240803


@dataclass(frozen=True)
class SuiteSummary:
    suite: str
    samples: int
    mismatches: int
    seed: int | None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def _random_matrix(rng, max_dim, lo, hi, square=False):
    n = rng.randint(1, max_dim)
    m = n if square else rng.randint(1, max_dim)
    return ZMatrix(
        tuple(tuple(rng.randint(lo, hi) for _ in range(m)) for _ in range(n))
    )


def snf_suite(seed: int = DEFAULT_SEED, samples: int = 1000) -> SuiteSummary:
    """Smith normal form vs gcds of minors on random matrices up to 5x5."""
    rng = random.Random(seed)
    mism = 0
    for _ in range(samples):
        m = _random_matrix(rng, 5, -9, 9)
        if m.snf().diagonal != determinantal_divisors(m).factors:
            mism += 1
    return SuiteSummary("snf", samples, mism, seed)


def mod_kernel_suite(seed: int = DEFAULT_SEED, samples: int = 500) -> SuiteSummary:
    """gcd-chain formula vs exhaustive enumeration of (Z/m)^N actions."""
    rng = random.Random(seed)
    mism = 0
    for _ in range(samples):
        m = _random_matrix(rng, 3, -6, 6, square=True)
        modulus = rng.randint(2, 12)
        if mod_action_kernel_cokernel(m, modulus) != brute_mod_kernel(m, modulus):
            mism += 1
    return SuiteSummary("modkernel", samples, mism, seed)


def nakayama_suite() -> SuiteSummary:
    """Family constructor vs composition-series walk, every n*length <= 64."""
    samples = mism = 0
    for n in range(1, 33):
        for length in range(2, 64 // n + 1):
            samples += 1
            if nakayama(n, length).cartan != nakayama_cartan_oracle(n, length):
                mism += 1
    return SuiteSummary("nakayama", samples, mism, None)


def run_suites(which: str, seed: int = DEFAULT_SEED) -> list[SuiteSummary]:
    table = {
        "snf": lambda: [snf_suite(seed)],
        "modkernel": lambda: [mod_kernel_suite(seed)],
        "nakayama": lambda: [nakayama_suite()],
        "all": lambda: [snf_suite(seed), mod_kernel_suite(seed), nakayama_suite()],
    }
    return table[which]()
