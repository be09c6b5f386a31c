"""Matrices of the grading-shift endomorphism on invariants.

In exceptional-collection coordinates the map "shift by one degree, minus the
identity" becomes an integer matrix: -1 on the diagonal, +/-1 one block below
it (the translated copies), and a final column of multiplicities recording
where the collection's last object lands. Exact multiplicities are shipped
for the exterior family (signed binomials from the Koszul resolution); other
last columns are caller-supplied.

Two sign conventions for the subdiagonal are in circulation (orbits taken by
the positive or the negative twist); both are provided, and both lead to the
same Smith normal form up to signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DimensionError, DomainError
from .zmatrix import ZMatrix


@dataclass(frozen=True)
class ShiftMatrixSpec:
    """Data determining the square matrix of size n_simples * block_count."""

    n_simples: int
    block_count: int
    last_column: tuple[int, ...]

    def __post_init__(self):
        if self.n_simples < 1:
            raise DomainError("n_simples must be >= 1")
        if self.block_count < 1:
            raise DomainError("block_count must be >= 1")
        if len(self.last_column) != self.size:
            raise DimensionError(
                f"last column height {len(self.last_column)} != {self.size}"
            )

    @property
    def size(self) -> int:
        return self.n_simples * self.block_count


@dataclass(frozen=True)
class KoszulColumn:
    """Signed binomial multiplicities for the exterior algebra on g generators.

    psi[i] = (-1)^(i+1) * C(g, i+1); entry 0 is the top-degree term -g and the
    absolute values sum to 2^g - 1.
    """

    generators: int
    psi: tuple[int, ...]

    def __post_init__(self):
        expected = tuple(
            (-1) ** (i + 1) * comb(self.generators, i + 1)
            for i in range(self.generators)
        )
        if self.psi != expected:
            raise DomainError(f"psi must equal {expected}, got {self.psi}")


def koszul_column(g: int) -> KoszulColumn:
    if g < 1:
        raise DomainError(f"generators must be >= 1, got {g}")
    return KoszulColumn(
        g, tuple((-1) ** (i + 1) * comb(g, i + 1) for i in range(g))
    )


def build_shift_matrix(spec: ShiftMatrixSpec) -> ZMatrix:
    """Positive-twist convention: -1 diagonal, +1 subdiagonal at block
    distance n_simples, last column overridden with -1 added at the bottom.
    """
    n = spec.size
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -1
        if i >= spec.n_simples:
            rows[i][i - spec.n_simples] = 1
    for i in range(n - 1):
        rows[i][n - 1] = spec.last_column[i]
    rows[n - 1][n - 1] = spec.last_column[n - 1] - 1
    return ZMatrix(tuple(tuple(r) for r in rows))


def exterior_shift_matrix(g: int) -> ZMatrix:
    """Negative-twist convention for the exterior algebra on g generators:
    -1 diagonal, -1 subdiagonal, Koszul column last (top degree at the
    bottom, with the diagonal's -1 folded in).
    """
    psi = koszul_column(g).psi
    rows = [[0] * g for _ in range(g)]
    for i in range(g):
        rows[i][i] = -1
        if i:
            rows[i][i - 1] = -1
        rows[i][g - 1] = psi[g - 1 - i]
    rows[g - 1][g - 1] = psi[0] - 1
    return ZMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SnfFactorizationVerdict:
    """Outcome of checking that snf(shift matrix) = identity padding followed
    by snf(cartan) - the reduction that collapses the big shift matrix to the
    Cartan matrix at the level of every invariant.
    """

    ok: bool
    shift_diagonal: tuple[int, ...]
    cartan_diagonal: tuple[int, ...]
    expected_diagonal: tuple[int, ...]


def verify_snf_factorization(
    shift: ZMatrix, cartan: ZMatrix
) -> SnfFactorizationVerdict:
    if not shift.is_square or not cartan.is_square:
        raise DimensionError("both matrices must be square")
    if shift.rows < cartan.rows:
        raise DimensionError("shift matrix cannot be smaller than the cartan")
    got = shift.snf().diagonal
    cd = cartan.snf().diagonal
    expected = (1,) * (shift.rows - cartan.rows) + cd
    return SnfFactorizationVerdict(got == expected, got, cd, expected)
