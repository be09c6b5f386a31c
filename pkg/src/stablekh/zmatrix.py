"""Dense matrices over the integers with exact arithmetic.

`ZMatrix` is the universal carrier for every matrix in the package: Cartan
matrices, shift-endomorphism matrices, cluster matrices, and the unimodular
transforms of a Smith normal form. Entries are plain Python ints, so there is
no overflow at any magnitude, and all operations are exact.

Instances are immutable; all operations return new matrices and are safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import det_kernel, snf_kernel
from .errors import DimensionError, DomainError


class ZMatrix:
    """Immutable rows x cols integer matrix, row-major storage."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows_of_entries: Iterable[Sequence[int]]):
        data = [tuple(int(e) for e in row) for row in rows_of_entries]
        if not data:
            raise DimensionError("matrix needs at least one row")
        width = len(data[0])
        if width == 0:
            raise DimensionError("matrix needs at least one column")
        flat: list[int] = []
        for row in data:
            if len(row) != width:
                raise DimensionError(
                    f"ragged rows: expected width {width}, got {len(row)}"
                )
            flat.extend(row)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_entries", tuple(flat))

    def __setattr__(self, name, value):
        raise AttributeError("ZMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ZMatrix":
        if n < 1:
            raise DimensionError("identity size must be positive")
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ZMatrix":
        if rows < 1 or cols < 1:
            raise DimensionError("zero matrix dimensions must be positive")
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "ZMatrix":
        n = len(entries)
        if n < 1:
            raise DimensionError("diagonal needs at least one entry")
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def column(cls, entries: Sequence[int]) -> "ZMatrix":
        if not entries:
            raise DimensionError("column needs at least one entry")
        return cls([[e] for e in entries])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {(i, j)} out of range for {self.shape}")
        return self._entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        """Rows as plain lists (the kernel / JSON interchange format)."""
        return [list(self.row(i)) for i in range(self.rows)]

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    # -- equality / hashing / display -------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"ZMatrix({self.to_lists()!r})"

    # -- arithmetic --------------------------------------------------------

    def _require_same_shape(self, other: "ZMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"{op}: shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "ZMatrix") -> "ZMatrix":
        self._require_same_shape(other, "add")
        return ZMatrix(
            [
                [a + b for a, b in zip(self.row(i), other.row(i))]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "ZMatrix") -> "ZMatrix":
        self._require_same_shape(other, "sub")
        return ZMatrix(
            [
                [a - b for a, b in zip(self.row(i), other.row(i))]
                for i in range(self.rows)
            ]
        )

    def __neg__(self) -> "ZMatrix":
        return ZMatrix([[-e for e in self.row(i)] for i in range(self.rows)])

    def __mul__(self, scalar: int) -> "ZMatrix":
        if not isinstance(scalar, int):
            return NotImplemented
        return ZMatrix([[scalar * e for e in self.row(i)] for i in range(self.rows)])

    __rmul__ = __mul__

    def __matmul__(self, other: "ZMatrix") -> "ZMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"mul: inner dimensions {self.cols} and {other.rows} differ"
            )
        cols = [tuple(other[k, j] for k in range(other.rows)) for j in range(other.cols)]
        return ZMatrix(
            [
                [sum(a * b for a, b in zip(self.row(i), col)) for col in cols]
                for i in range(self.rows)
            ]
        )

    def __pow__(self, exponent: int) -> "ZMatrix":
        if not self.is_square:
            raise DimensionError("pow: matrix must be square")
        if exponent < 0:
            raise DomainError("pow: exponent must be >= 0")
        result = ZMatrix.identity(self.rows)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def kron(self, other: "ZMatrix") -> "ZMatrix":
        """Kronecker product (tensor product of the underlying maps)."""
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row: list[int] = []
                for a in self.row(i):
                    row.extend(a * b for b in other.row(k))
                out.append(row)
        return ZMatrix(out)

    def transpose(self) -> "ZMatrix":
        return ZMatrix(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]
        )

    # -- exact linear algebra ---------------------------------------------

    def det(self) -> int:
        """Exact determinant (cofactor for small sizes, Bareiss above)."""
        if not self.is_square:
            raise DimensionError(f"det: matrix is {self.rows}x{self.cols}, not square")
        return det_kernel(self.rows, self.to_lists())

    def snf(self) -> "SNFResult":
        """Smith normal form with unimodular transforms.

        Returns an :class:`SNFResult` (u, d, v) with ``u @ self @ v == d``,
        d diagonal with nonnegative entries forming a divisibility chain,
        zeros last, and ``|det u| == |det v| == 1``.
        """
        u, d, v = snf_kernel(self.rows, self.cols, self.to_lists())
        return SNFResult(ZMatrix(u), ZMatrix(d), ZMatrix(v))

    def rank(self) -> int:
        """Rank over the rationals (count of nonzero invariant factors)."""
        return sum(1 for e in self.snf().diagonal if e != 0)


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form triple: ``u @ m @ v == d``, u and v unimodular."""

    u: ZMatrix
    d: ZMatrix
    v: ZMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        """All min(rows, cols) diagonal entries of d, zeros included."""
        return self.d.diagonal_entries()

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries (the invariant factors of the input)."""
        return tuple(e for e in self.diagonal if e != 0)
