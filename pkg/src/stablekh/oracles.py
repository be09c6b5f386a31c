"""Deliberately naive verifiers for the fast kernels.

Nothing here shares a code path with the implementations under test: minors
are expanded by Laplace's rule, mod-m actions are enumerated exhaustively,
and Cartan matrices are recounted by walking composition series. Guards keep
the combinatorics at desk scale; exceeding them is a refusal, not a wait.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd

from .abelian import AbGroup
from .errors import OracleGuardError
from .zmatrix import ZMatrix


def _minor_det(rows, idx_r, idx_c):
    # textbook first-row Laplace expansion, independent of ZMatrix.det
    if len(idx_r) == 1:
        return rows[idx_r[0]][idx_c[0]]
    i = idx_r[0]
    total = 0
    for pos, j in enumerate(idx_c):
        sub = _minor_det(rows, idx_r[1:], idx_c[:pos] + idx_c[pos + 1 :])
        term = rows[i][j] * sub
        total += -term if pos % 2 else term
    return total


@dataclass(frozen=True)
class DivisorChain:
    """D_i = gcd of all i x i minors; zero once every minor of that size is."""

    chain: tuple[int, ...]

    @property
    def factors(self) -> tuple[int, ...]:
        """Invariant factors d_i = D_i / D_{i-1}, zero-padded to full length."""
        out = []
        prev = 1
        for d in self.chain:
            if d == 0:
                out.append(0)
            else:
                out.append(d // prev)
                prev = d
        return tuple(out)


def determinantal_divisors(m: ZMatrix) -> DivisorChain:
    r = min(m.rows, m.cols)
    if r > 6:
        raise OracleGuardError(f"minor enumeration guard: min dim {r} > 6")
    rows = m.to_lists()
    chain = []
    dead = False
    for size in range(1, r + 1):
        if dead:
            chain.append(0)
            continue
        g = 0
        for idx_r in combinations(range(m.rows), size):
            for idx_c in combinations(range(m.cols), size):
                g = gcd(g, _minor_det(rows, idx_r, idx_c))
        chain.append(g)
        dead = g == 0
    return DivisorChain(tuple(chain))


def _structure_from_census(order: int, killed) -> AbGroup:
    """Recover a finite abelian group from its p^k-torsion counts.

    killed(s) must return #{x : s*x = 0}. The count of invariant factors with
    p-exponent >= k is log_p of killed(p^k)/killed(p^(k-1)); reading those
    multiplicities off per prime rebuilds the cyclic decomposition.
    """
    cyclic_orders = []
    rest = order
    p = 2
    while rest > 1:
        if p * p > rest:
            p = rest
        if rest % p:
            p += 1
            continue
        while rest % p == 0:
            rest //= p
        ge_counts = []
        prev = killed(1)
        k = 1
        while True:
            cur = killed(p**k)
            ratio, c = cur // prev, 0
            while ratio > 1:
                ratio //= p
                c += 1
            if c == 0:
                break
            ge_counts.append(c)
            prev = cur
            k += 1
        for j in range(1, (ge_counts[0] if ge_counts else 0) + 1):
            exponent = sum(1 for c in ge_counts if c >= j)
            cyclic_orders.append(p**exponent)
        p += 1
    return AbGroup.from_cyclic_orders(cyclic_orders)


def brute_mod_kernel(m: ZMatrix, modulus: int) -> tuple[AbGroup, AbGroup]:
    """Kernel and cokernel of m on (Z/modulus)^N by full enumeration."""
    if not m.is_square or m.rows > 3:
        raise OracleGuardError("enumeration guard: need square with N <= 3")
    if not 2 <= modulus <= 12:
        raise OracleGuardError("enumeration guard: need 2 <= modulus <= 12")
    n = m.rows
    rows = m.to_lists()
    zero = (0,) * n

    def apply(v):
        return tuple(
            sum(rows[i][j] * v[j] for j in range(n)) % modulus for i in range(n)
        )

    space = [tuple(v) for v in product(range(modulus), repeat=n)]
    kernel_elems = [v for v in space if apply(v) == zero]
    image = frozenset(apply(v) for v in space)

    def scaled(v, s):
        return tuple((s * x) % modulus for x in v)

    def kernel_killed(s):
        return sum(1 for v in kernel_elems if scaled(v, s) == zero)

    def cokernel_killed(s):
        hits = sum(1 for v in space if scaled(v, s) in image)
        return hits // len(image)

    ker = _structure_from_census(len(kernel_elems), kernel_killed)
    cok = _structure_from_census(len(space) // len(image), cokernel_killed)
    return ker, cok


def nakayama_cartan_oracle(n: int, length: int) -> ZMatrix:
    """Cartan matrix by walking each uniserial projective's composition
    series around the cyclic quiver and tallying which simple each layer hits.
    """
    if n < 1 or length < 2:
        raise OracleGuardError("need n >= 1 and length >= 2")
    if n * length > 64:
        raise OracleGuardError(f"walk guard: n*length = {n * length} > 64")
    counts = [[0] * n for _ in range(n)]
    for j in range(n):
        for t in range(length):
            counts[(j + t) % n][j] += 1
    return ZMatrix(tuple(tuple(r) for r in counts))
