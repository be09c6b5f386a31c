"""Homotopy K-theory of stable module categories over finite fields.

Everything reduces to one cofibre sequence: the invariant of the stable
category is the cone of the Cartan matrix acting on n copies of the
invariant of the base field. Over a finite field the K-groups of the base
are cyclic and explicitly known, so taking homotopy groups of the cone
yields per-degree short exact sequences whose outer terms are cokernels and
kernels of integer matrix actions - exactly what the abelian-group module
computes. When an extension is genuinely undetermined, the split candidate
is reported with an ambiguity flag rather than passed off as the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import AbGroup, cokernel, kernel, mod_action_kernel_cokernel
from .algebras import GradedAlgebraDescriptor
from .errors import DomainError
from .zmatrix import ZMatrix


@dataclass(frozen=True)
class FiniteFieldSpec:
    q: int
    p: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 1 or self.p < 2 or self.q != self.p**self.exponent:
            raise DomainError(
                f"need q = p^exponent with exponent >= 1, got {self.q} != "
                f"{self.p}^{self.exponent}"
            )
        d = 2
        while d * d <= self.p:
            if self.p % d == 0:
                raise DomainError(f"p must be prime, got {self.p}")
            d += 1

    @classmethod
    def from_prime_power(cls, q: int) -> "FiniteFieldSpec":
        if q < 2:
            raise DomainError(f"q must be >= 2, got {q}")
        p = 2
        while p * p <= q:
            if q % p == 0:
                break
            p += 1
        else:
            p = q
        e, rest = 0, q
        while rest % p == 0:
            rest //= p
            e += 1
        if rest != 1:
            raise DomainError(f"q must be a prime power, got {q}")
        return cls(q, p, e)


def quillen_k(field: FiniteFieldSpec, i: int) -> AbGroup:
    """K_i of a finite field: Z in degree 0, Z/(q^j - 1) in degree 2j - 1,
    zero in positive even degrees. Degree -1 is allowed (and zero) because the
    cone engine peeks one degree below its window; homotopy K-theory agrees
    with K-theory here, the base being regular.
    """
    if i < -1:
        raise DomainError(f"degree must be >= -1, got {i}")
    if i == 0:
        return AbGroup.free(1)
    if i < 0 or i % 2 == 0:
        return AbGroup.trivial()
    return AbGroup.cyclic(field.q ** ((i + 1) // 2) - 1)


@dataclass(frozen=True)
class SymbolicCone:
    """Base-field-independent presentation: the invariant of the stable
    category is the cone of `matrix` on `rank` copies of the invariant of k.
    """

    matrix: ZMatrix
    rank: int
    template: str


def symbolic_cone(algebra: GradedAlgebraDescriptor) -> SymbolicCone:
    n = algebra.n_simples
    if n == 1:
        template = f"cone(E(k) --*{algebra.cartan[0, 0]}--> E(k))"
    else:
        template = f"cone(E(k)^{n} --C--> E(k)^{n})"
    return SymbolicCone(algebra.cartan, n, template)


@dataclass(frozen=True)
class DegreeGroup:
    degree: int
    group: AbGroup
    ambiguous: bool


@dataclass(frozen=True)
class InvariantResult:
    algebra: GradedAlgebraDescriptor
    base: FiniteFieldSpec
    groups: tuple[DegreeGroup, ...]
    cone: SymbolicCone


def _action_on(cartan: ZMatrix, coeff: AbGroup) -> tuple[AbGroup, AbGroup]:
    """Kernel and cokernel of the Cartan action on coeff^n for cyclic coeff."""
    if coeff.is_trivial:
        return AbGroup.trivial(), AbGroup.trivial()
    if coeff.free_rank:
        return kernel(cartan), cokernel(cartan)
    return mod_action_kernel_cokernel(cartan, coeff.torsion[0])


def stable_kh(
    algebra: GradedAlgebraDescriptor, base: FiniteFieldSpec, max_degree: int
) -> InvariantResult:
    """KH of the stable module category in degrees 0..max_degree.

    Degree i sits in a short exact sequence between the cokernel of the
    Cartan action on K_i(k)^n and the kernel of the action on K_{i-1}(k)^n;
    whenever both ends are nonzero the reported group is the split direct
    sum, flagged ambiguous.
    """
    if max_degree < 0:
        raise DomainError(f"max_degree must be >= 0, got {max_degree}")
    cartan = algebra.cartan
    groups = []
    below_kernel, _ = _action_on(cartan, quillen_k(base, -1))
    for i in range(max_degree + 1):
        this_kernel, cok = _action_on(cartan, quillen_k(base, i))
        ambiguous = not cok.is_trivial and not below_kernel.is_trivial
        groups.append(DegreeGroup(i, cok.direct_sum(below_kernel), ambiguous))
        below_kernel = this_kernel
    return InvariantResult(algebra, base, tuple(groups), symbolic_cone(algebra))


@dataclass(frozen=True)
class K0ConsistencyVerdict:
    ok: bool
    engine_group: AbGroup
    cokernel_group: AbGroup


def k0_consistency(
    algebra: GradedAlgebraDescriptor, base: FiniteFieldSpec
) -> K0ConsistencyVerdict:
    """Degree 0 of the cone engine must reproduce coker(cartan) on the nose."""
    engine = stable_kh(algebra, base, 0).groups[0].group
    direct = cokernel(algebra.cartan)
    return K0ConsistencyVerdict(engine == direct, engine, direct)


@dataclass(frozen=True)
class PhantomEntry:
    algebra: GradedAlgebraDescriptor
    determinant: int
    is_phantom: bool


def phantom_scan(algebras) -> list[PhantomEntry]:
    """Flag algebras whose Cartan determinant is a unit: the cone is then an
    equivalence, so every A1-homotopy invariant of the stable category dies.
    """
    out = []
    for a in algebras:
        det = a.cartan.det()
        out.append(PhantomEntry(a, det, det in (1, -1)))
    return out


def vanishing_expected(
    algebra: GradedAlgebraDescriptor, base: FiniteFieldSpec, max_degree: int
) -> bool:
    """True when |det cartan| is nonzero and coprime to every q^j - 1 in the
    degree window - the hypothesis forcing all positive-degree groups to die.
    """
    det = algebra.cartan.det()
    if det == 0:
        return False
    top = (max_degree + 1) // 2
    return all(gcd(det, base.q**j - 1) == 1 for j in range(1, top + 1))
