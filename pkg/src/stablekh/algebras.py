"""Graded self-injective algebra families and their descriptor documents.

Each family is reduced to the four numbers downstream computations consume:
the Cartan matrix, the simple count, the total dimension, and the (negative)
Gorenstein parameter. Built-in families use the socle-degree rule for the
latter, with all generators in degree 1; raw descriptors supply it explicitly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError, SchemaError
from .zmatrix import ZMatrix

FAMILIES = (
    "exterior",
    "truncated_poly",
    "elem_abelian_group_algebra",
    "nakayama",
    "tensor",
    "raw",
)


@dataclass(frozen=True)
class GradedAlgebraDescriptor:
    family: str
    n_simples: int
    cartan: ZMatrix
    total_dim: int
    gorenstein_param: int
    params: tuple = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SchemaError(f"unknown family {self.family!r}")
        if self.n_simples < 1:
            raise SchemaError("simples must be >= 1")
        if self.cartan.shape != (self.n_simples, self.n_simples):
            raise SchemaError("cartan not square of size simples")
        if any(
            self.cartan[i, j] < 0
            for i in range(self.n_simples)
            for j in range(self.n_simples)
        ):
            raise SchemaError("cartan has a negative entry")
        if self.total_dim < 1:
            raise SchemaError("dim must be >= 1")
        if self.gorenstein_param > 0:
            raise SchemaError("gorenstein_param must be <= 0")

    @property
    def core_data(self) -> tuple[int, ZMatrix, int, int]:
        """The family-independent payload: (simples, cartan, dim, parameter)."""
        return (self.n_simples, self.cartan, self.total_dim, self.gorenstein_param)

    def param(self, key: str):
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def as_document(self) -> dict:
        """Round-trippable JSON document (the schema accepted by from_document)."""
        doc: dict = {"family": self.family}
        if self.family == "exterior":
            doc["generators"] = self.param("generators")
        elif self.family == "truncated_poly":
            doc["modulus"] = self.param("modulus")
        elif self.family == "elem_abelian_group_algebra":
            doc["p"] = self.param("p")
            doc["r"] = self.param("r")
        elif self.family == "nakayama":
            doc["simples"] = self.param("simples")
            doc["length"] = self.param("length")
        elif self.family == "tensor":
            doc["factors"] = [f.as_document() for f in self.param("factors")]
        else:
            doc["cartan"] = [list(row) for row in self.cartan.to_lists()]
            doc["dim"] = self.total_dim
            doc["simples"] = self.n_simples
            doc["gorenstein_param"] = self.gorenstein_param
        return doc


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def exterior(g: int) -> GradedAlgebraDescriptor:
    """Exterior algebra on g degree-1 generators: local, dimension 2^g."""
    if g < 1:
        raise DomainError(f"generators must be >= 1, got {g}")
    return GradedAlgebraDescriptor(
        "exterior",
        1,
        ZMatrix(((2**g,),)),
        2**g,
        -g,
        (("generators", g),),
    )


def truncated_poly(m: int) -> GradedAlgebraDescriptor:
    """k[x]/(x^m) with x in degree 1; socle degree m - 1."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    return GradedAlgebraDescriptor(
        "truncated_poly",
        1,
        ZMatrix(((m,),)),
        m,
        -(m - 1),
        (("modulus", m),),
    )


def elem_abelian_group_algebra(p: int, r: int) -> GradedAlgebraDescriptor:
    """Group algebra of (Z/p)^r over a field of characteristic p.

    Isomorphic to the r-fold tensor power of k[x]/(x^p), so the socle degree
    (hence -gorenstein_param) is r*(p-1).
    """
    if not _is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return GradedAlgebraDescriptor(
        "elem_abelian_group_algebra",
        1,
        ZMatrix(((p**r,),)),
        p**r,
        -r * (p - 1),
        (("p", p), ("r", r)),
    )


def nakayama(n: int, length: int) -> GradedAlgebraDescriptor:
    """Self-injective Nakayama algebra: cyclic quiver on n vertices, Loewy
    length `length`. Cartan entry (i,j) counts composition factors S_i of the
    uniserial projective P_j, i.e. residues j, j+1, ..., j+length-1 mod n.
    """
    if n < 1:
        raise DomainError(f"simples must be >= 1, got {n}")
    if length < 2:
        raise DomainError(f"length must be >= 2, got {length}")
    rows = [
        tuple(sum(1 for t in range(length) if (j + t) % n == i) for j in range(n))
        for i in range(n)
    ]
    return GradedAlgebraDescriptor(
        "nakayama",
        n,
        ZMatrix(tuple(rows)),
        n * length,
        -(length - 1),
        (("simples", n), ("length", length)),
    )


def tensor(
    a: GradedAlgebraDescriptor, b: GradedAlgebraDescriptor
) -> GradedAlgebraDescriptor:
    """Tensor product of algebras: Cartan matrices multiply Kronecker-wise,
    dimensions multiply, socle degrees (so Gorenstein parameters) add.
    """
    return GradedAlgebraDescriptor(
        "tensor",
        a.n_simples * b.n_simples,
        a.cartan.kron(b.cartan),
        a.total_dim * b.total_dim,
        a.gorenstein_param + b.gorenstein_param,
        (("factors", (a, b)),),
    )


def raw(
    cartan_rows, dim: int, simples: int, gorenstein_param: int
) -> GradedAlgebraDescriptor:
    """Descriptor from explicit data; all invariants validated."""
    try:
        m = ZMatrix(tuple(tuple(int(x) for x in row) for row in cartan_rows))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"cartan entries must be integers: {exc}") from None
    return GradedAlgebraDescriptor("raw", simples, m, dim, gorenstein_param)


_SCHEMAS = {
    "exterior": {"generators": int},
    "truncated_poly": {"modulus": int},
    "elem_abelian_group_algebra": {"p": int, "r": int},
    "nakayama": {"simples": int, "length": int},
    "tensor": {"factors": list},
    "raw": {"cartan": list, "dim": int, "simples": int, "gorenstein_param": int},
}


def from_document(doc) -> GradedAlgebraDescriptor:
    """Build a descriptor from a parsed JSON document, rejecting anything that
    is not exactly the schema for its family.
    """
    if not isinstance(doc, dict):
        raise SchemaError("descriptor document must be a JSON object")
    family = doc.get("family")
    if family is None:
        raise SchemaError("missing field 'family'")
    schema = _SCHEMAS.get(family)
    if schema is None:
        raise SchemaError(f"unknown family {family!r}")
    for key in doc:
        if key != "family" and key not in schema:
            raise SchemaError(f"unknown field {key!r} for family {family!r}")
    for key, typ in schema.items():
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
        value = doc[key]
        if not isinstance(value, typ) or isinstance(value, bool):
            raise SchemaError(f"field {key!r} must be of type {typ.__name__}")

    if family == "exterior":
        return exterior(doc["generators"])
    if family == "truncated_poly":
        return truncated_poly(doc["modulus"])
    if family == "elem_abelian_group_algebra":
        return elem_abelian_group_algebra(doc["p"], doc["r"])
    if family == "nakayama":
        return nakayama(doc["simples"], doc["length"])
    if family == "tensor":
        factors = doc["factors"]
        if len(factors) < 2:
            raise SchemaError("field 'factors' needs at least two entries")
        out = from_document(factors[0])
        for f in factors[1:]:
            out = tensor(out, from_document(f))
        return out
    rows = doc["cartan"]
    if not rows or any(not isinstance(r, list) for r in rows):
        raise SchemaError("cartan must be a non-empty array of arrays")
    if any(len(r) != len(rows) for r in rows):
        raise SchemaError("cartan not square")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError("cartan entries must be integers")
    return raw(rows, doc["dim"], doc["simples"], doc["gorenstein_param"])


def from_file(path) -> GradedAlgebraDescriptor:
    with open(path, "rb") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    return from_document(doc)
