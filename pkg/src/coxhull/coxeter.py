"""Coxeter matrices and classification of the supported group types.

A Coxeter matrix is a symmetric matrix of generator orders m_ij with
m_ii = 1 and m_ij >= 2 off the diagonal (infinity allowed).  A rank-3
matrix tessellates the Euclidean plane by triangles exactly when
1/m12 + 1/m23 + 1/m31 = 1, which pins the off-diagonal order multisets
{3,3,3}, {2,4,4} and {2,3,6}.  The rank-2 matrix with an infinite order
acts on the real line.  Everything else is reported as unsupported.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

INF = float("inf")


class CoxeterMatrixError(ValueError):
    """Base for invalid Coxeter matrix input."""


class NonSymmetric(CoxeterMatrixError):
    def __init__(self, i, j, vij, vji):
        super().__init__(f"entries[{i}][{j}]={vij} != entries[{j}][{i}]={vji}")
        self.indices = (i, j)


class BadDiagonal(CoxeterMatrixError):
    def __init__(self, i, value):
        super().__init__(f"entries[{i}][{i}]={value}, diagonal orders must be 1")
        self.indices = (i, i)


class OrderBelowTwo(CoxeterMatrixError):
    def __init__(self, i, j, value):
        super().__init__(f"entries[{i}][{j}]={value}, off-diagonal orders must be >= 2")
        self.indices = (i, j)


class TypeTag(enum.Enum):
    A2Tilde = "a2t"
    C2Tilde = "c2t"
    G2Tilde = "g2t"
    I2Infinity = "i2inf"
    Unsupported = "unsupported"

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "TypeTag":
        for tag in cls:
            if tag.value == code:
                return tag
        raise ValueError(f"unknown type code {code!r}; expected one of "
                         f"{[t.value for t in cls if t is not cls.Unsupported]}")


@dataclass(frozen=True)
class CoxeterMatrix:
    rank: int
    entries: tuple  # rank x rank tuple of tuples; entries are ints or INF

    def order(self, i, j):
        return self.entries[i][j]

    def off_diagonal_orders(self):
        """Multiset of orders m_ij for i < j, sorted."""
        return sorted(
            self.entries[i][j]
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
        )


def _as_order(value):
    if value == "inf" or value is None:
        return INF
    if isinstance(value, float) and value == INF:
        return INF
    if isinstance(value, int):
        return value
    raise CoxeterMatrixError(f"order entries must be integers or 'inf', got {value!r}")


def validate_matrix(raw) -> CoxeterMatrix:
    """Validate a square matrix of orders (``"inf"`` accepted as sentinel)."""
    rank = len(raw)
    if rank == 0 or any(len(row) != rank for row in raw):
        raise CoxeterMatrixError("matrix must be square and nonempty")
    entries = tuple(tuple(_as_order(v) for v in row) for row in raw)
    for i in range(rank):
        if entries[i][i] != 1:
            raise BadDiagonal(i, entries[i][i])
    for i in range(rank):
        for j in range(i + 1, rank):
            if entries[i][j] != entries[j][i]:
                raise NonSymmetric(i, j, entries[i][j], entries[j][i])
            if entries[i][j] < 2:
                raise OrderBelowTwo(i, j, entries[i][j])
    return CoxeterMatrix(rank, entries)


def matrix_from_json(text: str) -> CoxeterMatrix:
    """Parse a matrix from a JSON array of arrays; "inf" is the infinity
    sentinel."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoxeterMatrixError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise CoxeterMatrixError("JSON matrix must be an array of arrays")
    return validate_matrix(raw)


def classify(matrix: CoxeterMatrix) -> TypeTag:
    """Type of the group up to generator relabeling; Unsupported is a value."""
    if matrix.rank == 2:
        if matrix.entries[0][1] == INF:
            return TypeTag.I2Infinity
        return TypeTag.Unsupported
    if matrix.rank != 3:
        return TypeTag.Unsupported
    orders = matrix.off_diagonal_orders()
    if orders == [3, 3, 3]:
        return TypeTag.A2Tilde
    if orders == [2, 4, 4]:
        return TypeTag.C2Tilde
    if orders == [2, 3, 6]:
        return TypeTag.G2Tilde
    return TypeTag.Unsupported


def matrix_for(tag: TypeTag) -> CoxeterMatrix:
    """The canonical Coxeter matrix realized by build_group for this tag."""
    if tag is TypeTag.A2Tilde:
        return validate_matrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    if tag is TypeTag.C2Tilde:
        return validate_matrix([[1, 2, 4], [2, 1, 4], [4, 4, 1]])
    if tag is TypeTag.G2Tilde:
        return validate_matrix([[1, 6, 3], [6, 1, 2], [3, 2, 1]])
    if tag is TypeTag.I2Infinity:
        return validate_matrix([[1, "inf"], ["inf", 1]])
    raise ValueError("no canonical matrix for unsupported type")
