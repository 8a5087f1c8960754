"""Exact linear maps between tensor spaces.

Matrices are sympy ``DomainMatrix`` objects over ``QQ`` kept in the sparse
format, ``target.dim x source.dim``; columns are the images of the source
basis vectors.

"""

import attrs
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import PreconditionError
from .spaces import TensorSpace


# =============================================================================
# RANKS
# =============================================================================


def matrix_rank(matrix):
    """Rank over QQ by fraction-free elimination."""
    rows, cols = matrix.shape
    if not rows or not cols or matrix.is_zero_matrix:
        return 0
    _, _, pivots = matrix.rref_den(method="CD", keep_domain=False)
    return len(pivots)


def vectors_matrix(vectors):
    """Stack sparse vectors (``key -> coefficient``) as matrix rows."""
    index, rows = {}, {}
    for vector in vectors:
        row = {}
        for key, value in vector.items():
            value = QQ.convert(value)
            if value:
                row[index.setdefault(key, len(index))] = value
        if row:
            rows[len(rows)] = row
    return DomainMatrix(rows, (len(rows), len(index)), QQ)


def rank_of_vectors(vectors):
    return matrix_rank(vectors_matrix(vectors))


# =============================================================================
# LINEAR MAPS
# =============================================================================


def _check_matrix(instance, attribute, value):
    expected = (instance.target.dim, instance.source.dim)
    if value.shape != expected:
        raise PreconditionError(
            f"matrix shape {value.shape} does not match {expected}"
        )


@attrs.define(frozen=True, eq=False)
class LinMap:
    source: TensorSpace
    target: TensorSpace
    matrix: DomainMatrix = attrs.field(
        converter=lambda m: m.to_sparse(), validator=_check_matrix
    )
    _columns: list = attrs.field(init=False, eq=False, repr=False)

    @_columns.default
    def _columns_default(self):
        transposed = self.matrix.transpose().to_sparse().rep
        return [
            dict(transposed.get(j, {})) for j in range(self.matrix.shape[1])
        ]

    @classmethod
    def from_images(cls, source, target, image):
        """Build from ``image(key) -> {target key: coefficient}``."""
        rows = {}
        for col, key in enumerate(source.basis):
            for target_key, value in image(key).items():
                value = QQ.convert(value)
                if value:
                    row = rows.setdefault(target.index(target_key), {})
                    row[col] = value
        return cls(
            source, target, DomainMatrix(rows, (target.dim, source.dim), QQ)
        )

    @classmethod
    def identity(cls, space):
        return cls(space, space, DomainMatrix.eye(space.dim, QQ))

    @classmethod
    def zero(cls, source, target):
        return cls(
            source, target, DomainMatrix({}, (target.dim, source.dim), QQ)
        )

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and (self.matrix - other.matrix).is_zero_matrix
        )

    __hash__ = None

    def __matmul__(self, other):
        """``self o other``."""
        if not isinstance(other, LinMap):
            return NotImplemented
        if other.target != self.source:
            raise PreconditionError(
                f"cannot compose {other.target} into {self.source}"
            )
        return LinMap(
            other.source, self.target, self.matrix.matmul(other.matrix)
        )

    # API =====================================================================

    @property
    def rank(self):
        return matrix_rank(self.matrix)

    @property
    def is_zero(self):
        return self.matrix.is_zero_matrix

    @property
    def is_injective(self):
        return self.rank == self.source.dim

    def columns(self):
        """Column ``j`` as ``{row index: coefficient}``."""
        return [dict(col) for col in self._columns]

    def image(self, key):
        """Image of one source basis vector, keyed by target basis."""
        basis = self.target.basis
        column = self._columns[self.source.index(key)]
        return {basis[row]: value for row, value in sorted(column.items())}

    def apply(self, vector):
        """Image of a sparse vector ``{source key: coefficient}``."""
        result = {}
        for key, coeff in vector.items():
            for target_key, value in self.image(key).items():
                result[target_key] = result.get(target_key, 0) + coeff * value
        return {key: value for key, value in result.items() if value}

    def scaled(self, scalar):
        scalar = QQ.convert(scalar)
        return LinMap(self.source, self.target, self.matrix * scalar)

    def tensor(self, other):
        """Kronecker product ``self (x) other``."""
        source = self.source.tensor(other.source)
        target = self.target.tensor(other.target)
        width = other.target.dim
        inner = other.columns()
        rows = {}
        for i, outer_col in enumerate(self.columns()):
            for j, inner_col in enumerate(inner):
                col = i * other.source.dim + j
                for r, a in outer_col.items():
                    for s, b in inner_col.items():
                        rows.setdefault(r * width + s, {})[col] = a * b
        return LinMap(
            source, target, DomainMatrix(rows, (target.dim, source.dim), QQ)
        )

    def left_inverse(self):
        """``(A^T A)^-1 A^T`` for an injective map ``A``."""
        if not self.is_injective:
            raise PreconditionError("the map is not injective")
        transposed = self.matrix.transpose()
        gram = transposed.matmul(self.matrix)
        inverse = gram.to_dense().inv().to_sparse()
        return LinMap(self.target, self.source, inverse.matmul(transposed))


def same_span(first, second):
    """True when two maps into the same space have equal column spans."""
    if first.target != second.target:
        raise PreconditionError("maps land in different spaces")
    rank = first.rank
    return (
        rank == second.rank
        and rank == matrix_rank(first.matrix.hstack(second.matrix))
    )
