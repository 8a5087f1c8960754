"""Tensor products of exterior powers, symmetric powers and Schur modules.

A basis vector of a :class:`TensorSpace` is a tuple with one key per factor:

- ``Ext(p)``: strictly increasing ``p``-tuple of indices in ``1..n``;
- ``Sym(p)``: weakly increasing ``p``-tuple (a monomial);
- ``S(lam)``: a semistandard :class:`Tableau` of shape ``lam``.

Bases are ordered lexicographically, so matrices are reproducible.

"""

import enum
import functools
import itertools as it
import math

import attrs
from attrs import validators as valids

from ..errors import GuardrailError, InvalidPartitionError
from ..partitions import Partition, as_partition, conjugate
from ..rep_ring import DimContext, as_context, dim_schur


# =============================================================================
# DEFAULTS
# =============================================================================

DEFAULT_BASIS_CAP = 10**6


# =============================================================================
# TABLEAUX
# =============================================================================


def _canonical_rows(rows):
    return tuple(tuple(int(value) for value in row) for row in rows if row)


def _check_semistandard(instance, attribute, rows):
    Partition(len(row) for row in rows)
    for row in rows:
        if row and row[0] < 1:
            raise InvalidPartitionError(f"entries must be >= 1: {rows!r}")
        if any(a > b for a, b in it.pairwise(row)):
            raise InvalidPartitionError(f"rows must weakly increase: {rows}")
    for upper, lower in it.pairwise(rows):
        if any(a >= b for a, b in zip(upper, lower)):
            raise InvalidPartitionError(
                f"columns must strictly increase: {rows}"
            )


@attrs.define(frozen=True, order=True, repr=False)
class Tableau:
    """A semistandard Young tableau, stored row by row."""

    rows: tuple = attrs.field(
        converter=_canonical_rows, validator=_check_semistandard
    )

    def __repr__(self):
        return f"Tableau({self})"

    def __str__(self):
        return "|".join("".join(map(str, row)) for row in self.rows) or "-"

    @property
    def shape(self):
        return Partition(len(row) for row in self.rows)

    @property
    def columns(self):
        return tuple(
            tuple(row[col] for row in self.rows if len(row) > col)
            for col in range(len(self.rows[0]) if self.rows else 0)
        )

    def content(self, n):
        """Number of occurrences of each of ``1..n``."""
        counts = [0] * n
        for row in self.rows:
            for value in row:
                counts[value - 1] += 1
        return tuple(counts)


@functools.cache
def _tableaux(shape, n):
    found = []

    def _fill(rows):
        depth = len(rows)
        if depth == len(shape):
            found.append(Tableau(rows))
            return
        above = rows[-1] if rows else None
        for row in it.combinations_with_replacement(
            range(1, n + 1), shape[depth]
        ):
            if above is None or all(a < b for a, b in zip(above, row)):
                _fill(rows + (row,))

    _fill(())
    return tuple(sorted(found))


def semistandard_tableaux(shape, n):
    """All semistandard tableaux of ``shape`` with entries in ``1..n``."""
    return _tableaux(as_partition(shape), int(n))


@functools.cache
def _kostka(shape, weight):
    return sum(
        1
        for tableau in _tableaux(shape, len(weight))
        if tableau.content(len(weight)) == weight
    )


def kostka(shape, weight):
    """Number of semistandard tableaux of ``shape`` with content ``weight``."""
    shape, weight = as_partition(shape), tuple(int(w) for w in weight)
    if shape.size != sum(weight) or len(shape) > len(weight):
        return 0
    return _kostka(shape, weight)


# =============================================================================
# FACTORS
# =============================================================================


class FactorKind(enum.Enum):
    EXT = "Ext"
    SYM = "Sym"
    SCHUR = "S"


def _check_single_row(instance, attribute, value):
    if instance.kind is not FactorKind.SCHUR and len(value) > 1:
        raise InvalidPartitionError(
            f"{instance.kind.value} factors take a single degree"
        )


@attrs.define(frozen=True)
class Factor:
    kind: FactorKind = attrs.field(converter=FactorKind)
    shape: Partition = attrs.field(
        converter=as_partition, validator=_check_single_row
    )

    @classmethod
    def ext(cls, p):
        return cls(FactorKind.EXT, (p,))

    @classmethod
    def sym(cls, p):
        return cls(FactorKind.SYM, (p,))

    @classmethod
    def schur(cls, lam):
        return cls(FactorKind.SCHUR, lam)

    def __str__(self):
        arg = self.degree if self.kind is not FactorKind.SCHUR else self.shape
        return f"{self.kind.value}({arg})"

    @property
    def degree(self):
        return self.shape.size

    @property
    def is_odd(self):
        """Exterior factors of odd degree anticommute."""
        return self.kind is FactorKind.EXT and self.degree % 2 == 1

    def dim(self, ctx):
        ctx = as_context(ctx)
        if self.kind is FactorKind.EXT:
            return math.comb(ctx.n, self.degree)
        if self.kind is FactorKind.SYM:
            return math.comb(ctx.n + self.degree - 1, self.degree)
        return dim_schur(self.shape, ctx)

    def basis(self, ctx):
        ctx = as_context(ctx)
        indices = range(1, ctx.n + 1)
        if self.kind is FactorKind.EXT:
            return tuple(it.combinations(indices, self.degree))
        if self.kind is FactorKind.SYM:
            return tuple(
                it.combinations_with_replacement(indices, self.degree)
            )
        return semistandard_tableaux(self.shape, ctx.n)


def exterior_columns(lam):
    """``Ext(c_1), Ext(c_2), ...`` for the column lengths of ``lam``."""
    return tuple(Factor.ext(c) for c in conjugate(lam))


def symmetric_rows(lam):
    """``Sym(l_1), Sym(l_2), ...`` for the row lengths of ``lam``."""
    return tuple(Factor.sym(p) for p in as_partition(lam))


# =============================================================================
# TENSOR SPACES
# =============================================================================


@attrs.define(frozen=True)
class TensorSpace:
    """An ordered tensor product of factors over a space of dimension n.

    The basis is enumerated on construction; spaces larger than ``cap``
    raise :class:`GuardrailError` before any enumeration happens.

    """

    factors: tuple = attrs.field(converter=tuple)
    ctx: DimContext = attrs.field(converter=as_context)
    cap: int = attrs.field(
        default=DEFAULT_BASIS_CAP,
        eq=False,
        repr=False,
        validator=valids.ge(1),
    )
    _basis: tuple = attrs.field(init=False, eq=False, repr=False)
    _index: dict = attrs.field(init=False, eq=False, repr=False)

    @_basis.default
    def _basis_default(self):
        if self.dim > self.cap:
            raise GuardrailError(
                f"{self} has {self.dim} basis vectors, cap is {self.cap}"
            )
        return tuple(
            it.product(*(factor.basis(self.ctx) for factor in self.factors))
        )

    @_index.default
    def _index_default(self):
        return {key: idx for idx, key in enumerate(self._basis)}

    def __str__(self):
        return " (x) ".join(map(str, self.factors)) or "k"

    @property
    def dim(self):
        return math.prod(factor.dim(self.ctx) for factor in self.factors)

    @property
    def basis(self):
        return self._basis

    def index(self, key):
        return self._index[tuple(key)]

    def tensor(self, other):
        return TensorSpace(
            self.factors + other.factors, self.ctx, cap=self.cap
        )
