"""Polynomial representation ring of GL(V).

A :class:`RepSum` is a formal integer combination of Schur functors
``S_lambda``; a :class:`GradedCharacter` is a family of them indexed by the
internal degree. Everything is truncated eagerly at ``n`` rows.

"""

import itertools as it
import math
from collections import abc

import attrs
from attrs import validators as valids

from .errors import PreconditionError
from .partitions import (
    Partition,
    as_partition,
    horizontal_strips,
    sort_partitions,
    vertical_strips,
)


# =============================================================================
# CONTEXT
# =============================================================================


@attrs.define(frozen=True)
class DimContext:
    """The dimension ``n`` of V."""

    n: int = attrs.field(
        converter=int,
        validator=valids.and_(valids.instance_of(int), valids.ge(1)),
    )

    def admits(self, lam):
        """True when ``S_lam(V)`` is nonzero."""
        return len(as_partition(lam)) <= self.n


def as_context(value):
    return value if isinstance(value, DimContext) else DimContext(n=value)


# =============================================================================
# DIMENSIONS
# =============================================================================


def dim_schur(lam, ctx):
    """Weyl dimension of ``S_lam(V)``; zero beyond ``n`` rows."""
    lam, ctx = as_partition(lam), as_context(ctx)
    if not ctx.admits(lam):
        return 0
    num, den = 1, 1
    for i, j in it.combinations(range(ctx.n), 2):
        num *= lam[i] - lam[j] + j - i
        den *= j - i
    return num // den


def dim_sym(k, ctx):
    ctx = as_context(ctx)
    return math.comb(ctx.n + k - 1, k)


def dim_ext(k, ctx):
    ctx = as_context(ctx)
    return math.comb(ctx.n, k)


# =============================================================================
# REPRESENTATION SUMS
# =============================================================================


def _canonical_mult(value):
    if isinstance(value, RepSum):
        return dict(value.items())
    items = value.items() if isinstance(value, abc.Mapping) else value
    mult = {}
    for lam, count in items:
        lam = as_partition(lam)
        mult[lam] = mult.get(lam, 0) + int(count)
    return {
        lam: mult[lam] for lam in sort_partitions(mult) if mult[lam] != 0
    }


@attrs.define(frozen=True, eq=False)
class RepSum(abc.Mapping):
    """Multiplicity map ``partition -> integer`` with no zero entries.

    Iteration follows :meth:`Partition.sort_key`. Equality is the mapping
    equality, so a RepSum compares equal to a plain dict with the same
    partitions and multiplicities.

    """

    _mult: dict = attrs.field(
        factory=dict, converter=_canonical_mult, alias="mult"
    )

    @classmethod
    def of(cls, *partitions):
        """Multiplicity one for each partition given."""
        return cls([(lam, 1) for lam in partitions])

    def __getitem__(self, lam):
        return self._mult[as_partition(lam)]

    def __iter__(self):
        return iter(self._mult)

    def __len__(self):
        return len(self._mult)

    def __repr__(self):
        body = ", ".join(f"({lam}): {m}" for lam, m in self._mult.items())
        return f"RepSum({{{body}}})"

    def __add__(self, other):
        if not isinstance(other, RepSum):
            return NotImplemented
        return RepSum(it.chain(self.items(), other.items()))

    def __neg__(self):
        return RepSum((lam, -m) for lam, m in self.items())

    def __sub__(self, other):
        if not isinstance(other, RepSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return RepSum((lam, scalar * m) for lam, m in self.items())

    __rmul__ = __mul__

    # API =====================================================================

    @property
    def is_effective(self):
        return all(m > 0 for m in self._mult.values())

    def multiplicity(self, lam):
        return self._mult.get(as_partition(lam), 0)

    def truncated(self, ctx):
        ctx = as_context(ctx)
        return RepSum(
            (lam, m) for lam, m in self.items() if ctx.admits(lam)
        )

    def dim(self, ctx):
        return sum(m * dim_schur(lam, ctx) for lam, m in self.items())

    def degrees(self):
        return frozenset(lam.size for lam in self)


def as_repsum(value):
    if isinstance(value, RepSum):
        return value
    if isinstance(value, (Partition, str, tuple)):
        return RepSum.of(as_partition(value))
    return RepSum(value)


def _pieri(x, k, ctx, strips):
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    x, ctx = as_repsum(x), as_context(ctx)
    terms = []
    for lam, m in x.items():
        terms.extend(
            (eta, m) for eta in strips(lam, k) if ctx.admits(eta)
        )
    return RepSum(terms)


def pieri_sym(x, k, ctx):
    """``x (x) Sym_k V`` by the Pieri rule for horizontal strips."""
    return _pieri(x, k, ctx, horizontal_strips)


def pieri_ext(x, k, ctx):
    """``x (x) Ext^k V`` by the Pieri rule for vertical strips."""
    return _pieri(x, k, ctx, vertical_strips)


# =============================================================================
# GRADED CHARACTERS
# =============================================================================


def _canonical_components(value):
    items = value.items() if isinstance(value, abc.Mapping) else value
    components = {}
    for degree, rep in items:
        degree = int(degree)
        rep = components.get(degree, RepSum()) + as_repsum(rep)
        components[degree] = rep
    return {
        degree: components[degree]
        for degree in sorted(components)
        if components[degree]
    }


def _check_grading(instance, attribute, value):
    for degree, rep in value.items():
        wrong = [lam for lam in rep if lam.size != degree]
        if wrong:
            raise PreconditionError(
                f"degree {degree} component holds {wrong[0]} "
                f"of size {wrong[0].size}"
            )


@attrs.define(frozen=True, eq=False)
class GradedCharacter(abc.Mapping):
    """Internal degree -> RepSum, every ``S_lam`` sitting in degree |lam|."""

    _components: dict = attrs.field(
        factory=dict,
        converter=_canonical_components,
        validator=_check_grading,
        alias="components",
    )

    def __getitem__(self, degree):
        return self._components[degree]

    def __iter__(self):
        return iter(self._components)

    def __len__(self):
        return len(self._components)

    def __repr__(self):
        return f"GradedCharacter({self._components!r})"

    def __add__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return GradedCharacter(it.chain(self.items(), other.items()))

    def __neg__(self):
        return GradedCharacter((d, -rep) for d, rep in self.items())

    def __sub__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self + (-other)

    def component(self, degree):
        return self._components.get(degree, RepSum())

    def restricted(self, dmin, dmax):
        return GradedCharacter(
            (d, rep) for d, rep in self.items() if dmin <= d <= dmax
        )


def dim_graded(g, d, ctx):
    """Dimension of the degree ``d`` piece of ``g``."""
    return g.component(d).dim(ctx)
