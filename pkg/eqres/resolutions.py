"""Closed-form Tor of elementary modules and their truncations.

Indices are homological: ``Tor_i`` sits in column ``i`` of the Betti table,
never in the negative cohomological degrees of the Koszul complex.

"""

from collections import abc

import attrs

from .eqmod import ModuleKind
from .errors import PreconditionError, ZeroModuleError
from .partitions import as_partition, vertical_strips
from .rep_ring import DimContext, RepSum, as_context, as_repsum


# =============================================================================
# BETTI TABLE
# =============================================================================


def _canonical_entries(value):
    items = value.items() if isinstance(value, abc.Mapping) else value
    entries = {}
    for (i, degree), rep in items:
        key = (int(i), int(degree))
        entries[key] = entries.get(key, RepSum()) + as_repsum(rep)
    return {key: entries[key] for key in sorted(entries) if entries[key]}


def _check_entries(instance, attribute, value):
    for (i, degree), rep in value.items():
        if i < 0:
            raise PreconditionError(f"negative homological index {i}")
        for eta in rep:
            if eta.size != degree:
                raise PreconditionError(
                    f"entry ({i}, {degree}) holds {eta} of size {eta.size}"
                )


@attrs.define(frozen=True, eq=False)
class BettiTable(abc.Mapping):
    """``(i, degree) -> RepSum`` holding only the nonzero entries."""

    _entries: dict = attrs.field(
        converter=_canonical_entries,
        validator=_check_entries,
        alias="entries",
    )
    ctx: DimContext = attrs.field(converter=as_context)

    def __getitem__(self, key):
        return self._entries[tuple(key)]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"BettiTable({self._entries!r}, n={self.ctx.n})"

    def __eq__(self, other):
        if isinstance(other, BettiTable) and other.ctx != self.ctx:
            return False
        return abc.Mapping.__eq__(self, other)

    __hash__ = None

    # API =====================================================================

    @property
    def max_index(self):
        return max((i for i, _ in self._entries), default=None)

    def euler(self, degree):
        """Signed sum of the entries of internal degree ``degree``."""
        return sum(
            ((-1) ** i * rep for (i, d), rep in self.items() if d == degree),
            RepSum(),
        )

    def total_dims(self):
        return {key: rep.dim(self.ctx) for key, rep in self.items()}


# =============================================================================
# TOR
# =============================================================================


def _check_index(i):
    if i < 0:
        raise PreconditionError(f"homological index must be >= 0, got {i}")


def _first_row_fixed(lam, i, ctx):
    return RepSum.of(
        *(eta for eta in vertical_strips(lam, i) if eta[0] == lam[0])
    ).truncated(ctx)


def tor_elementary(lam, i, ctx):
    """``Tor_i(M_lam, k)``: add ``i`` boxes in a vertical strip off row 1.

    The result lives in internal degree ``|lam| + i``.

    """
    lam, ctx = as_partition(lam), as_context(ctx)
    _check_index(i)
    if not ctx.admits(lam):
        return RepSum()
    return _first_row_fixed(lam, i, ctx)


@attrs.define(frozen=True)
class TruncationTor:
    """The two strands of ``Tor_i(M_lam / V^l M_lam, k)``."""

    bottom: RepSum
    top: RepSum
    bottom_degree: int
    top_degree: int

    def entries(self):
        """Internal degree -> representation."""
        found = {}
        for degree, rep in (
            (self.bottom_degree, self.bottom),
            (self.top_degree, self.top),
        ):
            found[degree] = found.get(degree, RepSum()) + rep
        return {d: rep for d, rep in found.items() if rep}


def tor_truncation(lam, l, i, ctx):
    lam, ctx = as_partition(lam), as_context(ctx)
    _check_index(i)
    if l < 1:
        raise PreconditionError(f"l must be >= 1, got {l}")
    bottom_degree = lam.size + i
    if l == 1:
        top_degree = bottom_degree
    else:
        top_degree = lam.size + l + i - 1

    if not ctx.admits(lam):
        return TruncationTor(RepSum(), RepSum(), bottom_degree, top_degree)
    if l == 1:
        bottom = RepSum.of(*vertical_strips(lam, i)).truncated(ctx)
        return TruncationTor(bottom, RepSum(), bottom_degree, top_degree)

    bottom = _first_row_fixed(lam, i, ctx)
    top = (
        _first_row_fixed(lam.extend_first_row(l), i - 1, ctx)
        if i > 0
        else RepSum()
    )
    return TruncationTor(bottom, top, bottom_degree, top_degree)


def top_strand_alternative(lam, l, i, ctx):
    """Top strand read as the strips of ``lam + (l - 1)`` that grow row 1."""
    lam, ctx = as_partition(lam), as_context(ctx)
    _check_index(i)
    if i == 0 or not ctx.admits(lam):
        return RepSum()
    base = lam.extend_first_row(l - 1)
    return RepSum.of(
        *(eta for eta in vertical_strips(base, i) if eta[0] == lam[0] + l)
    ).truncated(ctx)


def betti_table(m):
    """Every nonzero Tor entry of ``m``."""
    ctx = m.ctx
    lam = m.partition
    if m.is_zero:
        return BettiTable({}, ctx)
    if m.kind is ModuleKind.PROJECTIVE:
        return BettiTable({(0, lam.size): RepSum.of(lam)}, ctx)
    if m.kind is ModuleKind.ELEMENTARY:
        return BettiTable(
            [
                ((i, lam.size + i), tor_elementary(lam, i, ctx))
                for i in range(ctx.n + 1)
            ],
            ctx,
        )
    entries = []
    for i in range(ctx.n + 2):
        tor = tor_truncation(lam, m.l, i, ctx)
        entries.append(((i, tor.bottom_degree), tor.bottom))
        entries.append(((i, tor.top_degree), tor.top))
    return BettiTable(entries, ctx)


def projective_dimension(m):
    if m.is_zero:
        raise ZeroModuleError(f"{m.label} is zero for n={m.ctx.n}")
    return betti_table(m).max_index


# =============================================================================
# EXT
# =============================================================================


def ext_simples(lam, eta, i, ctx):
    """``dim Ext^i(S_lam, S_eta)`` between simple equivariant modules."""
    lam, eta, ctx = as_partition(lam), as_partition(eta), as_context(ctx)
    _check_index(i)
    if not (ctx.admits(lam) and ctx.admits(eta)):
        return 0
    return int(eta in vertical_strips(lam, i))


def ext_indices(lam, eta, ctx, imax=None):
    """Indices ``i <= imax`` with a nonzero ``Ext^i``."""
    ctx = as_context(ctx)
    imax = ctx.n if imax is None else imax
    return [i for i in range(imax + 1) if ext_simples(lam, eta, i, ctx)]
