"""Schur modules, Pieri inclusions and labeled-diagram embeddings.

``S_lam`` is realized as the image of the exterior powers of its columns in
the symmetric powers of its rows: a column is expanded over all orderings
with their signs and the entries are multiplied along the rows.

"""

import enum
import functools
import itertools as it
import math

import attrs
from sympy import QQ

from ..errors import InvalidDiagramError, OracleError, PreconditionError
from ..partitions import (
    Partition,
    as_partition,
    conjugate,
    horizontal_strips,
    vertical_strips,
)
from ..rep_ring import DimContext, as_context
from ..reports import CheckReport
from .linmap import LinMap
from .maps import shuffle_terms, sort_sign, sym_product
from .spaces import (
    DEFAULT_BASIS_CAP,
    Factor,
    TensorSpace,
    Tableau,
    exterior_columns,
    symmetric_rows,
)


#: Schur modules and Pieri inclusions kept alive between calls.
CACHE_SIZE = 256


# =============================================================================
# ROWS AND COLUMNS
# =============================================================================


def _rows_of_columns(columns, height):
    """Expand wedged columns and multiply along the rows.

    Yields ``(sign, rows)`` with one sorted monomial per row.

    """
    for orders in it.product(*(it.permutations(col) for col in columns)):
        sign = math.prod(sort_sign(order) for order in orders)
        rows = tuple(
            tuple(sorted(order[r] for order in orders if len(order) > r))
            for r in range(height)
        )
        yield sign, rows


def _columns_of_rows(rows, lam):
    """Expand every row monomial over its orderings and wedge the columns.

    Repeated orderings of a monomial are all kept, which makes the map
    equivariant. Yields ``(sign, columns)`` with sorted columns.

    """
    heights = conjugate(lam)
    for orders in it.product(*(it.permutations(row) for row in rows)):
        sign, columns = 1, []
        for c, height in enumerate(heights):
            column = tuple(orders[r][c] for r in range(height))
            s = sort_sign(column)
            if not s:
                break
            sign *= s
            columns.append(tuple(sorted(column)))
        else:
            yield sign, tuple(columns)


def _accumulate(pairs):
    found = {}
    for key, value in pairs:
        found[key] = found.get(key, 0) + value
    return found


def columns_to_rows(lam, ctx, cap=DEFAULT_BASIS_CAP):
    """``Ext^(lam~) -> Sym_lam`` (columns wedged, rows multiplied)."""
    lam, ctx = as_partition(lam), as_context(ctx)
    source = TensorSpace(exterior_columns(lam), ctx, cap=cap)
    target = TensorSpace(symmetric_rows(lam), ctx, cap=cap)
    return LinMap.from_images(
        source,
        target,
        lambda key: _accumulate(
            (rows, sign) for sign, rows in _rows_of_columns(key, len(lam))
        ),
    )


# =============================================================================
# SCHUR MODULES
# =============================================================================


@attrs.define(frozen=True)
class SchurModule:
    """``S_lam(V)`` with its tableau basis.

    ``embed_ext`` sends a tableau to the wedge of its columns,
    ``image_sym`` to its image in the row symmetric powers and
    ``coordinates`` is a left inverse of ``image_sym``.

    """

    shape: Partition
    ctx: DimContext
    space: TensorSpace
    embed_ext: LinMap
    image_sym: LinMap
    coordinates: LinMap

    @property
    def basis(self):
        return tuple(key[0] for key in self.space.basis)

    @property
    def dim(self):
        return self.space.dim


@functools.lru_cache(maxsize=CACHE_SIZE)
def _schur_module(lam, ctx, cap):
    if not ctx.admits(lam):
        raise PreconditionError(f"S_{lam} vanishes for n={ctx.n}")
    space = TensorSpace([Factor.schur(lam)], ctx, cap=cap)
    columns = TensorSpace(exterior_columns(lam), ctx, cap=cap)
    embed_ext = LinMap.from_images(
        space, columns, lambda key: {key[0].columns: 1}
    )
    image_sym = columns_to_rows(lam, ctx, cap) @ embed_ext
    return SchurModule(
        shape=lam,
        ctx=ctx,
        space=space,
        embed_ext=embed_ext,
        image_sym=image_sym,
        coordinates=image_sym.left_inverse(),
    )


def schur_module(lam, ctx, cap=DEFAULT_BASIS_CAP):
    return _schur_module(as_partition(lam), as_context(ctx), cap)


def _wedged_columns(module, key):
    """Image of a tableau under ``S_lam -> Sym_lam -> Ext^(lam~)``."""
    found = {}
    for rows, coeff in module.image_sym.image(key).items():
        for sign, columns in _columns_of_rows(rows, module.shape):
            found[columns] = found.get(columns, 0) + coeff * sign
    return found


def highest_tableau(lam):
    """Row ``i`` filled with ``i``."""
    lam = as_partition(lam)
    return Tableau(
        (i,) * part for i, part in enumerate(lam.parts, start=1)
    )


# =============================================================================
# PIERI INCLUSIONS
# =============================================================================


class PieriMode(enum.Enum):
    SYM = "sym"
    EXT = "ext"


def _tail_factor(mode, k):
    return Factor.sym(k) if mode is PieriMode.SYM else Factor.ext(k)


def _leading_key(lam, eta, mode):
    rows = tuple((i,) * part for i, part in enumerate(lam.parts, start=1))
    extra = tuple(
        i
        for i in range(1, len(eta) + 1)
        for _ in range(eta[i - 1] - lam[i - 1])
    )
    return rows + (extra,)


@functools.lru_cache(maxsize=CACHE_SIZE)
def _pieri_inclusion(lam, eta, mode, ctx, coordinates, cap):
    k = eta.size - lam.size
    strips = horizontal_strips if mode is PieriMode.SYM else vertical_strips
    if k < 0 or eta not in strips(lam, k):
        raise PreconditionError(
            f"{eta} / {lam} is not a {mode.value} strip"
        )

    source = schur_module(eta, ctx, cap)
    tail = _tail_factor(mode, k)
    target = TensorSpace(symmetric_rows(lam) + (tail,), ctx, cap=cap)

    eta_heights = conjugate(eta).parts
    lam_heights = [conjugate(lam)[j] for j in range(len(eta_heights))]
    split = [h - g for h, g in zip(eta_heights, lam_heights)]
    koszul = (-1) ** sum(
        split[i] * lam_heights[j]
        for i, j in it.combinations(range(len(split)), 2)
    )

    @functools.cache
    def _through(columns):
        found = {}
        for terms in it.product(
            *(shuffle_terms(col, a) for col, a in zip(columns, split))
        ):
            sign = koszul * math.prod(s for s, _, _ in terms)
            backs = tuple(x for _, _, back in terms for x in back)
            if mode is PieriMode.EXT:
                sign *= sort_sign(backs)
                if not sign:
                    continue
            fronts = tuple(front for _, front, _ in terms)
            tail_key = tuple(sorted(backs))
            for s, rows in _rows_of_columns(fronts, len(lam)):
                key = rows + (tail_key,)
                found[key] = found.get(key, 0) + sign * s
        return found

    def image(key):
        found = {}
        for columns, coeff in _wedged_columns(source, key).items():
            for target_key, value in _through(columns).items():
                found[target_key] = found.get(target_key, 0) + coeff * value
        return found

    raw = LinMap.from_images(source.space, target, image)
    leading = raw.image((highest_tableau(eta),)).get(
        _leading_key(lam, eta, mode), 0
    )
    if not leading:
        raise OracleError(
            f"inclusion of {eta} into {lam} (x) {tail} lost its top vector"
        )
    inclusion = raw.scaled(QQ.one / leading)
    if not coordinates:
        return inclusion
    lam_module = schur_module(lam, ctx, cap)
    tail_identity = LinMap.identity(TensorSpace([tail], ctx, cap=cap))
    return lam_module.coordinates.tensor(tail_identity) @ inclusion


def pieri_inclusion(
    lam, eta, mode, ctx, coordinates=False, cap=DEFAULT_BASIS_CAP
):
    """The equivariant inclusion ``S_eta -> S_lam (x) Sym^k`` (or ``Ext^k``).

    The target is ``Sym(lam_1) (x) ... (x) Sym(lam_m) (x) X`` where ``X``
    is ``Sym(k)`` or ``Ext(k)``; with ``coordinates=True`` the row factors
    are replaced by the tableau basis of ``S_lam``. The map sends the
    highest tableau of ``eta`` to a vector whose coefficient on
    ``x_1^lam_1 (x) ... (x) x^(eta - lam)`` is one.

    Parameters
    ----------
    lam, eta : Partition
        ``eta / lam`` must be a horizontal strip in ``Sym`` mode and a
        vertical strip in ``Ext`` mode.
    mode : PieriMode or str
    ctx : DimContext or int
    coordinates : bool
    cap : int
        Largest basis allowed in any intermediate space.

    """
    return _pieri_inclusion(
        as_partition(lam),
        as_partition(eta),
        PieriMode(mode),
        as_context(ctx),
        bool(coordinates),
        cap,
    )


def verify_sam(nu, mu, eta, ctx, cap=DEFAULT_BASIS_CAP):
    """Check that ``S_eta -> R (x) S_mu -> R (x) S_nu`` does not vanish.

    ``S_mu`` must sit in ``R (x) S_nu`` and ``S_eta`` in the matching
    degrees of both ``R (x) S_mu`` and ``R (x) S_nu``.

    """
    nu, mu, eta = as_partition(nu), as_partition(mu), as_partition(eta)
    ctx = as_context(ctx)
    m, d = mu.size - nu.size, eta.size - mu.size
    if m < 0 or mu not in horizontal_strips(nu, m):
        raise PreconditionError(f"{mu} does not occur in R (x) S_{nu}")
    if d < 0 or eta not in horizontal_strips(mu, d):
        raise PreconditionError(f"{eta} does not occur in R (x) S_{mu}")
    if eta not in horizontal_strips(nu, m + d):
        raise PreconditionError(f"{eta} does not occur in R (x) S_{nu}")
    if not ctx.admits(eta):
        raise PreconditionError(f"S_{eta} vanishes for n={ctx.n}")

    def _identity(factors):
        return LinMap.identity(TensorSpace(factors, ctx, cap=cap))

    into_mu = pieri_inclusion(mu, eta, PieriMode.SYM, ctx, True, cap)
    into_nu = pieri_inclusion(nu, mu, PieriMode.SYM, ctx, cap=cap)
    composite = into_nu.tensor(_identity([Factor.sym(d)])) @ into_mu
    multiply = _identity(symmetric_rows(nu)).tensor(
        sym_product(m, d, ctx, cap)
    )
    rank = (multiply @ composite).rank
    return CheckReport(
        check="sam",
        passed=rank > 0,
        instance={"nu": nu, "mu": mu, "eta": eta, "n": ctx.n},
        detail=f"rank {rank}",
    )


# =============================================================================
# LABELED DIAGRAMS
# =============================================================================


class Bracketing(enum.Enum):
    OUTSIDE = "outside"
    INSIDE = "inside"


def _split_column(column, wedges, vbox, bracketing):
    """Split a column into ``(sign, front, back, v)`` by comultiplication.

    ``OUTSIDE`` splits the V box off first and the wedges from what is
    left, ``INSIDE`` the other way round.

    """
    if not vbox:
        for sign, front, back in shuffle_terms(column, wedges):
            yield sign, front, back, ()
    elif bracketing is Bracketing.OUTSIDE:
        for s1, rest, v in shuffle_terms(column, 1):
            for s2, front, back in shuffle_terms(rest, wedges):
                yield s1 * s2, front, back, v
    else:
        for s1, rest, back in shuffle_terms(column, wedges):
            for s2, front, v in shuffle_terms(rest, 1):
                yield s1 * s2, front, back, v


def labeled_embedding(diagram, bracketing, ctx, cap=DEFAULT_BASIS_CAP):
    """``S_shape -> V (x) Sym_base (x) Ext^k`` defined by a labeled diagram.

    ``S_shape`` goes into the wedge of its columns. Every column then gives
    up its V box and its wedge boxes by comultiplication; ``OUTSIDE`` reads
    ``V (x) (S_base (x) Ext^k)`` and separates the V box first, ``INSIDE``
    reads ``(V (x) S_base) (x) Ext^k`` and separates the wedges first. The
    wedge pieces are multiplied into ``Ext^k`` and what is left is projected
    onto the rows of the base. Factor permutations only contribute a global
    sign, which is dropped.

    """
    bracketing, ctx = Bracketing(bracketing), as_context(ctx)
    if bracketing is Bracketing.OUTSIDE and not diagram.is_v_outside():
        raise InvalidDiagramError("the wedge boxes do not form a diagram")
    if bracketing is Bracketing.INSIDE and not diagram.is_v_inside():
        raise InvalidDiagramError("the V box does not extend the base")

    lam, eta = diagram.base, diagram.shape
    source = schur_module(eta, ctx, cap)
    target = TensorSpace(
        (Factor.ext(1),) + symmetric_rows(lam) + (Factor.ext(diagram.k),),
        ctx,
        cap=cap,
    )
    wedge_counts = [0] * eta[0]
    for _, column in diagram.wedges:
        wedge_counts[column - 1] += 1
    v_column = diagram.vbox[1] - 1

    @functools.cache
    def _separated(columns):
        found = {}
        for terms in it.product(
            *(
                _split_column(col, a, j == v_column, bracketing)
                for j, (col, a) in enumerate(zip(columns, wedge_counts))
            )
        ):
            backs = tuple(x for _, _, back, _ in terms for x in back)
            sign = math.prod(s for s, _, _, _ in terms) * sort_sign(backs)
            if not sign:
                continue
            (v,) = [part for *_, part in terms if part]
            fronts = tuple(front for _, front, _, _ in terms)
            for s, rows in _rows_of_columns(fronts, len(lam)):
                key = (v,) + rows + (tuple(sorted(backs)),)
                found[key] = found.get(key, 0) + sign * s
        return found

    def image(key):
        found = {}
        for columns, coeff in _wedged_columns(source, key).items():
            for target_key, value in _separated(columns).items():
                found[target_key] = found.get(target_key, 0) + coeff * value
        return found

    embedding = LinMap.from_images(source.space, target, image)
    if embedding.is_zero:
        raise OracleError(f"the embedding of {diagram.shape} vanished")
    return embedding
