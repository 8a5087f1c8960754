"""Independent checks of the closed-form Tor.

Two routes: Euler characteristics of ``M (x)_R K`` computed in the
representation ring, and brute-force homology of the explicit complex over
QQ at desk scale.

"""

import itertools as it
import logging

import attrs

from .eqmod import ModuleKind, ModuleModel
from .errors import (
    GuardrailError,
    OracleError,
    PreconditionError,
    ZeroModuleError,
)
from .partitions import Partition, partitions_of, underline
from .rep_ring import DimContext, RepSum, pieri_ext
from .reports import CheckReport
from .resolutions import betti_table
from .tensor_lab import (
    DEFAULT_BASIS_CAP,
    PieriMode,
    kostka,
    pieri_inclusion,
    rank_of_vectors,
    schur_module,
)

logger = logging.getLogger(__name__)


# =============================================================================
# DEFAULTS
# =============================================================================

MAX_N = 3

MAX_SIZE = 4


# =============================================================================
# EULER CHARACTERISTICS
# =============================================================================


@attrs.define(frozen=True)
class ComplexSlice:
    """Internal degree ``degree`` of ``M (x)_R K``, term by term."""

    degree: int
    terms: dict = attrs.field(
        converter=lambda terms: {i: rep for i, rep in terms.items() if rep}
    )

    def euler(self):
        return sum(
            ((-1) ** i * rep for i, rep in self.terms.items()), RepSum()
        )


def complex_characters(m, degree):
    ctx = m.ctx
    return ComplexSlice(
        degree,
        {
            i: pieri_ext(m.component(degree - i), i, ctx)
            for i in range(ctx.n + 1)
        },
    )


def euler_check(m, degree):
    """Compare the Euler characteristic of the complex with the Tor."""
    from_complex = complex_characters(m, degree).euler()
    from_tor = betti_table(m).euler(degree)
    passed = from_complex == from_tor
    return CheckReport(
        check="euler",
        passed=passed,
        instance={"module": m.label, "n": m.ctx.n, "degree": degree},
        detail="" if passed else f"{from_complex!r} != {from_tor!r}",
    )


# =============================================================================
# EXPLICIT REALIZATION
# =============================================================================


@attrs.define(frozen=True)
class Realization:
    """Generators of ``m`` inside ``Sym_base (x) R``.

    Every generator is a sparse vector keyed by ``(rows, tail)``: one
    monomial per row of ``base`` and the monomial carrying the R-action.

    """

    module: ModuleModel
    base: Partition
    generators: tuple

    @property
    def ctx(self):
        return self.module.ctx

    def piece_is_zero(self, e):
        m = self.module
        return e < 0 or (m.kind is ModuleKind.TRUNCATION and e >= m.l)


def realize(m, cap=DEFAULT_BASIS_CAP):
    """Explicit generators of ``m``.

    ``P_lam`` is ``R (x) S_lam`` itself; ``M_lam`` and its truncations are
    generated by the image of ``S_lam`` in ``R (x) S_lam_underline``.

    """
    if m.is_zero:
        raise ZeroModuleError(f"{m.label} is zero for n={m.ctx.n}")
    lam, ctx = m.partition, m.ctx
    module = schur_module(lam, ctx, cap)
    if m.kind is ModuleKind.PROJECTIVE:
        base = lam
        images = [
            {
                (rows, ()): c
                for rows, c in module.image_sym.image(key).items()
            }
            for key in module.space.basis
        ]
    else:
        base = underline(lam)
        generator = pieri_inclusion(base, lam, PieriMode.SYM, ctx, cap=cap)
        images = [
            {
                (target[:-1], target[-1]): c
                for target, c in generator.image(key).items()
            }
            for key in module.space.basis
        ]
    generators = tuple(
        (key[0].content(ctx.n), image)
        for key, image in zip(module.space.basis, images)
    )
    return Realization(module=m, base=base, generators=generators)


def _times(vector, monomial):
    return {
        (rows, tuple(sorted(tail + monomial))): c
        for (rows, tail), c in vector.items()
    }


def _piece_vectors(real, e, weight):
    """Spanning vectors of the weight ``weight`` space of ``M_e``."""
    if real.piece_is_zero(e):
        return []
    vectors = []
    for content, vector in real.generators:
        alpha = [w - c for w, c in zip(weight, content)]
        if min(alpha) < 0 or sum(alpha) != e:
            continue
        monomial = tuple(
            j for j, power in enumerate(alpha, start=1) for _ in range(power)
        )
        vectors.append(_times(vector, monomial))
    return vectors


def _dominant_weights(size, n):
    return [
        tuple(mu[r] for r in range(n)) for mu in partitions_of(size, n)
    ]


def _peel(multiplicities, size, n):
    """Recover a RepSum from its dominant weight multiplicities."""
    found = {}
    for weight in _dominant_weights(size, n):
        count = multiplicities.get(weight, 0) - sum(
            c * kostka(mu, weight) for mu, c in found.items()
        )
        if count < 0:
            raise OracleError(
                f"negative multiplicity {count} for weight {weight}"
            )
        if count:
            found[Partition(weight)] = count
    return RepSum(found)


def _check_piece(real, e):
    m, n = real.module, real.ctx.n
    size = m.generator_degree + e
    multiplicities = {
        weight: rank_of_vectors(_piece_vectors(real, e, weight))
        for weight in _dominant_weights(size, n)
    }
    found = _peel(multiplicities, size, n)
    expected = m.component(size)
    if found != expected:
        raise OracleError(
            f"{m.label} in degree {size}: realized {found!r}, "
            f"expected {expected!r}"
        )


# =============================================================================
# BRUTE-FORCE HOMOLOGY
# =============================================================================


@attrs.define(frozen=True)
class HomologyResult:
    """``H_i(M (x)_R K)`` split by internal degree."""

    index: int
    by_degree: dict
    ctx: DimContext

    @property
    def rep(self):
        return sum(self.by_degree.values(), RepSum())

    @property
    def dim(self):
        return self.rep.dim(self.ctx)


def _koszul_vectors(real, e, i, weight):
    """Spanning vectors of the weight space of ``M_e (x) Ext^i``."""
    n = real.ctx.n
    vectors = []
    for subset in it.combinations(range(1, n + 1), i):
        rest = list(weight)
        for j in subset:
            rest[j - 1] -= 1
        if min(rest, default=0) < 0:
            continue
        vectors.extend(
            {key + (subset,): c for key, c in vector.items()}
            for vector in _piece_vectors(real, e, rest)
        )
    return vectors


def _differential(real, e, vector):
    """``x (x) e_J -> sum_r (-1)^r x_(j_r) x (x) e_(J - j_r)``."""
    if real.piece_is_zero(e + 1):
        return {}
    found = {}
    for (rows, tail, subset), c in vector.items():
        for r, j in enumerate(subset):
            key = (
                rows,
                tuple(sorted(tail + (j,))),
                subset[:r] + subset[r + 1 :],
            )
            found[key] = found.get(key, 0) + (-1) ** r * c
    return found


def _weight_homology(real, degree, i, weight):
    start = real.module.generator_degree
    e = degree - i - start
    here = _koszul_vectors(real, e, i, weight)
    if not here:
        return 0
    above = (
        _koszul_vectors(real, e - 1, i + 1, weight)
        if i < real.ctx.n
        else []
    )
    rank_here = rank_of_vectors(here)
    rank_out = rank_of_vectors(_differential(real, e, v) for v in here)
    rank_in = rank_of_vectors(_differential(real, e - 1, v) for v in above)
    logger.debug(
        "weight %s degree %s: rank %s, out %s, in %s",
        weight,
        degree,
        rank_here,
        rank_out,
        rank_in,
    )
    return rank_here - rank_out - rank_in


def degree_window(m, i, extra=None):
    """Internal degrees inspected for ``H_i``.

    Outside ``[|lam| + i, top + i]`` the chain group of a truncation is
    zero, so that range is complete. Unbounded modules are inspected
    ``extra`` degrees past their strand, ``n + 1`` by default.

    """
    low = m.generator_degree + i
    if m.top_degree is not None:
        return range(low, m.top_degree + i + 1)
    extra = m.ctx.n + 1 if extra is None else extra
    if extra < 0:
        raise PreconditionError(f"extra must be >= 0, got {extra}")
    return range(low, low + extra + 1)


def brute_homology(m, i, cap=DEFAULT_BASIS_CAP, extra=None):
    """``H_i(M (x)_R K)`` computed from explicit matrices over QQ.

    Degrees follow :func:`degree_window`. Raises :class:`GuardrailError`
    beyond ``n <= 3``, ``|lam| <= 4``.

    """
    ctx, lam = m.ctx, m.partition
    if i < 0:
        raise PreconditionError(f"homological index must be >= 0, got {i}")
    if ctx.n > MAX_N or lam.size > MAX_SIZE or i > ctx.n:
        raise GuardrailError(
            f"brute force is limited to n <= {MAX_N}, |lambda| <= "
            f"{MAX_SIZE}, i <= n; got n={ctx.n}, lambda={lam}, i={i}"
        )
    if m.is_zero:
        return HomologyResult(index=i, by_degree={}, ctx=ctx)

    logger.debug("brute homology of %s, i=%s, n=%s", m.label, i, ctx.n)
    real = realize(m, cap)
    window = degree_window(m, i, extra)
    for e in {d - i - m.generator_degree for d in window} | {
        d - i - 1 - m.generator_degree for d in window
    }:
        if e >= 0 and not real.piece_is_zero(e):
            _check_piece(real, e)

    by_degree = {}
    for degree in window:
        multiplicities = {
            weight: _weight_homology(real, degree, i, weight)
            for weight in _dominant_weights(degree, ctx.n)
        }
        rep = _peel(multiplicities, degree, ctx.n)
        if rep:
            by_degree[degree] = rep
    return HomologyResult(index=i, by_degree=by_degree, ctx=ctx)


def predicted_homology(m, i):
    """The Tor strands of ``m`` in homological index ``i``."""
    return {
        degree: rep
        for (index, degree), rep in betti_table(m).items()
        if index == i
    }


def brute_check(m, i, cap=DEFAULT_BASIS_CAP, extra=None):
    found = brute_homology(m, i, cap, extra).by_degree
    expected = predicted_homology(m, i)
    passed = found == expected
    return CheckReport(
        check="brute",
        passed=passed,
        instance={"module": m.label, "n": m.ctx.n, "i": i},
        detail="" if passed else f"{found!r} != {expected!r}",
    )
