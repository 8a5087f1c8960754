"""Comultiplication, multiplication and factor permutations.

Sign conventions:

- a shuffle ``e_I -> e_front (x) e_back`` carries the sign of the
  permutation that sorts ``front + back``;
- moving exterior factors of degrees ``p`` and ``q`` past each other costs
  ``(-1) ** (p * q)``.

"""

import itertools as it
import math

from sympy.combinatorics import Permutation

from ..errors import PreconditionError
from ..rep_ring import as_context
from ..reports import CheckReport
from .linmap import LinMap
from .spaces import DEFAULT_BASIS_CAP, Factor, TensorSpace


# =============================================================================
# SIGNS
# =============================================================================


def sort_sign(seq):
    """Sign of the permutation sorting ``seq``; 0 on a repeated entry."""
    seq = tuple(seq)
    if len(set(seq)) < len(seq):
        return 0
    if len(seq) < 2:
        return 1
    ranks = sorted(range(len(seq)), key=seq.__getitem__)
    return Permutation(ranks).signature()


def shuffle_terms(indices, a):
    """``(sign, front, back)`` for every way of splitting off ``a`` indices."""
    indices = tuple(indices)
    for positions in it.combinations(range(len(indices)), a):
        back = tuple(indices[p] for p in positions)
        front = tuple(x for p, x in enumerate(indices) if p not in positions)
        yield sort_sign(front + back), front, back


def _as_counts(value):
    return (value,) if isinstance(value, int) else tuple(value)


# =============================================================================
# COMULTIPLICATION
# =============================================================================


def comult_ext(l, a, ctx, cap=DEFAULT_BASIS_CAP):
    """``Ext^l -> Ext^(l-a) (x) Ext^a``, factorwise.

    With several factors every front stays in place and the backs are
    collected, in order, to the right of all fronts.

    """
    l, a, ctx = _as_counts(l), _as_counts(a), as_context(ctx)
    if len(l) != len(a):
        raise PreconditionError(f"{l} and {a} have different lengths")
    if any(not 0 <= ai <= li for li, ai in zip(l, a)):
        raise PreconditionError(f"need 0 <= a <= l, got l={l}, a={a}")

    fronts = [li - ai for li, ai in zip(l, a)]
    source = TensorSpace([Factor.ext(li) for li in l], ctx, cap=cap)
    target = TensorSpace(
        [Factor.ext(p) for p in fronts] + [Factor.ext(q) for q in a],
        ctx,
        cap=cap,
    )
    koszul = (-1) ** sum(
        a[i] * fronts[j] for i, j in it.combinations(range(len(l)), 2)
    )

    def image(key):
        found = {}
        for terms in it.product(
            *(shuffle_terms(idx, ai) for idx, ai in zip(key, a))
        ):
            sign = koszul * math.prod(s for s, _, _ in terms)
            target_key = tuple(f for _, f, _ in terms) + tuple(
                b for _, _, b in terms
            )
            found[target_key] = found.get(target_key, 0) + sign
        return found

    return LinMap.from_images(source, target, image)


# =============================================================================
# PERMUTATIONS AND PRODUCTS
# =============================================================================


def permute_factors(space, perm):
    """Reorder factors: position ``j`` of the target is factor ``perm[j]``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(space.factors))):
        raise PreconditionError(
            f"{perm} is not a permutation of {len(space.factors)} factors"
        )
    factors = space.factors
    sign = 1
    for j, k in it.combinations(range(len(perm)), 2):
        first, second = factors[perm[j]], factors[perm[k]]
        if perm[j] > perm[k] and first.is_odd and second.is_odd:
            sign = -sign
    target = TensorSpace(
        [factors[p] for p in perm], space.ctx, cap=space.cap
    )
    return LinMap.from_images(
        space, target, lambda key: {tuple(key[p] for p in perm): sign}
    )


def wedge_product(p, q, ctx, cap=DEFAULT_BASIS_CAP):
    """``Ext^p (x) Ext^q -> Ext^(p+q)``."""
    ctx = as_context(ctx)
    source = TensorSpace([Factor.ext(p), Factor.ext(q)], ctx, cap=cap)
    target = TensorSpace([Factor.ext(p + q)], ctx, cap=cap)

    def image(key):
        joined = key[0] + key[1]
        sign = sort_sign(joined)
        return {(tuple(sorted(joined)),): sign} if sign else {}

    return LinMap.from_images(source, target, image)


def sym_product(p, q, ctx, cap=DEFAULT_BASIS_CAP):
    """``Sym^p (x) Sym^q -> Sym^(p+q)``."""
    ctx = as_context(ctx)
    source = TensorSpace([Factor.sym(p), Factor.sym(q)], ctx, cap=cap)
    target = TensorSpace([Factor.sym(p + q)], ctx, cap=cap)
    return LinMap.from_images(
        source, target, lambda key: {(tuple(sorted(key[0] + key[1])),): 1}
    )


# =============================================================================
# COASSOCIATIVITY
# =============================================================================


def coassociativity_paths(l, a, b, ctx, cap=DEFAULT_BASIS_CAP):
    """Both ways around the square splitting ``a`` and ``b`` off ``Ext^l``.

    Returns ``(splitting b first, splitting a first then swapping)``, both
    landing in ``Ext^(l-a-b) (x) Ext^a (x) Ext^b``.

    """
    if min(a, b) < 0 or a + b > l:
        raise PreconditionError(f"need a, b >= 0 and a + b <= l={l}")
    ctx = as_context(ctx)

    def _identity(p):
        return LinMap.identity(TensorSpace([Factor.ext(p)], ctx, cap=cap))

    b_first = comult_ext(l - b, a, ctx, cap).tensor(_identity(b)) @ (
        comult_ext(l, b, ctx, cap)
    )
    a_first = comult_ext(l - a, b, ctx, cap).tensor(_identity(a)) @ (
        comult_ext(l, a, ctx, cap)
    )
    swap = permute_factors(a_first.target, (0, 2, 1))
    return b_first, swap @ a_first


def verify_coassociativity(l, a, b, ctx, cap=DEFAULT_BASIS_CAP):
    ctx = as_context(ctx)
    b_first, a_first = coassociativity_paths(l, a, b, ctx, cap)
    return CheckReport(
        check="coass",
        passed=b_first == a_first,
        instance={"l": l, "a": a, "b": b, "n": ctx.n},
    )
