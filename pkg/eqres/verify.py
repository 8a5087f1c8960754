"""Property grids behind ``eqres verify``.

Every suite expands to a list of independent instances, each a module-level
function plus keyword arguments so it can cross a process boundary. Results
come back in grid order whatever the number of workers.

"""

import itertools as it
import logging
from concurrent.futures import ProcessPoolExecutor

from .eqmod import ModuleModel, verify_filtration
from .errors import EqresError, GuardrailError, PreconditionError
from .koszul_oracle import brute_check, euler_check
from .partitions import (
    horizontal_strips,
    partitions_up_to,
    sort_partitions,
    vertical_strips,
)
from .rep_ring import DimContext, dim_schur
from .reports import CheckReport, VerificationReport
from .tensor_lab import (
    DEFAULT_BASIS_CAP,
    PieriMode,
    pieri_inclusion,
    verify_coassociativity,
    verify_sam,
)
from .utils import rtc

logger = logging.getLogger(__name__)


# =============================================================================
# DEFAULTS
# =============================================================================

SUITE_MAX_SIZE = {
    "filtration": 6,
    "euler": 5,
    "brute": 4,
    "pieri": 4,
    "coass": 4,
    "sam": 3,
}

SUITE_MAX_L = {"euler": 3, "brute": 2}

SUITES = tuple(SUITE_MAX_SIZE)

_CAPPED = frozenset({"brute", "pieri", "coass", "sam"})


# =============================================================================
# INSTANCE CHECKS
# =============================================================================


def filtration_instance(lam, n, dmax):
    return verify_filtration(lam, DimContext(n), dmax)


def euler_instance(m, degree):
    return euler_check(m, degree)


def brute_instance(m, i, cap=DEFAULT_BASIS_CAP):
    return brute_check(m, i, cap)


def pieri_instance(lam, eta, mode, n, cap=DEFAULT_BASIS_CAP):
    """The Pieri inclusion is injective."""
    ctx = DimContext(n)
    rank = pieri_inclusion(lam, eta, mode, ctx, cap=cap).rank
    expected = dim_schur(eta, ctx)
    return CheckReport(
        check="pieri",
        passed=rank == expected,
        instance={"lambda": lam, "eta": eta, "mode": mode, "n": n},
        detail=f"rank {rank} of {expected}",
    )


def coass_instance(l, a, b, n, cap=DEFAULT_BASIS_CAP):
    return verify_coassociativity(l, a, b, DimContext(n), cap)


def sam_instance(nu, mu, eta, n, cap=DEFAULT_BASIS_CAP):
    return verify_sam(nu, mu, eta, DimContext(n), cap)


# =============================================================================
# GRIDS
# =============================================================================


def _modules(lam, n, max_l):
    ctx = DimContext(n)
    yield ModuleModel.elementary(lam, ctx)
    for l in range(1, max_l + 1):
        yield ModuleModel.truncation(lam, l, ctx)


def _grid_filtration(max_size, ns, max_l, extra):
    for lam, n in it.product(partitions_up_to(max_size), ns):
        yield filtration_instance, {
            "lam": lam,
            "n": n,
            "dmax": lam.size + extra,
        }


def _grid_euler(max_size, ns, max_l, extra):
    for lam, n in it.product(partitions_up_to(max_size), ns):
        for m in _modules(lam, n, max_l):
            for degree in range(lam.size, lam.size + extra + 1):
                yield euler_instance, {"m": m, "degree": degree}


def _grid_brute(max_size, ns, max_l, extra):
    for lam, n in it.product(partitions_up_to(max_size), ns):
        if len(lam) > n:
            continue
        for m in _modules(lam, n, max_l):
            for i in range(n + 1):
                yield brute_instance, {"m": m, "i": i}


def _grid_pieri(max_size, ns, max_l, extra):
    for lam, n in it.product(partitions_up_to(max_size), ns):
        for mode, strips in (
            (PieriMode.SYM, horizontal_strips),
            (PieriMode.EXT, vertical_strips),
        ):
            for k in range(max_size - lam.size + 1):
                for eta in sort_partitions(strips(lam, k)):
                    if len(eta) <= n:
                        yield pieri_instance, {
                            "lam": lam,
                            "eta": eta,
                            "mode": mode,
                            "n": n,
                        }


def _grid_coass(max_size, ns, max_l, extra):
    for l, n in it.product(range(max_size + 1), ns):
        for a, b in it.product(range(l + 1), repeat=2):
            if a + b <= l:
                yield coass_instance, {"l": l, "a": a, "b": b, "n": n}


def _grid_sam(max_size, ns, max_l, extra):
    for nu, n in it.product(partitions_up_to(max_size), ns):
        for mu in partitions_up_to(max_size):
            m = mu.size - nu.size
            if m < 0 or mu not in horizontal_strips(nu, m):
                continue
            for eta in partitions_up_to(max_size):
                d = eta.size - mu.size
                if (
                    d >= 0
                    and len(eta) <= n
                    and eta in horizontal_strips(mu, d)
                    and eta in horizontal_strips(nu, m + d)
                ):
                    yield sam_instance, {
                        "nu": nu,
                        "mu": mu,
                        "eta": eta,
                        "n": n,
                    }


_GRIDS = {
    "filtration": _grid_filtration,
    "euler": _grid_euler,
    "brute": _grid_brute,
    "pieri": _grid_pieri,
    "coass": _grid_coass,
    "sam": _grid_sam,
}


@rtc.precondition_call
def suite_instances(
    suite: str,
    max_n: rtc.Positive | list[rtc.Positive],
    max_size: rtc.NonNegative | None = None,
    max_l: rtc.NonNegative | None = None,
    extra: rtc.NonNegative = 8,
    cap: rtc.Positive = DEFAULT_BASIS_CAP,
):
    """Expand ``suite`` into ``(function, kwargs)`` pairs, in grid order.

    ``max_n`` is either the largest dimension (every ``n`` from 1 up) or an
    explicit list of dimensions.

    """
    if suite not in _GRIDS:
        raise PreconditionError(
            f"unknown suite {suite!r}, choose from {', '.join(SUITES)}"
        )
    ns = range(1, max_n + 1) if isinstance(max_n, int) else tuple(max_n)
    max_size = SUITE_MAX_SIZE[suite] if max_size is None else max_size
    max_l = SUITE_MAX_L.get(suite, 0) if max_l is None else max_l
    instances = _GRIDS[suite](max_size, ns, max_l, extra)
    if suite in _CAPPED:
        return [
            (function, {**kwargs, "cap": cap})
            for function, kwargs in instances
        ]
    return list(instances)


# =============================================================================
# DRIVER
# =============================================================================


def run_instance(suite, function, kwargs):
    """Run one instance; library errors become failed reports."""
    try:
        return function(**kwargs)
    except GuardrailError:
        raise
    except EqresError as err:
        instance = {k: v for k, v in kwargs.items() if k != "cap"}
        logger.debug("%s failed on %s: %s", suite, instance, err)
        return CheckReport(
            check=suite,
            passed=False,
            instance=instance,
            detail=f"{type(err).__name__}: {err}",
        )


def run_suite(
    suite,
    max_n,
    max_size=None,
    max_l=None,
    extra=8,
    workers=1,
    cap=DEFAULT_BASIS_CAP,
    on_result=None,
):
    """Run every instance of ``suite`` and collect the reports.

    ``on_result`` is called once per finished instance, in grid order.

    """
    instances = suite_instances(
        suite,
        max_n,
        max_size=max_size,
        max_l=max_l,
        extra=extra,
        cap=cap,
    )
    logger.info(
        "%s: %d instances, %d workers", suite, len(instances), workers
    )
    reports = []
    if workers <= 1:
        for function, kwargs in instances:
            reports.append(run_instance(suite, function, kwargs))
            if on_result:
                on_result(reports[-1])
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(run_instance, suite, function, kwargs)
                for function, kwargs in instances
            ]
            for future in futures:
                reports.append(future.result())
                if on_result:
                    on_result(reports[-1])
    report = VerificationReport(suite=suite, reports=reports)
    for failure in report.failures:
        logger.warning(
            "%s failed: %s %s", suite, failure.instance, failure.detail
        )
    return report
