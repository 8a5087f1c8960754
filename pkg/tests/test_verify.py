import pytest

from eqres import verify
from eqres.eqmod import ModuleModel
from eqres.errors import GuardrailError, PreconditionError
from eqres.partitions import Partition
from eqres.tensor_lab import DEFAULT_BASIS_CAP, PieriMode


# =============================================================================
# GRIDS
# =============================================================================


def test_suites_have_defaults():
    assert set(verify.SUITES) == {
        "filtration",
        "euler",
        "brute",
        "pieri",
        "coass",
        "sam",
    }


def test_coass_grid():
    instances = verify.suite_instances("coass", 2, max_size=2)
    assert len(instances) == 20
    function, kwargs = instances[0]
    assert function is verify.coass_instance
    assert kwargs == {"l": 0, "a": 0, "b": 0, "n": 1, "cap": DEFAULT_BASIS_CAP}


def test_grid_over_explicit_dimensions():
    instances = verify.suite_instances("coass", [3], max_size=0, cap=7)
    assert instances == [
        (verify.coass_instance, {"l": 0, "a": 0, "b": 0, "n": 3, "cap": 7})
    ]


def test_uncapped_grid():
    instances = verify.suite_instances("filtration", 1, max_size=1, extra=3)
    assert [kwargs for _, kwargs in instances] == [
        {"lam": Partition(()), "n": 1, "dmax": 3},
        {"lam": Partition((1,)), "n": 1, "dmax": 4},
    ]


def test_brute_grid_skips_zero_modules():
    instances = verify.suite_instances("brute", [1], max_size=2, max_l=0)
    modules = {kwargs["m"].partition for _, kwargs in instances}
    assert Partition((1, 1)) not in modules


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        verify.suite_instances("bogus", 2)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"max_n": 0},
        {"max_n": [2, 0]},
        {"max_n": 2, "max_size": -1},
        {"max_n": 2, "extra": -3},
        {"max_n": 2, "cap": 0},
    ],
)
def test_grid_arguments_are_validated(kwargs):
    with pytest.raises(PreconditionError):
        verify.suite_instances("coass", **kwargs)


# =============================================================================
# DRIVER
# =============================================================================


def test_run_instance_turns_errors_into_failures():
    kwargs = {
        "lam": Partition((2,)),
        "eta": Partition((1, 1)),
        "mode": PieriMode.SYM,
        "n": 2,
        "cap": DEFAULT_BASIS_CAP,
    }
    report = verify.run_instance("pieri", verify.pieri_instance, kwargs)
    assert not report.passed
    assert "cap" not in report.instance
    assert report.detail.startswith("PreconditionError")


def test_run_instance_reraises_guardrails():
    kwargs = {"m": ModuleModel.elementary((1,), 4), "i": 0}
    with pytest.raises(GuardrailError):
        verify.run_instance("brute", verify.brute_instance, kwargs)


def test_run_suite_reports_in_grid_order():
    seen = []
    report = verify.run_suite(
        "euler", 2, max_size=2, max_l=1, extra=2, on_result=seen.append
    )
    assert report.passed
    assert report.suite == "euler"
    assert list(report.reports) == seen
    assert len(report) == len(
        verify.suite_instances("euler", 2, max_size=2, max_l=1, extra=2)
    )


def test_run_suite_with_workers():
    serial = verify.run_suite("coass", 2, max_size=2)
    parallel = verify.run_suite("coass", 2, max_size=2, workers=2)
    assert parallel.passed
    assert parallel.reports == serial.reports


def test_pieri_suite():
    report = verify.run_suite("pieri", [2], max_size=2)
    assert report.passed
    assert not report.failures


def test_filtration_suite_to_dict():
    report = verify.run_suite("filtration", 2, max_size=3, extra=3)
    data = report.to_dict()
    assert data["passed"] is True
    assert data["checked"] == len(report)
    assert data["reports"][0]["check"] == "filtration"


@pytest.mark.parametrize(
    "suite", ["filtration", "euler", "pieri", "coass", "sam"]
)
def test_default_grids_pass(suite):
    report = verify.run_suite(suite, 3)
    assert report.passed, [r.detail for r in report.failures]


def test_brute_suite_covers_the_empty_partition():
    instances = verify.suite_instances("brute", [2], max_size=1, max_l=2)
    assert Partition(()) in {kwargs["m"].partition for _, kwargs in instances}
    report = verify.run_suite("brute", [2], max_size=1, max_l=2)
    assert report.passed, [r.detail for r in report.failures]


@pytest.mark.slow
def test_brute_default_grid_passes():
    report = verify.run_suite("brute", 3)
    assert report.passed, [r.detail for r in report.failures]
