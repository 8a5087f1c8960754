import hypothesis
import pytest
from hypothesis import strategies as st

from eqres import EqresApplication
from eqres.partitions import Partition

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)
hypothesis.settings.register_profile("thorough", max_examples=500)


@st.composite
def partitions(draw, max_size=6, max_rows=None):
    """Partitions of at most ``max_size`` boxes."""
    size = draw(st.integers(min_value=0, max_value=max_size))
    parts, remaining, largest = [], size, size
    while remaining:
        if max_rows is not None and len(parts) == max_rows:
            break
        part = draw(
            st.integers(min_value=1, max_value=min(remaining, largest))
        )
        parts.append(part)
        remaining -= part
        largest = part
    return Partition(parts)


@pytest.fixture(scope="session")
def eqres_app():
    return EqresApplication(verbose=0)
