import pytest

from dstepsat.chirotope import chirotope_from_points, cyclic_configuration
from dstepsat.config import RunConfig
from dstepsat.data.reference_paths import D6_N12_SINGLE_REVISIT
from dstepsat.logging import configure
from dstepsat.pathcomplex import PivotSequence, expand_to_facets

configure("WARNING", enabled=False)


@pytest.fixture
def d6n12_lines():
    return list(D6_N12_SINGLE_REVISIT)


@pytest.fixture
def d6n12_row1():
    return expand_to_facets(PivotSequence.from_line(D6_N12_SINGLE_REVISIT[0], 6), 12)


@pytest.fixture
def hexagon():
    """Rank-3 chirotope of six points in convex position, labelled around the hull."""
    return chirotope_from_points(cyclic_configuration(6, 3))


@pytest.fixture
def run_config(tmp_path):
    return RunConfig(backend="embedded", solver_name="glucose4", time_limit=120,
                     workers=1, output_dir=tmp_path, resume=True)
