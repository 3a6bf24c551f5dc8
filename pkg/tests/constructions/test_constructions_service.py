from itertools import combinations

import pytest

from src.builders.builders_service import BuildersService
from src.constructions.constructions_service import ConstructionsService
from src.kernel import IncidenceComplex
from src.kernel import serialization as ser

OUTPUTS = [
    pytest.param(lambda: ConstructionsService.dodecahedron_chain(3), id="glue-chain"),
    pytest.param(lambda: ConstructionsService.corona_B(BuildersService.build_cube()), id="corona-cube"),
    pytest.param(lambda: ConstructionsService.antipodal_fold(BuildersService.build_dodecahedron()), id="fold-Do"),
    pytest.param(
        lambda: ConstructionsService.subdivide_C(IncidenceComplex.from_simplices(list(combinations(range(5), 4)))),
        id="subdivide-simplex",
    ),
    pytest.param(lambda: ConstructionsService.dodecahedral_space(3), id="twist-quotient"),
]


@pytest.mark.parametrize("build", OUTPUTS)
def test_construction_output_is_deterministic(build):
    fmt, text = ser.dump(build())
    assert ser.dump(build()) == (fmt, text)


@pytest.mark.parametrize("build", OUTPUTS)
def test_construction_output_round_trips(build):
    fmt, text = ser.dump(build())
    assert ser.dump(ser.load(text)) == (fmt, text)


def test_construct_dispatch_matches_direct_call():
    cube = BuildersService.build_cube()
    assert ser.to_cxc(ConstructionsService.construct("B", cube)) == ser.to_cxc(ConstructionsService.corona_B(cube))
