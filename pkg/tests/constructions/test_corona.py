import pytest

from src.builders.builders_service import BuildersService
from src.census.census_service import CensusService
from src.constructions.constructions_service import ConstructionsService
from src.errors import ComplexError
from src.kernel import IncidenceComplex, KernelService
from src.verify.verify_service import corona_expectation


@pytest.mark.parametrize(
    "build, fvector, census",
    [
        (BuildersService.build_cube, (240, 480, 294, 54), {"cube": 2, "B_4": 24, "Do": 28}),
        (BuildersService.build_tetrahedron, (120, 240, 152, 32), {"tetrahedron": 2, "B_3": 16, "Do": 14}),
    ],
)
def test_corona_of_small_solids(build, fvector, census):
    X = ConstructionsService.corona_B(build())
    assert KernelService.f_vector(X).as_tuple() == fvector
    assert CensusService.census(X).counts() == census
    assert KernelService.euler_characteristic(X) == 0


def test_corona_matches_expectation():
    F = BuildersService.build_F26()
    X = ConstructionsService.corona_B(F)
    exp = corona_expectation(F)
    fv = KernelService.f_vector(X)
    assert fv.as_tuple() == exp.fvector
    assert fv.p6 == exp.hexagons
    assert CensusService.census(X).counts() == exp.census


def test_corona_labels_name_both_copies():
    X = ConstructionsService.corona_B(BuildersService.build_cube())
    labels = {X.label(3, c) for c in range(X.count(3))}
    assert {"copy0:F", "copy1:F"} <= labels
    assert sum(1 for text in labels if text.startswith("floor4:")) == 12


def test_corona_needs_closed_surface(dodecahedron):
    opened = IncidenceComplex.from_polygons(dodecahedron.polygons()[1:])
    with pytest.raises(ComplexError):
        ConstructionsService.corona_B(opened)


@pytest.mark.slow
def test_corona_of_dodecahedron_is_120cell(cell120):
    X = ConstructionsService.corona_B(BuildersService.build_dodecahedron())
    assert KernelService.f_vector(X).as_tuple() == (600, 1200, 720, 120)
    assert CensusService.is_isomorphic(X, cell120)
