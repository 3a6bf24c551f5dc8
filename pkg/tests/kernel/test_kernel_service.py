from itertools import combinations

import pytest

from src.builders.builders_service import BuildersService
from src.census.census_service import CensusService
from src.errors import InvolutionError
from src.kernel import IncidenceComplex, KernelService, Orientability


def test_f_vector_dodecahedron(dodecahedron):
    fv = KernelService.f_vector(dodecahedron)
    assert fv.as_tuple() == (20, 30, 12)
    assert (fv.p5, fv.p6, fv.p_other) == (12, 0, 0)
    assert fv.v == 20 and fv.e == 30 and fv.p == 12 and fv.q == 0


def test_f_vector_of_flags_matches_incidence(dodecahedron):
    F = KernelService.to_flags(dodecahedron)
    assert KernelService.f_vector(F) == KernelService.f_vector(dodecahedron)
    assert KernelService.gonality_profile(F) == {5: 12}


def test_fvector_rejects_bad_breakdown():
    from src.kernel import FVector

    with pytest.raises(ValueError):
        FVector(counts=[20, 30, 12], p5=11)


def test_euler_characteristic(dodecahedron):
    assert KernelService.euler_characteristic(dodecahedron) == 2
    assert KernelService.euler_characteristic(BuildersService.build_cube()) == 2


def test_validate_simple_closed(dodecahedron):
    assert KernelService.validate_simple_closed(dodecahedron).passed
    opened = IncidenceComplex.from_polygons(dodecahedron.polygons()[1:])
    report = KernelService.validate_simple_closed(opened)
    assert not report.passed
    assert report.violations
    assert KernelService.validate_simple_closed(opened, open_ok=True).passed


def test_validate_simple_closed_wrong_rank(dodecahedron):
    report = KernelService.validate_simple_closed(dodecahedron, 3)
    assert not report.passed
    assert "rank 2" in report.violations[0]


def test_validate_flags_agrees(dodecahedron):
    assert KernelService.validate_simple_closed(KernelService.to_flags(dodecahedron)).passed


def test_is_fullerene():
    assert KernelService.is_fullerene(BuildersService.build_dodecahedron())
    assert KernelService.is_fullerene(BuildersService.build_F26())
    assert not KernelService.is_fullerene(BuildersService.build_cube())
    assert not KernelService.is_fullerene(BuildersService.build_tetrahedron())


def test_orientability(dodecahedron):
    report = KernelService.orientability(dodecahedron)
    assert report.orientable
    assert report.value == Orientability.ORIENTABLE


def test_is_connected(dodecahedron):
    assert KernelService.is_connected(dodecahedron)
    two = IncidenceComplex.from_polygons(
        [[("a", v) for v in poly] for poly in dodecahedron.polygons()]
        + [[("b", v) for v in poly] for poly in dodecahedron.polygons()]
    )
    assert not KernelService.is_connected(two)
    assert KernelService.orientability(two).components == [Orientability.ORIENTABLE] * 2


def test_is_polyhedral(dodecahedron):
    assert KernelService.is_polyhedral(dodecahedron)
    assert KernelService.is_polyhedral(BuildersService.build_F28_Td())


def test_induced_maps_identity(dodecahedron):
    maps = KernelService.induced_maps(dodecahedron, list(range(20)))
    assert maps == [list(range(dodecahedron.count(k))) for k in range(3)]


def test_induced_maps_rejects_non_automorphism(dodecahedron):
    a, b = dodecahedron.cells[1][0]
    swap = list(range(20))
    swap[a], swap[b] = b, a
    with pytest.raises(InvolutionError):
        KernelService.induced_maps(dodecahedron, swap)
    with pytest.raises(InvolutionError):
        KernelService.induced_maps(dodecahedron, [0] * 20)


SMALL_COMPLEXES = [
    pytest.param(BuildersService.build_cube, id="cube"),
    pytest.param(BuildersService.build_F26, id="F26"),
    pytest.param(lambda: BuildersService.build_barrel(6), id="B6"),
    pytest.param(lambda: IncidenceComplex.from_simplices(list(combinations(range(5), 4))), id="simplex-boundary"),
]


@pytest.mark.parametrize("build", SMALL_COMPLEXES)
def test_dual_of_dual_is_isomorphic(build):
    X = build()
    twice = KernelService.dual(KernelService.dual(X))
    assert [twice.count(k) for k in range(X.dim + 1)] == [X.count(k) for k in range(X.dim + 1)]
    assert CensusService.is_isomorphic(twice, X)


@pytest.mark.parametrize("build", SMALL_COMPLEXES)
def test_flags_round_trip_is_isomorphic(build):
    X = build()
    back = KernelService.from_flags(KernelService.to_flags(X))
    assert CensusService.is_isomorphic(back, X)


@pytest.mark.slow
def test_120cell_dual_and_flags(cell120):
    six = KernelService.dual(cell120)
    assert [six.count(k) for k in range(4)] == [120, 720, 1200, 600]
    assert KernelService.to_flags(cell120).size == 14400
