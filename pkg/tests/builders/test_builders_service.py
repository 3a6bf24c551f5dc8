import pytest

from src.builders.builders_model import PolyhexSpec
from src.builders.builders_service import BuildersService
from src.errors import InvolutionError, PolyhexError
from src.kernel import FlagSystem, IncidenceComplex, KernelService


@pytest.mark.parametrize("i", [3, 4, 5, 6, 7, 8])
def test_barrel_fvector(i):
    X = BuildersService.build_barrel(i)
    fv = KernelService.f_vector(X)
    assert fv.as_tuple() == (4 * i, 6 * i, 2 * i + 2)
    assert fv.p5 == 2 * i + (2 if i == 5 else 0)
    assert KernelService.validate_simple_closed(X).passed


@pytest.mark.parametrize("layers", [0, 1, 2, 3])
def test_layered_dodecahedron(layers):
    X = BuildersService.build_layered_barrel(5, layers)
    fv = KernelService.f_vector(X)
    assert fv.as_tuple() == (20 + 10 * layers, 30 + 15 * layers, 12 + 5 * layers)
    assert fv.p5 == 12
    assert fv.p6 == 5 * layers
    assert KernelService.is_fullerene(X)


def test_layered_barrel_rejects_small_i():
    with pytest.raises(ValueError):
        BuildersService.build_layered_barrel(2)
    with pytest.raises(ValueError):
        BuildersService.build_layered_dodecahedron(-1)


@pytest.mark.parametrize(
    "build, expected, hexagons",
    [
        (BuildersService.build_F26, (26, 39, 15), 3),
        (BuildersService.build_F28_Td, (28, 42, 16), 4),
        (BuildersService.build_F32_D3d, (32, 48, 18), 6),
    ],
)
def test_named_fullerenes(build, expected, hexagons):
    X = build()
    fv = KernelService.f_vector(X)
    assert fv.as_tuple() == expected
    assert fv.p5 == 12 and fv.p6 == hexagons
    assert KernelService.is_polyhedral(X)


def test_prism_and_small_solids():
    assert KernelService.f_vector(BuildersService.build_prism(5)).as_tuple() == (10, 15, 7)
    assert KernelService.f_vector(BuildersService.build_cube()).as_tuple() == (8, 12, 6)
    assert KernelService.f_vector(BuildersService.build_tetrahedron()).as_tuple() == (4, 6, 4)


def _is_fixed_point_free_involution(X: IncidenceComplex, sigma: list[int]) -> bool:
    KernelService.induced_maps(X, sigma)
    return all(sigma[sigma[v]] == v and sigma[v] != v for v in range(len(sigma)))


@pytest.mark.parametrize("i, layers", [(5, 0), (5, 2), (6, 1), (7, 0)])
def test_layered_barrel_antipode(i, layers):
    X = BuildersService.build_layered_barrel(i, layers)
    assert _is_fixed_point_free_involution(X, BuildersService.layered_barrel_antipode(i, layers))


def test_layered_barrel_antipode_missing():
    with pytest.raises(InvolutionError):
        BuildersService.layered_barrel_antipode(6, 0)


def test_f32_antipode():
    X = BuildersService.build_F32_D3d()
    assert _is_fixed_point_free_involution(X, BuildersService.f32_antipode())


@pytest.mark.slow
def test_600cell():
    six = BuildersService.build_600cell()
    assert [six.count(k) for k in range(4)] == [120, 720, 1200, 600]


@pytest.mark.slow
def test_120cell(cell120):
    assert [cell120.count(k) for k in range(4)] == [600, 1200, 720, 120]
    assert KernelService.gonality_profile(cell120) == {5: 720}
    assert KernelService.validate_simple_closed(cell120).passed
    sigma = BuildersService.cell120_antipode()
    assert all(sigma[sigma[v]] == v and sigma[v] != v for v in range(600))


def test_heawood_torus():
    X = BuildersService.build("toroidal-polyhex")
    assert KernelService.f_vector(X).as_tuple() == (14, 21, 7)
    assert KernelService.euler_characteristic(X) == 0
    assert KernelService.orientability(X).orientable


def test_small_torus_is_flag_only():
    spec = PolyhexSpec(a=(1, 0), b=(0, 1))
    assert spec.hexagons == 1
    with pytest.raises(PolyhexError):
        BuildersService.build_toroidal_polyhex(spec)
    F = BuildersService.polyhex_flag_system(spec)
    assert F.size == 12
    assert KernelService.f_vector(F).as_tuple() == (2, 3, 1)


def test_polyhex_basis_must_be_independent():
    with pytest.raises(ValueError):
        PolyhexSpec(a=(1, 2), b=(2, 4))


def test_twisted_spec_needs_klein_builder():
    with pytest.raises(PolyhexError):
        BuildersService.build_toroidal_polyhex(PolyhexSpec(a=(3, 0), b=(0, 3), twist=True))
    with pytest.raises(PolyhexError):
        BuildersService.build_klein_polyhex(PolyhexSpec(a=(2, 1), b=(-1, 3)))


def test_klein_polyhex_flags():
    F = BuildersService.polyhex_flag_system(PolyhexSpec(a=(3, 0), b=(0, 3), twist=True))
    fv = KernelService.f_vector(F)
    assert fv.as_tuple() == (18, 27, 9)
    assert KernelService.euler_characteristic(F) == 0
    assert not KernelService.orientability(F).orientable


def test_klein_polyhex_has_a_regular_instance():
    found = []
    for c in (1, 3, 9):
        for p in range(9):
            try:
                X = BuildersService.build_klein_polyhex(PolyhexSpec(a=(c, 0), b=(p, 9 // c), twist=True))
            except PolyhexError:
                continue
            found.append(X)
    assert found
    X = found[0]
    assert KernelService.f_vector(X).as_tuple() == (18, 27, 9)
    assert not KernelService.orientability(X).orientable


def test_build_dispatch():
    assert KernelService.f_vector(BuildersService.build("barrel", {"i": 7})).as_tuple() == (28, 42, 16)
    assert KernelService.f_vector(BuildersService.build("layered-barrel", {"i": 6, "layers": 1})).p6 == 8
    assert isinstance(BuildersService.build("polyhex-flags", {"a1": 1, "a2": 0, "b1": 0, "b2": 1}), FlagSystem)
    with pytest.raises(ValueError, match="unknown builder"):
        BuildersService.build("icosahedron")
    with pytest.raises(ValueError):
        BuildersService.build("barrel", {"i": 2})
    with pytest.raises(ValueError):
        BuildersService.build("layered-barrel", {"layers": -1})


def _torus_lattices(n):
    # every index-n sublattice has exactly one basis (a, 0), (b, c) with a*c = n and 0 <= b < a
    for c in range(1, n + 1):
        if n % c == 0:
            for b in range(n // c):
                yield PolyhexSpec(a=(n // c, 0), b=(b, c))


def _klein_quotients(n):
    for c in range(1, n + 1):
        if n % c == 0:
            for p in range(c):
                yield PolyhexSpec(a=(c, 0), b=(p, n // c), twist=True)


def _polyhedral_outcomes(specs, build):
    outcomes = set()
    for spec in specs:
        try:
            X = build(spec)
        except PolyhexError:
            continue
        outcomes.add(KernelService.is_polyhedral(X))
    return outcomes


def test_torus_polyhexes_are_polyhedral_only_from_seven_hexagons():
    seen = {n: _polyhedral_outcomes(_torus_lattices(n), BuildersService.build_toroidal_polyhex) for n in range(1, 9)}
    assert seen[1] == seen[2] == set()
    for n in range(3, 7):
        assert seen[n] == {False}
    assert True in seen[7]
    assert True in seen[8]


def test_klein_polyhexes_below_seven_hexagons_are_not_polyhedral():
    for n in range(1, 7):
        assert True not in _polyhedral_outcomes(_klein_quotients(n), BuildersService.build_klein_polyhex)
