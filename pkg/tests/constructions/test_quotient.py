import pytest

from src.builders.builders_service import BuildersService
from src.constructions import quotient
from src.constructions.constructions_model import FacetPairing
from src.constructions.constructions_service import ConstructionsService
from src.errors import InvolutionError, PairingError
from src.kernel import FlagSystem, KernelService

TWIST_ROWS = {
    1: [5, 10, 6, 1],
    3: [1, 6, 6, 1],
    5: [10, 15, 6, 1],
    7: [1, 6, 6, 1],
    9: [5, 10, 6, 1],
}


@pytest.fixture
def do_antipode():
    return BuildersService.layered_barrel_antipode(5, 0)


def test_fold_dodecahedron(dodecahedron, do_antipode):
    X = ConstructionsService.antipodal_fold(dodecahedron, do_antipode)
    assert KernelService.f_vector(X).as_tuple() == (10, 15, 6)
    assert KernelService.euler_characteristic(X) == 1
    assert not KernelService.orientability(X).orientable


def test_fold_searches_for_involution(dodecahedron):
    X = ConstructionsService.antipodal_fold(dodecahedron)
    assert KernelService.f_vector(X).as_tuple() == (10, 15, 6)


def test_fold_F32():
    X = ConstructionsService.antipodal_fold(BuildersService.build_F32_D3d(), BuildersService.f32_antipode())
    fv = KernelService.f_vector(X)
    assert fv.as_tuple() == (16, 24, 9)
    assert (fv.p5, fv.p6) == (6, 3)


def test_fold_rejects_identity(dodecahedron):
    with pytest.raises(InvolutionError):
        ConstructionsService.antipodal_fold(dodecahedron, list(range(20)))


def test_find_antipodal_involution(dodecahedron):
    sigma = quotient.find_antipodal_involution(dodecahedron)
    assert sigma is not None
    assert not quotient.involution_problems(KernelService.induced_maps(dodecahedron, sigma))
    assert quotient.find_antipodal_involution(BuildersService.build_F26()) is None
    assert quotient.find_antipodal_involution(BuildersService.build_barrel(6)) is None


def test_search_limit(monkeypatch, dodecahedron):
    monkeypatch.setattr("src.config.AppConfig.SEARCH_LIMIT", 10)
    with pytest.raises(InvolutionError):
        quotient.find_antipodal_involution(dodecahedron)


@pytest.mark.parametrize("tenths, steps", [(1, 3), (3, 4), (5, 0), (7, 1), (9, 2)])
def test_tenths_to_steps(tenths, steps):
    assert quotient.tenths_to_steps(tenths) == steps


@pytest.mark.parametrize("tenths", [0, 2, 11])
def test_tenths_must_be_odd(tenths):
    with pytest.raises(PairingError):
        quotient.tenths_to_steps(tenths)


def test_twist_table():
    rows = ConstructionsService.twist_table()
    assert [r.tenths for r in rows] == [1, 3, 5, 7, 9]
    for row in rows:
        assert row.fvector == TWIST_ROWS[row.tenths]
        assert row.euler_characteristic == 0
        assert row.manifold


@pytest.mark.parametrize("tenths", [1, 3, 5, 7, 9])
def test_dodecahedral_space(tenths):
    Q = ConstructionsService.dodecahedral_space(tenths)
    assert isinstance(Q, FlagSystem)
    assert Q.dim == 3
    assert KernelService.f_vector(Q).counts == TWIST_ROWS[tenths]
    assert all(chi == 2 for chi in KernelService.vertex_link_euler(Q))


def test_pairing_must_match_antipodes(dodecahedron, do_antipode):
    maps = KernelService.induced_maps(dodecahedron, do_antipode)
    wrong = next(g for g in range(1, 12) if g != maps[2][0])
    rest = [f for f in range(12) if f not in (0, wrong)]
    pairs = [(0, wrong, 0)] + [(rest[k], rest[k + 1], 0) for k in range(0, 10, 2)]
    pairing = FacetPairing(polyhedron=dodecahedron, pairs=pairs, antipode=do_antipode)
    with pytest.raises(PairingError):
        ConstructionsService.facet_pairing_quotient(pairing)


def test_pairing_must_be_perfect_matching(dodecahedron):
    with pytest.raises(ValueError):
        FacetPairing(polyhedron=dodecahedron, pairs=[(0, 11, 0)])


def test_parse_pairing():
    text = "# opposite faces\npair 0 11 1\n\npair 1 6 1  # twisted\n"
    assert quotient.parse_pairing(text) == [(0, 11, 1), (1, 6, 1)]
    with pytest.raises(PairingError):
        quotient.parse_pairing("pair 0 11\n")
    with pytest.raises(PairingError):
        quotient.parse_pairing("pair a b c\n")
    with pytest.raises(PairingError):
        quotient.parse_pairing("# nothing\n")


def test_construct_quotient_from_pairs(dodecahedron, do_antipode):
    maps = KernelService.induced_maps(dodecahedron, do_antipode)
    pairs = [(f, maps[2][f], 0) for f in range(12) if f < maps[2][f]]
    Q = ConstructionsService.construct("quotient", dodecahedron, {"pairs": pairs, "antipode": do_antipode})
    assert KernelService.f_vector(Q).counts == TWIST_ROWS[5]
    Q = ConstructionsService.construct("quotient", dodecahedron, {"twist": 1, "antipode": do_antipode})
    assert KernelService.f_vector(Q).counts == TWIST_ROWS[1]


def test_construct_dispatch_errors(dodecahedron):
    with pytest.raises(ValueError, match="unknown construction"):
        ConstructionsService.construct("D", dodecahedron)
    with pytest.raises(ValueError):
        ConstructionsService.construct("B", None)
    F = KernelService.to_flags(dodecahedron)
    with pytest.raises(ValueError):
        ConstructionsService.construct("fold", F)
    with pytest.raises(PairingError):
        ConstructionsService.construct("quotient", BuildersService.build_F26())
