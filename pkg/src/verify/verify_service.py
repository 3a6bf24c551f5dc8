import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from ..builders.builders_service import BuildersService
from ..census.census_service import CensusService
from ..config import AppConfig
from ..constructions.constructions_service import ConstructionsService
from ..kernel import FVector, IncidenceComplex, KernelService
from .verify_model import VerificationRecord

logger = logging.getLogger(__name__)


@dataclass
class Expectation:
    fvector: tuple[int, ...]
    census: dict[str, int]
    hexagons: int | None = None


@dataclass
class Row:
    build: Callable[[], IncidenceComplex]
    expect: Callable[[], Expectation]
    params: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, Callable[[IncidenceComplex], bool]] = field(default_factory=dict)


def _nonzero(census: dict[str, int]) -> dict[str, int]:
    return {name: n for name, n in census.items() if n}


def chain_expectation(n: int) -> Expectation:
    return Expectation(
        fvector=(560 * n + 40, 1120 * n + 80, 666 * n + 54, 106 * n + 14),
        census=_nonzero({"Do": 94 * n + 26, "F_30(D_5h)": 12 * n - 12}),
        hexagons=30 * n - 30,
    )


def corona_expectation(F: IncidenceComplex) -> Expectation:
    v = F.count(0)
    census: dict[str, int] = {}
    for gon, count in KernelService.gonality_profile(F).items():
        if gon != 5:
            census[f"B_{gon}"] = 4 * count
    census["Do"] = 4 * KernelService.gonality_profile(F).get(5, 0) + 7 * v // 2
    name = CensusService.catalog_name(F)
    census[name] = census.get(name, 0) + 2
    return Expectation(
        fvector=(30 * v, 60 * v, 71 * v // 2 + 10, 11 * v // 2 + 10),
        census=census,
        hexagons=5 * KernelService.gonality_profile(F).get(6, 0),
    )


def subdivision_expectation(fv: FVector, census: dict[str, int]) -> Expectation:
    v, p, q = fv.v, fv.p, fv.q
    cells = dict(census)
    for name, n in (("Do", 2 * fv.p5), ("B_6", 2 * fv.p6), ("F_28(T_d)", v)):
        cells[name] = cells.get(name, 0) + n
    V = 20 * v
    return Expectation(
        fvector=(V, 2 * V, 20 * v + 3 * p, q + 2 * fv.p5 + 2 * fv.p6 + v),
        census=_nonzero(cells),
        hexagons=2 * v + 3 * fv.p6,
    )


def _iterated_subdivision_expectation(times: int) -> Expectation:
    fv = KernelService.f_vector(BuildersService.build_120cell())
    exp = Expectation(fv.as_tuple(), {"Do": 120}, 0)
    for _ in range(times):
        exp = subdivision_expectation(fv, exp.census)
        fv = FVector(counts=list(exp.fvector), p5=exp.fvector[2] - exp.hexagons, p6=exp.hexagons)
    return exp


def _corona_row(name: str, build: Callable[[], IncidenceComplex]) -> Row:
    checks = {}
    if name == "Do":
        checks["isomorphic to 120-cell"] = lambda X: CensusService.is_isomorphic(X, BuildersService.build_120cell())
    return Row(
        build=lambda: ConstructionsService.corona_B(build()),
        expect=lambda: corona_expectation(build()),
        params={"F": name},
        checks=checks,
    )


S = BuildersService

ROWS: dict[str, Row] = {
    "120-cell": Row(S.build_120cell, lambda: Expectation((600, 1200, 720, 120), {"Do": 120}, 0)),
    **{
        f"A_{n}": Row(lambda n=n: ConstructionsService.chain_A(n), lambda n=n: chain_expectation(n), {"n": n})
        for n in (1, 2, 3)
    },
    "B(Do)": _corona_row("Do", S.build_dodecahedron),
    "B(B_6)": _corona_row("B_6", lambda: S.build_barrel(6)),
    "B(F_26)": _corona_row("F_26", S.build_F26),
    "B(F_28)": _corona_row("F_28(T_d)", S.build_F28_Td),
    "B(cube)": _corona_row("cube", S.build_cube),
    "C_1(120-cell)": Row(
        lambda: ConstructionsService.subdivide_C(S.build_120cell()),
        lambda: _iterated_subdivision_expectation(1),
        {"F": "120-cell", "times": 1},
    ),
}

DEEP_ROWS: dict[str, Row] = {
    "C_2(120-cell)": Row(
        lambda: ConstructionsService.subdivide_C(S.build_120cell(), 2),
        lambda: _iterated_subdivision_expectation(2),
        {"F": "120-cell", "times": 2},
    ),
}


class VerifyService:
    """表格验证服务"""

    @staticmethod
    def row_names(deep: bool = False) -> list[str]:
        return list(ROWS) + (list(DEEP_ROWS) if deep else [])

    @staticmethod
    def verify_row(name: str) -> VerificationRecord:
        row = ROWS.get(name) or DEEP_ROWS.get(name)
        if row is None:
            raise ValueError(f"unknown row {name!r}; known: {', '.join(VerifyService.row_names(True))}")
        record = VerificationRecord(name=name, params=row.params)
        start = time.perf_counter()
        try:
            exp = row.expect()
            record.expected_fvector = list(exp.fvector)
            record.expected_census = exp.census
            record.expected_hexagons = exp.hexagons
            X = row.build()
            fv = KernelService.f_vector(X)
            record.observed_fvector = fv.counts
            record.observed_hexagons = fv.p6
            record.observed_census = CensusService.census(X).counts()
            v, e, p, q = fv.as_tuple()
            record.identities = {
                "e = 2v": e == 2 * v,
                "p = v + q": p == v + q,
                "chi = 0": KernelService.euler_characteristic(X) == 0,
            }
            if fv.p_other == 0:
                record.identities["p5 = 6q"] = fv.p5 == 6 * q
            for label, check in row.checks.items():
                record.identities[label] = bool(check(X))
            record.passed = (
                record.expected_fvector == record.observed_fvector
                and record.expected_census == record.observed_census
                and (exp.hexagons is None or exp.hexagons == fv.p6)
                and all(record.identities.values())
            )
        except ValueError as e:
            record.error = str(e)
            record.passed = False
        record.duration = time.perf_counter() - start
        if record.passed:
            logger.info(f"row {name}: pass in {record.duration:.2f}s")
        else:
            logger.warning(f"row {name}: FAIL {record.error or ''} observed {record.observed_fvector}")
        return record

    @staticmethod
    def verify_table(rows: list[str] | None = None, deep: bool | None = None) -> list[VerificationRecord]:
        deep = AppConfig.DEEP if deep is None else deep
        names = rows or VerifyService.row_names(deep)
        for name in names:
            if name not in ROWS and name not in DEEP_ROWS:
                raise ValueError(f"unknown row {name!r}; known: {', '.join(VerifyService.row_names(True))}")
        with ThreadPoolExecutor(max_workers=max(1, AppConfig.VERIFY_WORKERS)) as pool:
            return list(pool.map(VerifyService.verify_row, names))
