import logging
from functools import lru_cache
from itertools import combinations
from typing import Any

from ..errors import ComplexError, InvolutionError, NonRegularComplexError, PolyhexError
from ..kernel import FlagSystem, IncidenceComplex, KernelService
from .builders_model import BarrelSpec, LayeredBarrelSpec, PolyhexSpec
from .icosian import antipodes, icosians, inner
from .polyhex import KleinGroup, TorusGroup, polyhex_flags

logger = logging.getLogger(__name__)


def _layered_barrel_keys(i: int, layers: int):
    def a(j):
        return ("a", j % i)

    def d(j):
        return ("d", j % i)

    def u(k, j):
        return ("u", k, j % i)

    def w(k, j):
        return ("w", k, j % i)

    return a, d, u, w


class BuildersService:
    """种子复形构建服务"""

    @staticmethod
    @lru_cache(maxsize=64)
    def build_layered_barrel(i: int, layers: int = 0) -> IncidenceComplex:
        """Two i-gonal caps, a pentagon ring under each, and `layers` rings of i hexagons between.

        Face 0 is the top cap and the last face the bottom cap.
        """
        if i < 3:
            raise ComplexError(f"barrel needs i >= 3, got {i}")
        if layers < 0:
            raise ComplexError(f"layers must be >= 0, got {layers}")
        a, d, u, w = _layered_barrel_keys(i, layers)
        L = layers
        order = [a(j) for j in range(i)]
        for k in range(L + 1):
            order += [u(k, j) for j in range(i)] + [w(k, j) for j in range(i)]
        order += [d(j) for j in range(i)]
        polygons = [[a(j) for j in range(i)]]
        polygons += [[a(j), a(j + 1), u(0, j + 1), w(0, j), u(0, j)] for j in range(i)]
        for k in range(L):
            polygons += [
                [w(k, j), u(k, j + 1), w(k, j + 1), u(k + 1, j + 1), w(k + 1, j), u(k + 1, j)]
                for j in range(i)
            ]
        polygons += [[d(j - 1), d(j), w(L, j), u(L, j), w(L, j - 1)] for j in range(i)]
        polygons.append([d(j) for j in range(i)])
        X = IncidenceComplex.from_polygons(polygons, vertex_order=order)
        _self_check(X, f"layered barrel ({i}, {layers})")
        return X

    @staticmethod
    def build_barrel(i: int) -> IncidenceComplex:
        return BuildersService.build_layered_barrel(i, 0)

    @staticmethod
    def build_dodecahedron() -> IncidenceComplex:
        return BuildersService.build_layered_barrel(5, 0)

    @staticmethod
    def build_layered_dodecahedron(i: int) -> IncidenceComplex:
        if i < 0:
            raise ComplexError(f"layer count must be >= 0, got {i}")
        return BuildersService.build_layered_barrel(5, i)

    @staticmethod
    def layered_barrel_antipode(i: int, layers: int = 0) -> list[int]:
        """Central inversion of a layered barrel as a vertex permutation.

        Exists iff i - layers - 1 is even; B_6 (i=6, no layers) has none.
        """
        if (i - layers - 1) % 2:
            raise InvolutionError(f"layered barrel ({i}, {layers}) has no central inversion")
        h = (i - layers - 1) // 2
        a, d, u, w = _layered_barrel_keys(i, layers)
        L = layers
        image = {}
        for j in range(i):
            image[a(j)] = d(j + h)
            image[d(j)] = a(j + (i + L + 1) // 2)
            for k in range(L + 1):
                image[u(k, j)] = w(L - k, j + k + h)
                image[w(k, j)] = u(L - k, j + k + h + 1)
        return _keyed_map(BuildersService.build_layered_barrel(i, layers), i, layers, image)

    @staticmethod
    @lru_cache(maxsize=1)
    def build_F26() -> IncidenceComplex:
        """F_26(D_3h): three isolated hexagons around the equator."""
        polygons = _block_faces("") + _block_faces("m", shared_rim=True)
        for k in range(3):
            polygons.append([
                ("a", "", k), ("b", "", (k + 1) % 3), ("b'", "", (k + 1) % 3),
                ("b", "m", (k + 1) % 3), ("a", "m", k), ("a'", "", k),
            ])
        X = IncidenceComplex.from_polygons(polygons)
        _self_check(X, "F_26")
        return X

    @staticmethod
    @lru_cache(maxsize=1)
    def build_F28_Td() -> IncidenceComplex:
        """F_28(T_d): dual of the truncated tetrahedron with each hexagon coned off."""
        def n(x, y):
            return ("n", x, y)

        triangles = [[n(x, y) for y in range(4) if y != x] for x in range(4)]
        for x, y, z in combinations(range(4), 3):
            hexagon = [n(x, y), n(y, x), n(y, z), n(z, y), n(z, x), n(x, z)]
            apex = ("c", x, y, z)
            triangles += [[apex, hexagon[k], hexagon[(k + 1) % 6]] for k in range(6)]
        X = KernelService.dual(IncidenceComplex.from_polygons(triangles))
        _self_check(X, "F_28(T_d)")
        return X

    @staticmethod
    @lru_cache(maxsize=1)
    def build_F32_D3d() -> IncidenceComplex:
        """F_32(D_3d): a ring of six hexagons between two blocks of six pentagons."""
        polygons = _block_faces("") + _block_faces("m")
        for k in range(3):
            km, kp = (k - 1) % 3, (k + 1) % 3
            polygons.append([
                ("b'", "", k), ("a'", "", k), ("b'", "m", k), ("b", "m", k),
                ("a", "m", km), ("a'", "m", km),
            ])
            polygons.append([
                ("a'", "", k), ("a", "", k), ("b", "", kp), ("b'", "", kp),
                ("a'", "m", k), ("b'", "m", k),
            ])
        X = IncidenceComplex.from_polygons(polygons, vertex_order=_block_keys("") + _block_keys("m"))
        _self_check(X, "F_32(D_3d)")
        return X

    @staticmethod
    def f32_antipode() -> list[int]:
        """Swaps the blocks with a one-step turn: top v_k -> bottom v_(k+1), bottom v_k -> top v_(k-1)."""
        X = BuildersService.build_F32_D3d()
        keys = _block_keys("") + _block_keys("m")
        pos = {key: n for n, key in enumerate(keys)}
        out = [0] * len(keys)
        for key, n in pos.items():
            if key[0] == "T":
                image = ("T", "m" if key[1] == "" else "")
            elif key[1] == "":
                image = (key[0], "m", (key[2] + 1) % 3)
            else:
                image = (key[0], "", (key[2] - 1) % 3)
            out[n] = pos[image]
        KernelService.induced_maps(X, out)
        return out

    @staticmethod
    @lru_cache(maxsize=16)
    def build_prism(n: int) -> IncidenceComplex:
        if n < 3:
            raise ComplexError(f"prism needs n >= 3, got {n}")
        polygons = [[("x", j) for j in range(n)], [("y", j) for j in range(n)]]
        polygons += [[("x", j), ("x", (j + 1) % n), ("y", (j + 1) % n), ("y", j)] for j in range(n)]
        X = IncidenceComplex.from_polygons(polygons)
        _self_check(X, f"prism {n}")
        return X

    @staticmethod
    def build_cube() -> IncidenceComplex:
        return BuildersService.build_prism(4)

    @staticmethod
    @lru_cache(maxsize=1)
    def build_tetrahedron() -> IncidenceComplex:
        X = IncidenceComplex.from_polygons([list(t) for t in combinations(range(4), 3)])
        _self_check(X, "tetrahedron")
        return X

    @staticmethod
    @lru_cache(maxsize=1)
    def build_600cell() -> IncidenceComplex:
        """Vertices are the icosians; edges join units at the largest inner product below 1."""
        qs = icosians()
        products = {(x, y): inner(qs[x], qs[y]) for x, y in combinations(range(len(qs)), 2)}
        one = inner(qs[0], qs[0])
        threshold = None
        for value in products.values():
            if value < one and (threshold is None or threshold < value):
                threshold = value
        nbrs: list[set[int]] = [set() for _ in qs]
        for (x, y), value in products.items():
            if value == threshold:
                nbrs[x].add(y)
                nbrs[y].add(x)
        tets = []
        for x in range(len(qs)):
            for y in sorted(v for v in nbrs[x] if v > x):
                for z in sorted(v for v in nbrs[x] & nbrs[y] if v > y):
                    for t in sorted(v for v in nbrs[x] & nbrs[y] & nbrs[z] if v > z):
                        tets.append((x, y, z, t))
        X = IncidenceComplex.from_simplices(tets, vertex_order=range(len(qs)))
        counts = tuple(X.count(k) for k in range(4))
        if counts != (120, 720, 1200, 600):
            raise ComplexError(f"600-cell self-check failed: f-vector {counts}")
        logger.info(f"built 600-cell {counts}")
        return X

    @staticmethod
    @lru_cache(maxsize=1)
    def build_120cell() -> IncidenceComplex:
        X = KernelService.dual(BuildersService.build_600cell())
        fv = KernelService.f_vector(X)
        if fv.as_tuple() != (600, 1200, 720, 120) or fv.p5 != 720:
            raise ComplexError(f"120-cell self-check failed: {fv}")
        report = KernelService.validate_simple_closed(X, 3)
        if not report.passed:
            raise ComplexError(f"120-cell self-check failed: {report.violations[:3]}")
        logger.info(f"built 120-cell {fv.as_tuple()}")
        return X

    @staticmethod
    def cell120_antipode() -> list[int]:
        """q -> -q on the icosians, carried to the vertices (= 600-cell tetrahedra) of the 120-cell."""
        six = BuildersService.build_600cell()
        neg = antipodes()
        index = {six.cell_vertices(3, t): t for t in range(six.count(3))}
        return [index[frozenset(neg[x] for x in six.cell_vertices(3, t))] for t in range(six.count(3))]

    @staticmethod
    def polyhex_flag_system(spec: PolyhexSpec) -> FlagSystem:
        group = KleinGroup(spec.a[0], spec.b[0], spec.b[1]) if spec.twist else TorusGroup(spec.a, spec.b)
        F = polyhex_flags(group)
        problems = F.validate()
        if problems:
            raise PolyhexError(f"quotient with {spec.hexagons} hexagons is degenerate: {problems[0]}")
        return F

    @staticmethod
    def build_toroidal_polyhex(spec: PolyhexSpec) -> IncidenceComplex:
        """Regular cell complex of the torus quotient.

        Below 7 hexagons the result is regular but never polyhedral: two hexagons meet
        in more than one edge or vertex. Check KernelService.is_polyhedral when a
        topological complex is needed.
        """
        if spec.twist:
            raise PolyhexError("twisted basis given; use build_klein_polyhex")
        return _polyhex_complex(spec)

    @staticmethod
    def build_klein_polyhex(spec: PolyhexSpec) -> IncidenceComplex:
        """Klein-bottle counterpart of build_toroidal_polyhex; the same caveat applies."""
        if not spec.twist:
            raise PolyhexError("untwisted basis given; use build_toroidal_polyhex")
        return _polyhex_complex(spec)

    @staticmethod
    def build(name: str, params: dict[str, Any] | None = None) -> IncidenceComplex | FlagSystem:
        """Dispatch by catalog name, used by the CLI, pipelines and the HTTP surface."""
        p = dict(params or {})
        S = BuildersService
        table = {
            "dodecahedron": lambda: S.build_dodecahedron(),
            "barrel": lambda: S.build_barrel(BarrelSpec(i=p.get("i", 6)).i),
            "layered-barrel": lambda: S.build_layered_barrel(*_layered(p)),
            "layered-dodecahedron": lambda: S.build_layered_dodecahedron(int(p.get("i", 1))),
            "F26": lambda: S.build_F26(),
            "F28": lambda: S.build_F28_Td(),
            "F32": lambda: S.build_F32_D3d(),
            "prism": lambda: S.build_prism(int(p.get("n", 4))),
            "cube": lambda: S.build_cube(),
            "tetrahedron": lambda: S.build_tetrahedron(),
            "600cell": lambda: S.build_600cell(),
            "120cell": lambda: S.build_120cell(),
            "toroidal-polyhex": lambda: S.build_toroidal_polyhex(_polyhex_spec(p, False)),
            "klein-polyhex": lambda: S.build_klein_polyhex(_polyhex_spec(p, True)),
            "polyhex-flags": lambda: S.polyhex_flag_system(_polyhex_spec(p, bool(p.get("twist", 0)))),
        }
        if name not in table:
            raise ValueError(f"unknown builder {name!r}; known: {', '.join(sorted(table))}")
        return table[name]()


def _layered(p: dict[str, Any]) -> tuple[int, int]:
    spec = LayeredBarrelSpec(i=p.get("i", 6), layers=p.get("layers", 0))
    return spec.i, spec.layers


def _polyhex_spec(p: dict[str, Any], twist: bool) -> PolyhexSpec:
    if twist:
        return PolyhexSpec(a=(int(p.get("c", 3)), 0), b=(int(p.get("p", 0)), int(p.get("q", 3))), twist=True)
    return PolyhexSpec(
        a=(int(p.get("a1", 2)), int(p.get("a2", 1))),
        b=(int(p.get("b1", -1)), int(p.get("b2", 3))),
    )


def _polyhex_complex(spec: PolyhexSpec) -> IncidenceComplex:
    F = BuildersService.polyhex_flag_system(spec)
    try:
        X = KernelService.from_flags(F)
    except NonRegularComplexError as e:
        raise PolyhexError(
            f"quotient with {spec.hexagons} hexagons is not a regular complex ({e}); "
            "use polyhex_flag_system for the flag view"
        ) from e
    report = KernelService.validate_simple_closed(X, 2)
    if not report.passed:
        raise PolyhexError(
            f"quotient with {spec.hexagons} hexagons is not simple: {report.violations[0]}; "
            "use polyhex_flag_system for the flag view"
        )
    return X


def _block_keys(side: str) -> list[tuple]:
    keys: list[tuple] = [("T", side)]
    for name in ("t", "a", "b", "a'", "b'"):
        keys += [(name, side, k) for k in range(3)]
    return keys


def _block_faces(side: str, shared_rim: bool = False) -> list[list[tuple]]:
    """Six pentagons around a vertex T: P_k = (T, t_k, a_k, b_k+1, t_k+1), Q_k = (b_k, t_k, a_k, a'_k, b'_k).

    With shared_rim the a' and b' vertices are taken from the unnamed side.
    """
    rim = "" if shared_rim else side

    def v(name, k):
        return (name, rim if name in ("a'", "b'") else side, k % 3)

    faces = []
    for k in range(3):
        faces.append([("T", side), v("t", k), v("a", k), v("b", k + 1), v("t", k + 1)])
        faces.append([v("b", k), v("t", k), v("a", k), v("a'", k), v("b'", k)])
    return faces


def _keyed_map(X: IncidenceComplex, i: int, layers: int, image: dict) -> list[int]:
    a, d, u, w = _layered_barrel_keys(i, layers)
    order = [a(j) for j in range(i)]
    for k in range(layers + 1):
        order += [u(k, j) for j in range(i)] + [w(k, j) for j in range(i)]
    order += [d(j) for j in range(i)]
    pos = {key: n for n, key in enumerate(order)}
    out = [pos[image[key]] for key in order]
    KernelService.induced_maps(X, out)
    return out


def _self_check(X: IncidenceComplex, name: str) -> None:
    report = KernelService.validate_simple_closed(X, X.dim)
    if not report.passed:
        raise ComplexError(f"{name} self-check failed: {report.violations[:3]}")
    chi = KernelService.euler_characteristic(X)
    if X.dim == 2 and chi != 2:
        raise ComplexError(f"{name} self-check failed: Euler characteristic {chi}")
    logger.debug(f"built {name} {KernelService.f_vector(X).as_tuple()}")
