"""Glue two closed complexes along a top cell and flatten the seam.

Works on a private workspace of vertex-key polygons (and, in rank 3, cells as
sets of polygon ids). Deleted entries become None and are compacted at the end.
"""

import logging
from typing import Hashable, Mapping

from ..census.certificate import find_isomorphism
from ..errors import GlueError
from ..kernel import IncidenceComplex, KernelService, canonical_cycle
from ..kernel.complex import rotate_to
from .constructions_model import GlueReport, GlueResult, GlueSite

logger = logging.getLogger(__name__)


def merge_along(pa: list, pb: list, x1: Hashable, x2: Hashable) -> list:
    """Union of two polygons sharing the edge x1-x2; both endpoints are kept."""
    a = rotate_to(pa, x1, x2)
    b = rotate_to(pb, x2, x1)
    return [x2] + a[2:] + [x1] + b[2:]


def facet_iso(X: IncidenceComplex, ta: int, Y: IncidenceComplex, tb: int) -> dict[int, int]:
    """Some face-respecting vertex bijection between two top cells."""
    if X.dim == 2:
        ca, cb = X.face_vertices(ta), Y.face_vertices(tb)
        if len(ca) != len(cb):
            raise GlueError(f"facets have {len(ca)} and {len(cb)} sides")
        return dict(zip(ca, cb))
    from ..census.census_service import CensusService

    SA, SB = CensusService.extract_cell(X, ta), CensusService.extract_cell(Y, tb)
    FA, FB = KernelService.to_flags(SA), KernelService.to_flags(SB)
    image = find_isomorphism(FA, FB)
    if image is None:
        raise GlueError(f"facets {ta} and {tb} are not isomorphic")
    va = sorted(X.cell_vertices(3, ta))
    vb = sorted(Y.cell_vertices(3, tb))
    out = {}
    for flag in range(FA.size):
        out[va[int(FA.chains[flag, 0])]] = vb[int(FB.chains[image[flag], 0])]
    return out


def _check_iso(X: IncidenceComplex, ta: int, Y: IncidenceComplex, tb: int, iso: Mapping[int, int]) -> None:
    va, vb = X.cell_vertices(X.dim, ta), Y.cell_vertices(Y.dim, tb)
    if set(iso) != set(va) or set(iso.values()) != set(vb) or len(set(iso.values())) != len(iso):
        raise GlueError("iso is not a bijection between the facet vertex sets")
    fa = [ta] if X.dim == 2 else list(X.cells[3][ta])
    fb = [tb] if Y.dim == 2 else list(Y.cells[3][tb])
    target = {canonical_cycle(Y.face_vertices(p)) for p in fb}
    for p in fa:
        if canonical_cycle([iso[v] for v in X.face_vertices(p)]) not in target:
            raise GlueError(f"iso does not carry face {p} of the facet onto a face")


def glue(site: GlueSite) -> GlueResult:
    X, Y = site.complex_a, site.complex_b
    ta, tb = site.facet_a.id, site.facet_b.id
    d = X.dim
    if d not in (2, 3):
        raise GlueError(f"glue needs rank 2 or 3, got {d}")
    for name, Z in (("A", X), ("B", Y)):
        report = KernelService.validate_simple_closed(Z, d)
        if not report.passed:
            raise GlueError(f"complex {name} is not closed and simple: {report.violations[0]}")
    iso = dict(site.iso) if site.iso is not None else facet_iso(X, ta, Y, tb)
    _check_iso(X, ta, Y, tb, iso)
    inv = {w: v for v, w in iso.items()}
    facet_verts = set(iso)

    def key_a(v):
        return ("a", v)

    def key_b(w):
        return ("a", inv[w]) if w in inv else ("b", w)

    nx_ = X.count(2)
    polygons: list[list | None] = [[key_a(v) for v in X.face_vertices(p)] for p in range(nx_)]
    polygons += [[key_b(w) for w in Y.face_vertices(p)] for p in range(Y.count(2))]
    alias: dict[int, int] = {}
    report = GlueReport(facet_rank=d)

    if d == 3:
        # faces of the facet in Y are the same polygons as in X
        by_vertices = {frozenset(X.face_vertices(p)): p for p in X.cells[3][ta]}
        for p in Y.cells[3][tb]:
            twin = by_vertices[frozenset(inv[w] for w in Y.face_vertices(p))]
            alias[nx_ + p] = twin
            polygons[nx_ + p] = None
        cells: list[set[int] | None] = [set(c) for c in X.cells[3]]
        cells += [{alias.get(nx_ + p, nx_ + p) for p in c} for c in Y.cells[3]]
        nc = X.count(3)
        cell_alias: dict[int, int] = {}
        # pass 1: the facet
        cells[ta] = None
        cells[nc + tb] = None
        report.deleted.append(1)
        # pass 2: cells across each face of the facet
        merged = 0
        for f in X.cells[3][ta]:
            (ca,) = [c for c in X.cofaces[2][f] if c != ta]
            yf = next(p for p in Y.cells[3][tb] if alias[nx_ + p] == f)
            (cb,) = [c for c in Y.cofaces[2][yf] if c != tb]
            cb += nc
            if cells[ca] is None or cells[cb] is None:
                raise GlueError(f"cell across face {f} was already merged (facet neighbours not distinct)")
            cells[ca] = (cells[ca] | cells[cb]) - {f}
            cells[cb] = None
            cell_alias[cb] = ca
            polygons[f] = None
            merged += 1
        report.deleted.append(merged)
        report.merged.append(merged)
        logger.debug(f"glue pass 2: merged {merged} cell pairs")
        edges = set()
        for f in X.cells[3][ta]:
            cyc = X.face_vertices(f)
            for j in range(len(cyc)):
                edges.add(frozenset((key_a(cyc[j]), key_a(cyc[j - 1]))))
    else:
        cells = None
        cell_alias = {}
        polygons[ta] = None
        polygons[nx_ + tb] = None
        report.deleted.append(1)
        cyc = X.face_vertices(ta)
        edges = {frozenset((key_a(cyc[j]), key_a(cyc[j - 1]))) for j in range(len(cyc))}

    # pass: polygons across each edge of the facet
    merged = 0
    for edge in sorted(edges, key=lambda e: sorted(e)):
        x1, x2 = sorted(edge)
        holders = [
            n for n, poly in enumerate(polygons)
            if poly is not None and x1 in poly and x2 in poly and _adjacent(poly, x1, x2)
        ]
        if len(holders) != 2:
            raise GlueError(f"edge {x1}-{x2} of the facet has {len(holders)} surviving faces, expected 2")
        pa, pb = holders
        polygons[pa] = merge_along(polygons[pa], polygons[pb], x1, x2)
        polygons[pb] = None
        alias[pb] = pa
        merged += 1
    report.deleted.append(merged)
    report.merged.append(merged)
    logger.debug(f"glue pass {len(report.deleted)}: merged {merged} face pairs")

    # last pass: facet vertices, merging the two edges through each
    for n, poly in enumerate(polygons):
        if poly is None:
            continue
        kept = [v for v in poly if not (v[0] == "a" and v[1] in facet_verts)]
        if len(kept) < 3:
            raise GlueError(f"face {n} collapsed while removing facet vertices")
        polygons[n] = kept
    report.deleted.append(len(facet_verts))
    report.merged.append(len(facet_verts))

    return _compact(X, Y, polygons, cells, alias, cell_alias, facet_verts, key_a, key_b, report)


def _adjacent(poly: list, x1, x2) -> bool:
    i = poly.index(x1)
    n = len(poly)
    return poly[(i + 1) % n] == x2 or poly[i - 1] == x2


def _resolve(alias: dict[int, int], n: int) -> int:
    while n in alias:
        n = alias[n]
    return n


def _compact(X, Y, polygons, cells, alias, cell_alias, facet_verts, key_a, key_b, report) -> GlueResult:
    d = X.dim
    order = [key_a(v) for v in range(X.count(0)) if v not in facet_verts]
    order += [("b", w) for w in range(Y.count(0)) if key_b(w)[0] == "b"]
    vpos = {k: n for n, k in enumerate(order)}
    vertex_map_a = {v: vpos[key_a(v)] for v in range(X.count(0)) if v not in facet_verts}
    vertex_map_b = {w: vpos[key_b(w)] for w in range(Y.count(0)) if key_b(w) in vpos}
    live = [n for n, poly in enumerate(polygons) if poly is not None]
    ppos = {n: i for i, n in enumerate(live)}
    nxp, nc = X.count(2), (X.count(3) if d == 3 else 0)
    labels: dict[int, dict[int, str]] = {}

    if d == 3:
        live_cells = [n for n, c in enumerate(cells) if c is not None]
        cpos = {n: i for i, n in enumerate(live_cells)}
        cell_lists = [sorted({ppos[_resolve(alias, p)] for p in cells[n]}) for n in live_cells]
        cell_map_a = {c: cpos[_resolve(cell_alias, c)] for c in range(nc) if _resolve(cell_alias, c) in cpos}
        cell_map_b = {
            c: cpos[_resolve(cell_alias, nc + c)]
            for c in range(Y.count(3)) if _resolve(cell_alias, nc + c) in cpos
        }
        result = IncidenceComplex.from_polygons([polygons[n] for n in live], cell_lists, vertex_order=order)
    else:
        cell_map_a = {p: ppos[_resolve(alias, p)] for p in range(nxp) if _resolve(alias, p) in ppos}
        cell_map_b = {
            p: ppos[_resolve(alias, nxp + p)]
            for p in range(Y.count(2)) if _resolve(alias, nxp + p) in ppos
        }
        result = IncidenceComplex.from_polygons([polygons[n] for n in live], vertex_order=order)

    tops: dict[int, list[str]] = {}
    for src, amap in ((X, cell_map_a), (Y, cell_map_b)):
        for old, new in amap.items():
            text = src.label(d, old)
            if text is not None:
                tops.setdefault(new, []).append(text)
    if tops:
        labels[d] = {n: "|".join(parts) for n, parts in tops.items()}
        result = result.with_labels(labels)

    check = KernelService.validate_simple_closed(result, d)
    if not check.passed:
        raise GlueError(f"glued complex is not closed and simple: {check.violations[0]}")
    logger.info(f"glue_and_flatten: {KernelService.f_vector(result).as_tuple()}")
    return GlueResult(result, vertex_map_a, vertex_map_b, cell_map_a, cell_map_b, report)
