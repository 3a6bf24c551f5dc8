from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..kernel import CellRef, IncidenceComplex


class GlueSite(BaseModel):
    """粘合位置: 两个复形及待识别的顶维胞腔"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    complex_a: IncidenceComplex
    complex_b: IncidenceComplex
    facet_a: CellRef
    facet_b: CellRef
    # vertex of facet_a -> vertex of facet_b; None picks a face-respecting matching
    iso: Optional[Dict[int, int]] = None

    @model_validator(mode="after")
    def _check_ranks(self):
        if self.complex_a.dim != self.complex_b.dim:
            raise ValueError(f"cannot glue rank {self.complex_a.dim} to rank {self.complex_b.dim}")
        for ref, X in ((self.facet_a, self.complex_a), (self.facet_b, self.complex_b)):
            if ref.rank != X.dim or ref.id >= X.count(X.dim):
                raise ValueError(f"facet {ref} is not a top cell of its complex")
        return self


class GlueReport(BaseModel):
    """粘合各合并步骤删除的胞腔数"""
    facet_rank: int
    deleted: List[int] = Field(default_factory=list)
    merged: List[int] = Field(default_factory=list)


@dataclass(frozen=True)
class GlueResult:
    complex: IncidenceComplex
    vertex_map_a: Dict[int, int]
    vertex_map_b: Dict[int, int]
    cell_map_a: Dict[int, int]
    cell_map_b: Dict[int, int]
    report: GlueReport


class FacetPairing(BaseModel):
    """面配对: (面, 面, 扭转) 列表"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    polyhedron: IncidenceComplex
    pairs: List[Tuple[int, int, int]]
    # vertex involution of the polyhedron giving the untwisted matching; None searches for one
    antipode: Optional[List[int]] = None

    @model_validator(mode="after")
    def _check_matching(self):
        if self.polyhedron.dim != 2:
            raise ValueError("facet pairing needs a rank-2 polyhedron")
        seen: list[int] = []
        for f, g, _ in self.pairs:
            seen += [f, g]
        if sorted(seen) != list(range(self.polyhedron.count(2))):
            raise ValueError("pairs do not form a perfect matching on the faces")
        return self


class TwistRow(BaseModel):
    """扭转回归表的一行"""
    tenths: int
    steps: int
    fvector: List[int]
    euler_characteristic: int
    manifold: bool


class ConstructRequest(BaseModel):
    """构造请求: 输入复形 (CXC/CXF 文本) 与参数"""
    document: Optional[str] = None
    params: Dict[str, Any] = {}


class ConstructResponse(BaseModel):
    """构造结果"""
    kind: str
    fvector: List[int]
    p5: int
    p6: int
    format: str
    document: str
