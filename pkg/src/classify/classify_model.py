from enum import Enum
from typing import List, Optional

from pydantic import BaseModel


class SurfaceType(str, Enum):
    SPHERE = "sphere"
    TORUS = "torus"
    PROJECTIVE_PLANE = "projective-plane"
    KLEIN_BOTTLE = "klein-bottle"


# 允许的 (曲面, 五边形数) 组合
ADMISSIBLE = {
    SurfaceType.SPHERE: 12,
    SurfaceType.TORUS: 0,
    SurfaceType.PROJECTIVE_PLANE: 6,
    SurfaceType.KLEIN_BOTTLE: 0,
}


class SurfaceClass(BaseModel):
    """3-富勒烯分类结果"""
    surface: Optional[SurfaceType] = None
    p5: int
    p6: int
    euler_characteristic: int
    orientable: bool
    rejection: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.surface is not None and self.rejection is None


class ClassifyRequest(BaseModel):
    """分类请求 (CXC 或 CXF 文本)"""
    document: str


class SymmetryRequest(BaseModel):
    """中心对称检查请求"""
    document: str
    sigma: Optional[List[int]] = None


class SymmetryResult(BaseModel):
    """中心对称检查结果"""
    symmetric: bool
    vertices: int
    sigma: Optional[List[int]] = None
