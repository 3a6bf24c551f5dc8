from typing import Dict, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class BarrelSpec(BaseModel):
    """桶形多面体参数"""
    i: int = Field(ge=3)


class LayeredBarrelSpec(BaseModel):
    """分层桶形多面体参数"""
    i: int = Field(ge=3)
    layers: int = Field(default=0, ge=0)


class PolyhexSpec(BaseModel):
    """六边形镶嵌商空间参数

    Torus: the lattice spanned by a and b. Klein bottle (twist=True): a = (c, 0)
    is a translation and b = (p, q) the glide (x, y) -> (-x - y + p, y + q).
    """
    a: Tuple[int, int]
    b: Tuple[int, int]
    twist: bool = False

    @model_validator(mode="after")
    def _check_basis(self):
        if self.twist:
            if self.a[1] != 0 or self.a[0] <= 0 or self.b[1] <= 0:
                raise ValueError("Klein basis needs a = (c, 0) with c > 0 and b = (p, q) with q > 0")
        elif self.a[0] * self.b[1] - self.a[1] * self.b[0] == 0:
            raise ValueError(f"basis vectors {self.a} and {self.b} are dependent")
        return self

    @property
    def hexagons(self) -> int:
        if self.twist:
            return self.a[0] * self.b[1]
        return abs(self.a[0] * self.b[1] - self.a[1] * self.b[0])


class BuildRequest(BaseModel):
    """构建请求参数"""
    params: Dict[str, int] = {}


class BuildResponse(BaseModel):
    """构建结果"""
    name: str
    fvector: list[int]
    p5: int
    p6: int
    format: str
    document: str
    note: Optional[str] = None
