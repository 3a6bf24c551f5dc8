from enum import Enum
from typing import List

from pydantic import BaseModel, Field, model_validator


class CellRef(BaseModel):
    """单元引用"""
    rank: int = Field(ge=0)
    id: int = Field(ge=0)


class FVector(BaseModel):
    """f-向量与二维面的边数分布"""
    counts: List[int]
    p5: int = 0
    p6: int = 0
    p_other: int = 0

    @model_validator(mode="after")
    def _gonality_sums_to_faces(self):
        if len(self.counts) > 2 and self.p5 + self.p6 + self.p_other != self.counts[2]:
            raise ValueError(
                f"gonality breakdown {self.p5}+{self.p6}+{self.p_other} != {self.counts[2]} 2-faces"
            )
        return self

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.counts)

    @property
    def v(self) -> int:
        return self.counts[0]

    @property
    def e(self) -> int:
        return self.counts[1]

    @property
    def p(self) -> int:
        return self.counts[2]

    @property
    def q(self) -> int:
        return self.counts[3] if len(self.counts) > 3 else 0


class ValidationReport(BaseModel):
    """结构校验结果"""
    passed: bool
    violations: List[str] = []


class Orientability(str, Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"


class OrientabilityReport(BaseModel):
    """可定向性 (按连通分支)"""
    components: List[Orientability]

    @property
    def orientable(self) -> bool:
        return all(c == Orientability.ORIENTABLE for c in self.components)

    @property
    def value(self) -> Orientability:
        return Orientability.ORIENTABLE if self.orientable else Orientability.NONORIENTABLE
