from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class VerificationRecord(BaseModel):
    """单行验证记录: 期望值 (来自表格公式) 与实测值"""
    name: str
    params: Dict[str, Any] = {}
    expected_fvector: List[int] = []
    observed_fvector: List[int] = []
    expected_census: Dict[str, int] = {}
    observed_census: Dict[str, int] = {}
    expected_hexagons: Optional[int] = None
    observed_hexagons: Optional[int] = None
    identities: Dict[str, bool] = {}
    passed: bool = False
    error: Optional[str] = None
    duration: float = 0.0


class VerifyTableRequest(BaseModel):
    """验证表请求"""
    rows: Optional[List[str]] = None
    deep: bool = False


class VerifyTableResponse(BaseModel):
    """验证表结果"""
    records: List[VerificationRecord]
    passed: bool


class PipelineStep(BaseModel):
    """流水线单步记录"""
    line: int
    text: str
    op: str
    inputs: Dict[str, str] = {}
    outputs: Dict[str, str] = {}
    result: Optional[Any] = None


class PipelineManifest(BaseModel):
    """流水线清单 (哈希基于规范序列化)"""
    digest_algorithm: str = "sha256"
    steps: List[PipelineStep] = Field(default_factory=list)


class ExportRequest(BaseModel):
    """导出请求"""
    document: str
    format: str
    strict: bool = False
