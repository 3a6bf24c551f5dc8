from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class CanonicalCertificate(BaseModel):
    """规范证书"""
    model_config = ConfigDict(frozen=True)

    scheme: str
    digest: str


class CensusEntry(BaseModel):
    """胞腔类型统计条目"""
    name: str
    certificate: str
    fvector: List[int]
    gonality: Dict[int, int] = {}
    count: int


class CensusReport(BaseModel):
    """胞腔普查报告"""
    entries: List[CensusEntry]
    total: int

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for entry in self.entries:
            out[entry.name] = out.get(entry.name, 0) + entry.count
        return out

    def unknown(self) -> List[CensusEntry]:
        return [e for e in self.entries if e.name == "unknown"]


class IsomorphismResult(BaseModel):
    """同构判定结果"""
    isomorphic: bool
    certificate_a: Optional[str] = None
    certificate_b: Optional[str] = None


class CensusRequest(BaseModel):
    """普查请求 (CXC 文本)"""
    document: str


class CompareRequest(BaseModel):
    """同构比较请求"""
    document_a: str
    document_b: str
