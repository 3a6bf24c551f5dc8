from fastapi import APIRouter, HTTPException, Depends

from ..errors import ComplexError
from ..kernel import IncidenceComplex
from ..kernel import serialization as ser
from .census_model import CensusReport, CensusRequest, CompareRequest, IsomorphismResult
from .census_service import CensusService

router = APIRouter(prefix="/api", tags=["census"])

# 依赖注入
def get_census_service():
    return CensusService()

# API路由
@router.post("/census")
def census(
    request: CensusRequest,
    service: CensusService = Depends(get_census_service)
) -> CensusReport:
    """对三维复形的胞腔做同构分类统计"""
    try:
        X = ser.load(request.document)
        if not isinstance(X, IncidenceComplex):
            raise ComplexError("census needs a regular complex (CXC)")
        return service.census(X)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.post("/compare")
def compare(
    request: CompareRequest,
    service: CensusService = Depends(get_census_service)
) -> IsomorphismResult:
    """比较两个复形是否组合同构"""
    try:
        return service.compare(ser.load(request.document_a), ser.load(request.document_b))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
