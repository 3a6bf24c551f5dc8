from fastapi import APIRouter, HTTPException, Depends

from ..kernel import KernelService
from ..kernel import serialization as ser
from .constructions_model import ConstructRequest, ConstructResponse, TwistRow
from .constructions_service import ConstructionsService

router = APIRouter(prefix="/api", tags=["constructions"])

# 依赖注入
def get_constructions_service():
    return ConstructionsService()

# API路由
@router.post("/construct/{kind}")
def construct(
    kind: str,
    request: ConstructRequest,
    service: ConstructionsService = Depends(get_constructions_service)
) -> ConstructResponse:
    """对输入复形执行构造 (A, B, C, fold, quotient)"""
    try:
        X = ser.load(request.document) if request.document else None
        result = service.construct(kind, X, request.params)
        fmt, document = ser.dump(result)
        fv = KernelService.f_vector(result)
        return ConstructResponse(kind=kind, fvector=fv.counts, p5=fv.p5, p6=fv.p6, format=fmt, document=document)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.get("/twist-table")
def twist_table(
    service: ConstructionsService = Depends(get_constructions_service)
) -> list[TwistRow]:
    """十二面体对面粘合的扭转回归表"""
    return service.twist_table()
