from fastapi import APIRouter, HTTPException, Depends

from ..kernel import KernelService
from ..kernel import serialization as ser
from .builders_model import BuildRequest, BuildResponse
from .builders_service import BuildersService

router = APIRouter(prefix="/api", tags=["builders"])

# 依赖注入
def get_builders_service():
    return BuildersService()

# API路由
@router.post("/build/{name}")
def build(
    name: str,
    request: BuildRequest | None = None,
    service: BuildersService = Depends(get_builders_service)
) -> BuildResponse:
    """构建种子复形"""
    try:
        X = service.build(name, request.params if request else {})
        fmt, document = ser.dump(X)
        fv = KernelService.f_vector(X)
        note = "flag view only (quotient is not a regular complex)" if fmt == "cxf" else None
        return BuildResponse(
            name=name, fvector=fv.counts, p5=fv.p5, p6=fv.p6, format=fmt, document=document, note=note
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
