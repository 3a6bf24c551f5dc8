from fastapi import APIRouter, HTTPException, Depends

from ..errors import ComplexError
from ..kernel import IncidenceComplex
from ..kernel import serialization as ser
from .classify_model import ClassifyRequest, SurfaceClass, SymmetryRequest, SymmetryResult
from .classify_service import ClassifyService

router = APIRouter(prefix="/api", tags=["classify"])

# 依赖注入
def get_classify_service():
    return ClassifyService()

# API路由
@router.post("/classify")
def classify(
    request: ClassifyRequest,
    service: ClassifyService = Depends(get_classify_service)
) -> SurfaceClass:
    """判定 3-富勒烯所在的曲面"""
    try:
        return service.classify_3fullerene(ser.load(request.document))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.post("/central-symmetry")
def central_symmetry(
    request: SymmetryRequest,
    service: ClassifyService = Depends(get_classify_service)
) -> SymmetryResult:
    """检查 (或搜索) 中心对称对合"""
    try:
        F = ser.load(request.document)
        if not isinstance(F, IncidenceComplex):
            raise ComplexError("central symmetry needs a regular complex (CXC)")
        sigma = request.sigma if request.sigma is not None else service.find_central_symmetry(F)
        symmetric = sigma is not None and service.check_centrally_symmetric(F, sigma)
        return SymmetryResult(symmetric=symmetric, vertices=F.count(0), sigma=sigma)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
