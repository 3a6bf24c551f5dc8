from fastapi import APIRouter, HTTPException, Depends

from ..kernel import serialization as ser
from .export_service import ExportService
from .verify_model import ExportRequest, VerifyTableRequest, VerifyTableResponse
from .verify_service import VerifyService

router = APIRouter(prefix="/api", tags=["verify"])

# 依赖注入
def get_verify_service():
    return VerifyService()

# API路由
@router.post("/verify-table")
def verify_table(
    request: VerifyTableRequest,
    service: VerifyService = Depends(get_verify_service)
) -> VerifyTableResponse:
    """按表格公式验证各构造"""
    try:
        records = service.verify_table(request.rows, request.deep)
        return VerifyTableResponse(records=records, passed=all(r.passed for r in records))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.post("/export")
def export(request: ExportRequest) -> dict:
    """导出为指定格式"""
    try:
        body = ExportService.export(ser.load(request.document), request.format, request.strict)
        return {"format": request.format, "document": body}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
