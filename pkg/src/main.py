import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .config import AppConfig, setup_logging
from .builders.builders_api import router as builders_router
from .census.census_api import router as census_router
from .classify.classify_api import router as classify_router
from .constructions.constructions_api import router as constructions_router
from .verify.verify_api import router as verify_router

# 初始化日志
setup_logging()

# 创建 FastAPI 应用
app = FastAPI(
    title="cellforge",
    description="Construction kit for d-fullerenes: builders, constructions, census and verification",
    version="0.1.0"
)

# 添加 CORS 中间件
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# 注册路由
app.include_router(builders_router)
app.include_router(constructions_router)
app.include_router(census_router)
app.include_router(classify_router)
app.include_router(verify_router)

# 异常处理
@app.exception_handler(Exception)
async def global_exception_handler(request, exc):
    return JSONResponse(status_code=500, content={"detail": str(exc)})

# 启动服务器
if __name__ == "__main__":
    uvicorn.run(
        "src.main:app",
        host=AppConfig.HOST,
        port=AppConfig.PORT,
        reload=AppConfig.DEBUG
    )
