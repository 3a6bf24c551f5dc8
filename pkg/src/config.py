import logging
import os


class AppConfig:
    # 应用配置
    DEBUG = os.getenv("DEBUG", "False").lower() == "true"
    HOST = os.getenv("HOST", "0.0.0.0")
    PORT = int(os.getenv("PORT", "8000"))

    # 日志
    LOG_LEVEL = os.getenv("CELLFORGE_LOG_LEVEL", "INFO").upper()

    # 输出目录 (pipeline 中间结果与 manifest)
    OUTPUT_DIR = os.getenv("CELLFORGE_OUTPUT_DIR", "./cellforge_out")

    # 构造与验证
    DEEP = os.getenv("CELLFORGE_DEEP", "False").lower() == "true"
    SEARCH_LIMIT = int(os.getenv("CELLFORGE_SEARCH_LIMIT", "60"))
    VERIFY_WORKERS = int(os.getenv("CELLFORGE_VERIFY_WORKERS", "1"))

    # 确保目录存在
    os.makedirs(OUTPUT_DIR, exist_ok=True)


def setup_logging(level: str | None = None) -> None:
    """设置日志"""
    logging.basicConfig(
        level=getattr(logging, (level or AppConfig.LOG_LEVEL), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
