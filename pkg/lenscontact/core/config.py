import os
from dotenv import load_dotenv

from lenscontact import __version__

load_dotenv()


class Settings:
    PROJECT_NAME: str = "lenscontact"
    VERSION: str = __version__

    # Enumeration
    MAX_STRUCTURES: int = int(os.getenv("LENSCONTACT_MAX_STRUCTURES", "1000000"))

    # Sweeps
    WORKERS: int = int(os.getenv("LENSCONTACT_WORKERS", "1"))
    CERT_DIR: str = os.getenv("LENSCONTACT_CERT_DIR", "certificates")

    # Logging (stderr only; stdout carries results)
    LOG_LEVEL: str = os.getenv("LENSCONTACT_LOG_LEVEL", "WARNING")

    # Fixed console width keeps human tables byte-stable
    TABLE_WIDTH: int = 120


settings = Settings()
