import logging
import sys

from lenscontact.core.config import settings

_configured = False


def configure_logging(level: str = None) -> None:
    global _configured
    if _configured:
        return
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    _configured = True
