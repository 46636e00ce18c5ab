import logging

from pythonjsonlogger.json import JsonFormatter

from app.config import get_settings

# ==========================
# LOGGING CONFIG
# ==========================
_settings = get_settings()

_handler = logging.StreamHandler()
if _settings.LOG_FORMAT.lower() == "json":
    _handler.setFormatter(
        JsonFormatter("%(asctime)s %(levelname)s %(name)s %(message)s")
    )
else:
    _handler.setFormatter(logging.Formatter("%(asctime)s | %(levelname)s | %(message)s"))

logging.basicConfig(
    level="DEBUG" if _settings.DEBUG else _settings.LOG_LEVEL.upper(),
    handlers=[_handler],
)

logger = logging.getLogger("orbgrand")
