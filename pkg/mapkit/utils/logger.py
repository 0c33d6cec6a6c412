from aiologger.levels import LogLevel
from aiologger.loggers.json import JsonLogger

logger = JsonLogger.with_default_handlers(name="mapkit", level=LogLevel.ERROR)


def setup_logger(level: str = "ERROR"):
    level = {
        "CRITICAL": LogLevel.CRITICAL,
        "ERROR": LogLevel.ERROR,
        "WARNING": LogLevel.WARNING,
        "INFO": LogLevel.INFO,
        "DEBUG": LogLevel.DEBUG,
        "NOTSET": LogLevel.NOTSET,
    }.get(level, LogLevel.INFO)

    logger.level = level
    for handler in logger.handlers:
        handler.level = level
