from threetangle.utils.logger_m import logger

__all__ = ["logger"]
