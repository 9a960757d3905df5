"""
Logging Setup Module
Lagroot - Certified Polynomial Root Finding

loguru sinks configured from config/logging.yaml. The console sink writes
to stderr; stdout belongs to command output.
"""

import sys
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from .config import get_config


DEFAULT_CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)
DEFAULT_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[name]}:{function}:{line} | {message}"

_FILE_SINKS = ('file', 'error_file')


class LoggerManager:
    """Owns the loguru sinks for one process."""

    def __init__(self, log_dir: Optional[str] = None):
        """
        Args:
            log_dir: Destination of file sinks, default <repo>/logs
        """
        self.log_dir = Path(log_dir) if log_dir else Path(__file__).resolve().parents[2] / "logs"
        self._configured = False

    @staticmethod
    def _sink_settings() -> Dict[str, Any]:
        try:
            return get_config().logging.get('logging', {}).get('handlers', {})
        except FileNotFoundError:
            return {}

    def setup(self, level: Optional[str] = None, console: bool = True) -> None:
        """
        Install the sinks once per process.

        Args:
            level: Console threshold; logging.yaml decides when omitted
            console: Attach the stderr sink
        """
        if self._configured:
            return

        sinks = self._sink_settings()
        stderr_cfg = sinks.get('console', {})

        logger.remove()
        logger.configure(extra={"name": "lagroot"})

        if console:
            logger.add(
                sys.stderr,
                level=level or stderr_cfg.get('level', 'WARNING'),
                format=stderr_cfg.get('format', DEFAULT_CONSOLE_FORMAT),
                colorize=stderr_cfg.get('colorize', True),
            )

        for sink in _FILE_SINKS:
            file_cfg = sinks.get(sink, {})
            if not file_cfg.get('enabled', False):
                continue
            self.log_dir.mkdir(parents=True, exist_ok=True)
            logger.add(
                self.log_dir / file_cfg.get('filename', f"{sink}_{{time:YYYY-MM-DD}}.log"),
                level=file_cfg.get('level', 'DEBUG'),
                format=file_cfg.get('format', DEFAULT_FILE_FORMAT),
                rotation=file_cfg.get('rotation', '100 MB'),
                retention=file_cfg.get('retention', '30 days'),
                compression=file_cfg.get('compression', 'zip'),
                encoding="utf-8",
            )

        self._configured = True
        logger.debug("logging sinks installed")

    def reconfigure(self, level: str, console: bool = True) -> None:
        """Replace the sinks, e.g. when the CLI raises verbosity."""
        self._configured = False
        self.setup(level=level, console=console)

    def get_logger(self, name: Optional[str] = None):
        """
        A loguru logger bound to name.

        Args:
            name: Usually the caller's __name__
        """
        self.setup()
        return logger.bind(name=name) if name else logger


_manager_instance: Optional[LoggerManager] = None


def _manager() -> LoggerManager:
    global _manager_instance
    if _manager_instance is None:
        _manager_instance = LoggerManager()
    return _manager_instance


def setup_logging(level: Optional[str] = None, console: bool = True, force: bool = False) -> None:
    """
    Configure process logging.

    Args:
        level: Console threshold
        console: Attach the stderr sink
        force: Drop the current sinks first
    """
    if force:
        _manager().reconfigure(level=level or "WARNING", console=console)
    else:
        _manager().setup(level=level, console=console)


def get_logger(name: Optional[str] = None):
    """Module-level shortcut for LoggerManager.get_logger."""
    return _manager().get_logger(name)
