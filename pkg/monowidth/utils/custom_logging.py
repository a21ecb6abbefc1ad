"""Logging for monowidth runs: loguru sinks on stderr and in hydra's run directory, driven by the ``logging``
config group.

Standard output is left to the command results. Records of the standard library (pydot, networkx) are routed
through loguru so that ``logging.muted`` silences them as well.
"""

import logging
import sys

from beartype import beartype
from beartype.typing import Any
from hydra.core.hydra_config import HydraConfig
from loguru import logger as log
from omegaconf import DictConfig
from rich.console import Console
from rich.logging import RichHandler

LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[command]} | {name}:{line}\t| {message}"


@beartype
class InterceptHandler(logging.Handler):
    """Forward standard library records to loguru under the logger's own name."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = log.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = sys._getframe(6), 6
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        log.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


@beartype
def log_level(config: DictConfig) -> str:
    """``logging.level`` when set, otherwise ``DEBUG`` for ``debug=true`` runs and ``INFO`` else.

    Raises:
        ValueError: The configured level is not a loguru level.
    """

    level = config.logging.level
    if level is None:
        return "DEBUG" if config.get("debug") else "INFO"
    level = str(level).upper()
    if level not in LEVELS:
        raise ValueError(f"Unknown log level {level!r}, expected one of {', '.join(LEVELS)}")
    return level


@beartype
def log_handlers(config: DictConfig, log_file: str | None) -> list[dict[str, Any]]:
    """Loguru handler specs for a run: a rich stderr sink and, when ``log_file`` is given, a plain file sink."""

    level = log_level(config)
    handlers: list[dict[str, Any]] = [
        {
            "sink": RichHandler(
                level="DEBUG",
                console=Console(stderr=True),
                log_time_format="%Y-%m-%d %H:%M:%S",
                show_path=bool(config.get("debug")),
            ),
            "format": "{message}",
            "level": level,
        }
    ]
    if log_file is not None:
        handlers.append({"sink": log_file, "format": FILE_FORMAT, "level": level})
    return handlers


@beartype
def setup_custom_hydra_logging(config: DictConfig) -> None:
    """Configure loguru for a hydra run of ``config.command``.

    The log file is ``monowidth-<command>.log`` in hydra's output directory unless ``logging.file`` is false.

    Args:
        config (DictConfig): Hydra config object.
    """

    log_file = None
    if config.logging.file:
        hydra_config = HydraConfig.get()
        log_file = f"{hydra_config.runtime.output_dir}/monowidth-{config.command or 'none'}.log"

    log.configure(handlers=log_handlers(config, log_file), extra={"command": config.command or "-"})
    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    disable_logging_groups(list(config.logging.muted or []))
    log.debug(f"Logging at {log_level(config)}" + (f" to {log_file}" if log_file else " to stderr only"))


@beartype
def disable_logging_groups(logging_groups: str | list[str]) -> None:
    """Disable logging for modules, e.g. ``"pydot"``."""

    if isinstance(logging_groups, str):
        logging_groups = [logging_groups]

    for group in logging_groups:
        log.disable(group)
