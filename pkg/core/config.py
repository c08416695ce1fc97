import argparse
import logging
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from models.domain import Tolerance

MACHINE_EPS = 2.220446049250313e-16

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseModel):
    """Process-wide settings, read once from the environment."""

    tolerance: float = Field(default=1e-12, gt=0, lt=1)
    max_iter: int = Field(default=200, ge=1)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    overrides = {}
    if "GELLIPTIC_TOL" in os.environ:
        overrides["tolerance"] = os.environ["GELLIPTIC_TOL"]
    if "GELLIPTIC_MAX_ITER" in os.environ:
        overrides["max_iter"] = os.environ["GELLIPTIC_MAX_ITER"]
    if "GELLIPTIC_LOG_LEVEL" in os.environ:
        overrides["log_level"] = os.environ["GELLIPTIC_LOG_LEVEL"]
    return Settings(**overrides)


def default_tolerance() -> Tolerance:
    settings = get_settings()
    return Tolerance(rel=settings.tolerance, abs=settings.tolerance, max_iter=settings.max_iter)


def inversion_tolerance() -> Tolerance:
    """Tolerance for inverting arcsin_pq / arcsn_pq: brackets close to a few ulps."""
    settings = get_settings()
    return Tolerance(rel=4 * MACHINE_EPS, abs=settings.tolerance * 1e-3, max_iter=settings.max_iter)


def configure_logging(level: Optional[str] = None) -> None:
    level = (level or get_settings().log_level).upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"unknown log level {level!r}")
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelliptic",
        description=(
            "Generalized trigonometric and Jacobian elliptic functions, and the "
            "closed-form spectra of p-Laplacian eigenvalue problems built on them"
        ),
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="logging level (default: GELLIPTIC_LOG_LEVEL or WARNING)",
    )
    return parser
