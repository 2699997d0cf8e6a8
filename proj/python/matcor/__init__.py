"""Exact matroid correlation toolkit."""

from ._matcor import *  # noqa: F401,F403
from ._matcor import (
    CapacityError,
    CertificateError,
    ConfigError,
    DomainError,
    Error,
    InputError,
    Matroid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
