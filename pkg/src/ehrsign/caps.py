"""Resource-cap configuration.

Caps guard the two potentially expensive operations: coset enumeration for
simplex series numerators (bounded by normalized volume) and brute-force
lattice-point counting (bounded by estimated candidate visits).  Defaults can
be overridden per call or through environment variables.
"""

from __future__ import annotations

import os

DEFAULT_VOLUME_CAP = 10**6
DEFAULT_WORK_CAP = 10**8

VOLUME_CAP_ENV = "EHRSIGN_VOLUME_CAP"
WORK_CAP_ENV = "EHRSIGN_WORK_CAP"


def _from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


def volume_cap(override: int | None = None) -> int:
    """Maximum normalized simplex volume accepted by the series-numerator path."""
    if override is not None:
        return override
    return _from_env(VOLUME_CAP_ENV, DEFAULT_VOLUME_CAP)


def work_cap(override: int | None = None) -> int:
    """Maximum candidate visits accepted by a brute-force count."""
    if override is not None:
        return override
    return _from_env(WORK_CAP_ENV, DEFAULT_WORK_CAP)
