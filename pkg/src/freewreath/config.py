"""Resource caps for enumeration and sparse storage.

Defaults are overridable through environment variables (read once at import):

    FREEWREATH_ENUM_CAP    maximum number of ground points a partition/diagram
                           enumeration will accept (default 14)
    FREEWREATH_ENTRY_CAP   maximum number of stored nonzero entries in a sparse
                           linear map (default 10**7)

Exceeding a cap raises :class:`CapExceededError`, which the command line
interface maps to exit code 2.  Callers may also pass explicit ``cap=``
arguments to the enumeration functions to override per call.
"""

from __future__ import annotations

import os


class CapExceededError(Exception):
    """An enumeration or sparse object would exceed a configured resource cap."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


ENUM_CAP: int = _env_int("FREEWREATH_ENUM_CAP", 14)
ENTRY_CAP: int = _env_int("FREEWREATH_ENTRY_CAP", 10**7)


def check_enum_cap(points: int, cap: int | None = None) -> None:
    limit = ENUM_CAP if cap is None else cap
    if points > limit:
        raise CapExceededError(
            f"enumeration over {points} points exceeds the cap of {limit}"
        )


def check_entry_cap(entries: int, cap: int | None = None) -> None:
    limit = ENTRY_CAP if cap is None else cap
    if entries > limit:
        raise CapExceededError(
            f"sparse map with {entries} stored entries exceeds the cap of {limit}"
        )
