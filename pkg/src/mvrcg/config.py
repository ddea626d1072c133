"""Size caps for the exponential enumerations.

``MVRCG_MAX_N`` overrides the default cap used by the separation-model,
closure and marginal-oracle routines.
"""

from __future__ import annotations

import os

DEFAULT_MODEL_CAP = 7       # ground set for separation models and closures
DEFAULT_MARGINAL_CAP = 6    # observed vertices for the latent-DAG oracle
DEFAULT_SUBSET_CAP = 12     # per-component / per-prefix subset enumeration
ENUMERATION_CAP = 6         # exhaustive graph enumeration
HARD_MODEL_CAP = 13         # the closure bitmap has 4**n slots


def model_cap(override: int | None = None) -> int:
    if override is not None:
        return min(override, HARD_MODEL_CAP)
    env = os.environ.get("MVRCG_MAX_N")
    if env:
        return min(int(env), HARD_MODEL_CAP)
    return DEFAULT_MODEL_CAP


def marginal_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("MVRCG_MAX_N")
    if env:
        return int(env)
    return DEFAULT_MARGINAL_CAP
