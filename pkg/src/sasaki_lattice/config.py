import os
from dataclasses import dataclass

from .errors import TooLarge

ENV_CAP = "SASAKI_LATTICE_CAP"
DEFAULT_ENUM_CAP = 64
DEFAULT_TABLE_CAP = 10**6
DEFAULT_SEED = 20090710
DEFAULT_DEPTH_CAP = 16


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    cap: int | None = None
    jobs: int = 1


def enumeration_cap(override=None):
    """Element-count cap for exhaustive enumerations.

    Priority: explicit override, then ``$SASAKI_LATTICE_CAP``, then 64.
    """
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_CAP)
    if env:
        return int(env)
    return DEFAULT_ENUM_CAP


def require_small(L, cap=None, what="enumeration"):
    limit = enumeration_cap(cap)
    if L.n > limit:
        raise TooLarge(f"{what} over {L.n} elements exceeds cap {limit}; "
                       f"raise it with --cap or ${ENV_CAP}")
