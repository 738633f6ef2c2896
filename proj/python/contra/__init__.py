"""Observer-relative entities, intelligence and contradiction in cellular automata."""

from ._contra import *  # noqa: F401,F403
from ._contra import DEFAULT_SEED

__all__ = [name for name in dir() if not name.startswith("_")]
