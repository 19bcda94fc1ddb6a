"""Temporal horizontal visibility graphs for publication streams."""

from ._thvg import *  # noqa: F401,F403
from ._thvg import __version__  # noqa: F401
