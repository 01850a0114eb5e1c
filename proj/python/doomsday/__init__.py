"""Day-of-week calculation with the Doomsday rule.

The C++ engine lives in the ``_doomsday`` extension; this package re-exports it.
"""

from ._doomsday import *  # noqa: F401,F403
from ._doomsday import Method, CalendarDate, __doc__  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
