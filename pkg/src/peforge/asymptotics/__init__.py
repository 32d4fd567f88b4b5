"""Boundary and origin structure of g_c and its c -> infinity and c -> 0 limits."""

from .constants import *  # noqa: F401,F403
from .constants import __all__ as _constants_all
from .identities import *  # noqa: F401,F403
from .identities import __all__ as _identities_all
from .tables import *  # noqa: F401,F403
from .tables import __all__ as _tables_all

__all__ = [*_constants_all, *_identities_all, *_tables_all]
