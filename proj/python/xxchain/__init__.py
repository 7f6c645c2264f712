"""Exact solver for the open-boundary spin-1/2 XX chain in a transverse field.

All operations are thin wrappers over the compiled core. Sites and modes
are 1-based, matching the CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
from ._core import __version__  # noqa: F401
from ._core import oracle  # noqa: F401
