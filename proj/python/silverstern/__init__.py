"""Exact analysis of Stern-type digital sequences over Z[sqrt(2)].

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports it unchanged.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
