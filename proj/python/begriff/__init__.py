"""Python surface for the begriff kernel.

The extension module carries the implementation; this package re-exports it
and points the corpus discovery at the bundled scripts when installed as a
wheel.
"""

import os

try:
    from ._begriff import *  # noqa: F401,F403  (wheel layout)
    from . import _begriff as _impl
except ImportError:  # in-tree builds put the module directly on sys.path
    from _begriff import *  # noqa: F401,F403
    import _begriff as _impl

_bundled = os.path.join(os.path.dirname(__file__), "corpus")
if os.path.isdir(_bundled) and "BEGRIFF_CORPUS_DIR" not in os.environ:
    os.environ["BEGRIFF_CORPUS_DIR"] = _bundled

__all__ = [n for n in dir(_impl) if not n.startswith("_")]
