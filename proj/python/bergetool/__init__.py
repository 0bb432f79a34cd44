"""Berge path/cycle analysis for r-uniform hypergraphs.

Thin wrapper re-exporting the compiled extension module.
"""

from ._bergetool import *  # noqa: F401,F403
from ._bergetool import __doc__  # noqa: F401
