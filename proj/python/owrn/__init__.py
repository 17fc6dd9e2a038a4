"""One-way road networks.

Exact collision simulation on directed grid networks, maximum
collision-free traffic subsets (exact and bipartite routes), conflict-graph
gadget construction with per-instance certification, and turn-bounded
shortest paths.
"""

from owrn._core import *  # noqa: F401,F403
from owrn._core import __version__  # noqa: F401
