"""Edge colorings of multigraphs, maximal k-colorable subgraphs, and their
deficiency bounds, with triangle-packing applications on joins."""

from .graph import Multigraph, build, loads, dumps
from .coloring import PartialColoring, is_proper
from .exact import (chromatic_index, decide_k_colorable, maximal_colorable_subgraph,
                    all_maximal_subgraphs)

__all__ = ["Multigraph", "build", "loads", "dumps", "PartialColoring", "is_proper",
           "chromatic_index", "decide_k_colorable", "maximal_colorable_subgraph",
           "all_maximal_subgraphs"]
