# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Vertex cover reductions showing paired domination stays hard on bipartite,
    chordal and split graphs
"""

from .constructions import (
    VARIANTS,
    ReductionOutput,
    VertexTag,
    build_reduction,
    check_bipartite,
    check_split_partition,
    is_chordal,
    reduce_bipartite,
    reduce_split,
)
from .witnesses import pd_to_vc_witness, vc_to_pd_witness
