# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Paired-domination solvers for block graphs and trees """

from .decomposition import (
    BlockDecomposition,
    EliminationOrdering,
    block_cut_decomposition,
    block_elimination_ordering,
    block_graph_blocks,
    check_closure_property,
    is_block_graph,
    is_tree,
    tree_elimination_ordering,
)
from .labelling import (
    LabellingResult,
    VertexLabels,
    mpdb,
    mpdt,
    solve_block_graph,
    solve_tree,
    solve_with_labels,
)
