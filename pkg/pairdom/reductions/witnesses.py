# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Witness maps between vertex covers of a source graph and paired-dominating
    sets of its constructed graph, in both directions.
"""

import logging
from typing import Dict, Iterable, Optional, Set, Tuple

from pairdom.common.errors import PairdomInputError
from pairdom.common.graph import PairedSolution, is_vertex_cover, verify_paired_dominating

from .constructions import TAG_E1, VARIANT_BIPARTITE, ReductionOutput


def vc_to_pd_witness(reduction: ReductionOutput, cover: Iterable[int]) -> PairedSolution:
    """ Lifts a vertex cover of size k to a paired-dominating set of size 2k,
        pairing both copies of every cover vertex.

        Arguments:
            reduction: the constructed instance
            cover: a vertex cover of the source graph

        Returns:
            the PairedSolution on the constructed graph
    """
    members = sorted(set(cover))
    try:
        valid = is_vertex_cover(reduction.source, members)
    except PairdomInputError as err:
        raise PairdomInputError(f"invalid vertex cover: {err}") from err
    if not valid:
        raise PairdomInputError(f"{members} is not a vertex cover of the source graph")
    solution = PairedSolution.from_pairs((reduction.v1(vertex), reduction.v2(vertex))
                                         for vertex in members)
    assert verify_paired_dominating(reduction.gprime, solution), "lifted cover does not dominate"
    return solution


def _unused_copy(reduction: ReductionOutput, chosen: Set[int], first_copy: bool) -> Optional[int]:
    n = reduction.source.n
    for vertex in range(1, n + 1):
        candidate = reduction.v1(vertex) if first_copy else reduction.v2(vertex)
        if candidate not in chosen:
            return candidate
    return None


def _normalise(reduction: ReductionOutput, solution: PairedSolution) -> Dict[int, int]:
    """ Swaps every edge copy in a paired-dominating set for an unused vertex
        copy, keeping its partner. Returns the resulting partner map.
    """
    partner: Dict[int, int] = {}
    for first, second in solution.pairs:
        partner[first] = second
        partner[second] = first
    chosen = set(partner)
    for vertex in sorted(partner):
        tag = reduction.tag_of(vertex)
        if tag.is_vertex_copy:
            continue
        # an E1 copy hangs off V1, so the replacement comes from V2, and vice versa
        replacement = _unused_copy(reduction, chosen, first_copy=tag.tag != TAG_E1)
        if replacement is None and reduction.variant != VARIANT_BIPARTITE:
            replacement = _unused_copy(reduction, chosen, first_copy=tag.tag == TAG_E1)
        assert replacement is not None, f"no unused vertex copy to replace {vertex}"
        mate = partner.pop(vertex)
        chosen.discard(vertex)
        chosen.add(replacement)
        partner[replacement] = mate
        partner[mate] = replacement
        logging.debug("replaced edge copy %d with vertex copy %d", vertex, replacement)
    return partner


def pd_to_vc_witness(reduction: ReductionOutput, solution: PairedSolution) -> Tuple[int, ...]:
    """ Projects a paired-dominating set of the constructed graph down to a
        vertex cover of the source of at most half its size.

        Edge copies are first swapped for unused vertex copies. The cover is
        then the first copies in the set for the bipartite construction, or
        the smaller of the first and second copies for the split construction.
        A set with at least 2n vertices maps to the whole source vertex set.

        Arguments:
            reduction: the constructed instance
            solution: a paired-dominating set of the constructed graph

        Returns:
            the cover, ascending
    """
    verdict = verify_paired_dominating(reduction.gprime, solution)
    if not verdict:
        raise PairdomInputError(f"not a paired-dominating set of the constructed graph:"
                                f" {verdict.reason} {verdict.detail}".rstrip())
    n = reduction.source.n
    if solution.size // 2 >= n:
        return tuple(range(1, n + 1))

    partner = _normalise(reduction, solution)
    normalised = PairedSolution.from_pairs((vertex, mate) for vertex, mate in partner.items()
                                           if vertex < mate)
    assert verify_paired_dominating(reduction.gprime, normalised), "normalisation broke the set"

    first = tuple(sorted(vertex for vertex in partner if vertex <= n))
    second = tuple(sorted(vertex - n for vertex in partner if n < vertex <= 2 * n))
    if reduction.variant == VARIANT_BIPARTITE or len(first) <= len(second):
        cover = first
    else:
        cover = second
    assert is_vertex_cover(reduction.source, cover), "projected set is not a cover"
    return cover
