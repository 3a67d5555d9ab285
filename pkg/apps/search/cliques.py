"""
Candidate pairs (S, Phi) and the compatibility graph behind max-k search

A pair is a vertex when S Phi meets S only in 0 (for r = 2 this is the
direct sum S + S Phi = F^ell). Two vertices are adjacent when each operator
fixes the other's subspace. A clique is exactly a system satisfying the
helper-independent conditions, so max-k search is max-clique search.
Vertex ids follow (subspace order, matrix order); sets of vertices are
Python ints used as bitsets.
"""
import functools
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.utils import ensure_within
from ..ffalg.fields import field_make
from ..ffalg.subspaces import subspace_apply, subspace_intersect
from . import exceptions as e
from .enumeration import enumerate_invertible, enumerate_subspaces, sample_invertible


logger = logging.getLogger(__name__)


def popcount(bits):
    return bin(bits).count('1')


@dataclass(frozen=True, eq=False)
class CandidateTable:
    subspaces: Tuple[object, ...]
    matrices: Tuple[object, ...]
    vertices: Tuple[Tuple[int, int], ...]
    neighbours: Tuple[int, ...]

    @property
    def size(self):
        return len(self.vertices)


def _build_table(field, ell, r, samples, seed):
    subspaces = enumerate_subspaces(ell, ell // r, field)
    if samples is None:
        matrices = enumerate_invertible(ell, field)
    else:
        matrices = sample_invertible(ell, field, samples, np.random.default_rng(seed))
    ensure_within(len(subspaces) * len(matrices), 'candidate', error_class=e.TooLarge,
                  what='candidate pairs')

    # fixes[m]: subspace indices s with S_s Phi_m = S_s
    fixes = [[] for _ in matrices]
    vertices = []
    for s, subspace in enumerate(subspaces):
        for m, matrix in enumerate(matrices):
            image = subspace_apply(subspace, matrix)
            if image == subspace:
                fixes[m].append(s)
            elif subspace_intersect(image, subspace).is_zero():
                vertices.append((s, m))

    # by_pair[s_b][s_a]: vertices on subspace s_b whose operator fixes s_a
    by_pair = [[0] * len(subspaces) for _ in subspaces]
    for v, (s, m) in enumerate(vertices):
        for fixed in fixes[m]:
            by_pair[s][fixed] |= 1 << v

    neighbours = []
    for s, m in vertices:
        bits = 0
        for fixed in fixes[m]:
            bits |= by_pair[fixed][s]
        neighbours.append(bits)

    logger.info('candidate table over %s: %d subspaces, %d operators, %d vertices',
                field, len(subspaces), len(matrices), len(vertices))
    return CandidateTable(
        subspaces=tuple(subspaces), matrices=tuple(matrices),
        vertices=tuple(vertices), neighbours=tuple(neighbours),
    )


@functools.lru_cache(maxsize=16)
def candidate_table(field, ell, r, samples=None, seed=0):
    return _build_table(field, ell, r, samples, seed)


def table_from_payload(payload):
    spec = payload['field']
    field = field_make(spec['p'], spec['m'], spec['reduction'])
    return candidate_table(field, payload['ell'], payload['r'], payload['samples'], payload['seed'])


def explore_branch(table, root, budget):
    """Largest clique whose smallest vertex is `root`

    Vertices are added in increasing id order, so the first largest clique
    found is the lexicographically smallest one. Returns the clique, the
    expansions spent and whether the branch was finished within budget.
    """
    best = (root,)
    expansions = 0
    complete = True

    def expand(clique, candidates):
        nonlocal best, expansions, complete
        if len(clique) > len(best):
            best = tuple(clique)
        while candidates:
            if len(clique) + popcount(candidates) <= len(best):
                return
            if expansions >= budget:
                complete = False
                return
            expansions += 1
            lowest = candidates & -candidates
            vertex = lowest.bit_length() - 1
            candidates ^= lowest
            expand(clique + [vertex], candidates & table.neighbours[vertex])

    above = (table.neighbours[root] >> (root + 1)) << (root + 1)
    expand([root], above)
    return best, expansions, complete
