"""
Encoding, MDS verification and naive reconstruction
"""
import itertools
import logging
import math

import numpy as np

from ..core.utils import ensure_within
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.matrices import is_invertible, stack
from . import exceptions as e
from .models import DataFill, MdsReport


logger = logging.getLogger(__name__)


def encode(code, data):
    """All n node vectors: systematic ones verbatim, then the parities
    """
    if data.field != code.field:
        raise ShapeMismatch(f'data over {data.field} cannot feed a code over {code.field}')
    data.check(code.params)

    nodes = [data.vector(j).copy() for j in range(1, code.k + 1)]
    for t in range(1, code.r + 1):
        parity = code.field.zeros(code.ell)
        for j in range(1, code.k + 1):
            parity = parity + code.matrix(t, j) @ data.vector(j)
        nodes.append(parity)
    return nodes


def node_block(code, node):
    """The ell x k*ell block row mapping the stacked data to one node
    """
    code.params.check_node(node)
    ell = code.ell
    if code.params.is_systematic(node):
        blocks = [code.field.identity(ell) if j == node else code.field.zeros((ell, ell))
                  for j in range(1, code.k + 1)]
    else:
        t = node - code.k
        blocks = [code.matrix(t, j) for j in range(1, code.k + 1)]
    return stack(code.field.gf, blocks, axis=1)


def subset_matrix(code, nodes):
    return stack(code.field.gf, [node_block(code, node) for node in nodes])


def verify_mds(code):
    """Check that every k-subset of nodes determines the data

    Failing subsets come back sorted. The report also records whether every
    encoding matrix is invertible, which any MDS code must satisfy.
    """
    total = math.comb(code.n, code.k)
    ensure_within(total, 'mds_subset', error_class=e.TooManySubsets, what='node subsets')

    failing = []
    for nodes in itertools.combinations(range(1, code.n + 1), code.k):
        if not is_invertible(subset_matrix(code, nodes)):
            failing.append(nodes)

    invertible_encoding = all(is_invertible(matrix) for row in code.encoding for matrix in row)
    report = MdsReport(
        passed=not failing,
        checked=total,
        failing=tuple(sorted(failing)),
        invertible_encoding=invertible_encoding,
    )
    logger.info('MDS check over %s: %d/%d subsets invertible', code.field, report.succeeded, total)
    if report.passed and not invertible_encoding:
        logger.error('MDS code with a singular encoding matrix over %s', code.field)
    return report


def reconstruct(code, surviving):
    """Recover the data from any k nodes

    `surviving` maps 1-based node indices to their length-ell vectors.
    """
    nodes = sorted(surviving)
    if len(nodes) != code.k:
        raise e.InvalidNodeSet(f'reconstruction needs exactly {code.k} nodes, got {len(nodes)}')
    for node in nodes:
        code.params.check_node(node)

    system = subset_matrix(code, nodes)
    values = stack(code.field.gf, [code.field.coerce(surviving[node]).reshape(-1) for node in nodes])
    if values.shape != (code.k * code.ell,):
        raise ShapeMismatch(f'node vectors must have length {code.ell}')

    try:
        solution = np.linalg.solve(system, values)
    except np.linalg.LinAlgError:
        raise e.SingularSystem(
            f'nodes {nodes} do not determine the data',
            payload={'nodes': nodes},
        )
    return DataFill(field=code.field, systematic=solution.reshape(code.k, code.ell))


def random_fill(code, rng=None):
    return DataFill(field=code.field, systematic=code.field.random((code.k, code.ell), rng=rng))


def zero_fill(code):
    return DataFill(field=code.field, systematic=code.field.zeros((code.k, code.ell)))
