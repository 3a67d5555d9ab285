"""
Canonical enumeration of subspaces and invertible matrices over GF(q)

Subspaces come out in RREF order: pivot columns in lexicographic order, then
the free entries (right of each pivot, outside pivot columns) counted up
lexicographically. The first subspace of each dimension is the coordinate
subspace spanned by the leading unit vectors.
"""
import itertools
import logging

from ..core.utils import ensure_within
from ..ffalg.matrices import is_invertible
from ..ffalg.subspaces import Subspace, span, zero_subspace
from . import exceptions as e


logger = logging.getLogger(__name__)


def gaussian_binomial(n, d, q):
    """Number of d-dimensional subspaces of GF(q)^n
    """
    if d < 0 or d > n:
        return 0
    num, den = 1, 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n, q):
    """Number of invertible n x n matrices over GF(q)
    """
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


def free_positions(pivots, ell):
    pivot_set = set(pivots)
    return [
        (row, col)
        for row, pivot in enumerate(pivots)
        for col in range(pivot + 1, ell)
        if col not in pivot_set
    ]


def iter_subspaces(ell, dim, field):
    if dim == 0:
        yield zero_subspace(field, ell)
        return

    q = field.order
    for pivots in itertools.combinations(range(ell), dim):
        free = free_positions(pivots, ell)
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * ell for _ in range(dim)]
            for row, pivot in enumerate(pivots):
                rows[row][pivot] = 1
            for (row, col), value in zip(free, values):
                rows[row][col] = value
            yield Subspace(field.coerce(rows), ell)


def enumerate_subspaces(ell, dim, field, limit='subspace'):
    """All dim-dimensional subspaces of field^ell in canonical order
    """
    count = gaussian_binomial(ell, dim, field.order)
    ensure_within(count, limit, error_class=e.TooLarge, what='subspaces')
    subspaces = list(iter_subspaces(ell, dim, field))
    logger.debug('enumerated %d subspaces of dimension %d in %s^%d', len(subspaces), dim, field, ell)
    return subspaces


def enumerate_invertible(ell, field, limit='candidate'):
    """All invertible ell x ell matrices, lexicographic in row-major entries
    """
    ensure_within(gl_order(ell, field.order), limit, error_class=e.TooLarge, what='invertible matrices')
    ret = []
    for entries in itertools.product(range(field.order), repeat=ell * ell):
        matrix = field.coerce(list(entries)).reshape(ell, ell)
        if is_invertible(matrix):
            ret.append(matrix)
    return ret


def sample_invertible(ell, field, count, rng):
    """`count` distinct random invertible matrices, in lexicographic order
    """
    seen = {}
    attempts = 0
    total = gl_order(ell, field.order)
    while len(seen) < min(count, total) and attempts < 100 * count:
        attempts += 1
        matrix = field.random((ell, ell), rng=rng)
        key = tuple(int(v) for v in matrix.flat)
        if key not in seen and is_invertible(matrix):
            seen[key] = matrix
    return [seen[key] for key in sorted(seen)]


def sample_subspaces(ell, dim, field, count, rng):
    """Up to `count` distinct random subspaces, in order of first appearance
    """
    seen = {}
    attempts = 0
    total = gaussian_binomial(ell, dim, field.order)
    while len(seen) < min(count, total) and attempts < 100 * count:
        attempts += 1
        subspace = span(field.random((dim, ell), rng=rng))
        if subspace.dim == dim:
            seen.setdefault(subspace, subspace)
    return list(seen)
