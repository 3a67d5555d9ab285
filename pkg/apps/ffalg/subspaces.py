"""
Canonical subspaces of F^ell

A subspace keeps the RREF basis of its row span with zero rows dropped, so
two subspaces are equal exactly when their bases are identical grids.
"""
import functools
import logging

import numpy as np

from . import exceptions as e
from .fields import spec_of
from .matrices import as_lists, ensure_same_field, rref, stack


logger = logging.getLogger(__name__)


class Subspace:
    __slots__ = ('field', 'ambient', 'basis', '_key')

    def __init__(self, basis, ambient):
        self.field = spec_of(basis)
        self.ambient = ambient
        self.basis = basis
        self._key = tuple(int(value) for value in basis.view(np.ndarray).flat)

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def gf(self):
        return type(self.basis)

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient

    def contains(self, vector):
        vector = self.field.coerce(vector).reshape(1, -1)
        if vector.shape[1] != self.ambient:
            raise e.DimensionMismatch(f'vector has length {vector.shape[1]}, ambient is {self.ambient}')
        return span(stack(self.gf, [self.basis, vector])).dim == self.dim

    def as_lists(self):
        return as_lists(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field, self.ambient, self.dim, self._key) == (other.field, other.ambient, other.dim, other._key)

    def __hash__(self):
        return hash((self.field, self.ambient, self.dim, self._key))

    def __repr__(self):
        return f'<Subspace dim={self.dim} of {self.field}^{self.ambient} basis={self.as_lists()}>'


def span(matrix):
    """Canonical subspace spanned by the rows of matrix
    """
    ensure_same_field(matrix)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)

    reduced, rank = rref(matrix)
    return Subspace(reduced[:rank].copy(), matrix.shape[1])


def zero_subspace(field, ambient):
    return Subspace(field.zeros((0, ambient)), ambient)


def full_space(field, ambient):
    return Subspace(field.identity(ambient), ambient)


def _check_compatible(first, second):
    if first.field != second.field:
        raise e.FieldMismatch(f'subspaces over {first.field} and {second.field}')
    if first.ambient != second.ambient:
        raise e.AmbientMismatch(
            f'ambient dimensions differ: {first.ambient} and {second.ambient}',
            payload={'ambient': [first.ambient, second.ambient]},
        )


def subspace_sum(first, second):
    _check_compatible(first, second)
    if first.is_zero():
        return second
    if second.is_zero():
        return first
    return span(stack(first.gf, [first.basis, second.basis]))


def subspace_intersect(first, second):
    """Intersection through the Zassenhaus block matrix [[A, A], [B, 0]]

    After row reduction, rows whose left half vanishes span the intersection
    in their right half.
    """
    _check_compatible(first, second)
    if first.is_zero() or second.is_zero():
        return zero_subspace(first.field, first.ambient)
    if first.is_full():
        return second
    if second.is_full():
        return first

    ell = first.ambient
    gf = first.gf
    block = stack(gf, [
        stack(gf, [first.basis, first.basis], axis=1),
        stack(gf, [second.basis, gf.Zeros(second.basis.shape)], axis=1),
    ])
    reduced, rank = rref(block)
    rows = [row for row in reduced[:rank] if not np.any(row[:ell] != 0)]
    if not rows:
        return zero_subspace(first.field, ell)
    return span(stack(gf, [row[ell:].reshape(1, -1) for row in rows]))


def subspace_apply(subspace, matrix):
    """The image subspace S·M
    """
    if matrix.ndim != 2 or matrix.shape != (subspace.ambient, subspace.ambient):
        raise e.DimensionMismatch(
            f'operator of shape {matrix.shape} does not act on an ambient of {subspace.ambient}'
        )
    if type(matrix) is not subspace.gf:
        raise e.FieldMismatch('operator and subspace belong to different fields')
    if subspace.is_zero():
        return subspace
    return span(subspace.basis @ matrix)


def sum_of(subspaces, field, ambient):
    return functools.reduce(subspace_sum, subspaces, zero_subspace(field, ambient))


def intersection_of(subspaces, field, ambient):
    return functools.reduce(subspace_intersect, subspaces, full_space(field, ambient))


def is_direct_sum(subspaces, ambient):
    """True iff the subspaces are independent and together fill F^ambient
    """
    subspaces = list(subspaces)
    if not subspaces:
        return ambient == 0
    if sum(s.dim for s in subspaces) != ambient:
        return False
    total = sum_of(subspaces, subspaces[0].field, ambient)
    return total.dim == ambient
