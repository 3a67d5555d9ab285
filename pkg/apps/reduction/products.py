"""
Tensor products of PhiSystems

For systems over F^a and F^b with the same r, every pair (Phi, S) of the
first becomes (Phi (x) I_b, S (x) F^b) and every pair of the second becomes
(I_a (x) Phi, F^a (x) S). Both conditions carry over factor by factor, so the
product is a valid system over F^(ab) with one pair per input pair.
"""
import logging

from ..ffalg.exceptions import FieldMismatch, ShapeMismatch
from ..ffalg.subspaces import span
from .models import PhiSystem


logger = logging.getLogger(__name__)


def kron(left, right):
    """Kronecker product of two field matrices, rows of `left` outermost
    """
    rows = left.shape[0] * right.shape[0]
    cols = left.shape[1] * right.shape[1]
    return (left[:, None, :, None] * right[None, :, None, :]).reshape(rows, cols)


def tensor_systems(first, second):
    """Pairs of `first` lifted on the left, then pairs of `second` on the right

    Labels run 1..(first.size + second.size) in that order.
    """
    if first.field != second.field:
        raise FieldMismatch(f'systems over {first.field} and {second.field} cannot be combined')
    if first.r != second.r:
        raise ShapeMismatch(f'systems target r = {first.r} and r = {second.r}')

    field = first.field
    left_identity, right_identity = field.identity(first.ell), field.identity(second.ell)
    pairs = [
        (kron(phi, right_identity), span(kron(subspace.basis, right_identity)))
        for phi, subspace in zip(first.phis, first.subspaces)
    ]
    pairs += [
        (kron(left_identity, phi), span(kron(left_identity, subspace.basis)))
        for phi, subspace in zip(second.phis, second.subspaces)
    ]

    system = PhiSystem.build(field, first.ell * second.ell, first.r, pairs)
    logger.debug('tensor of %d and %d pairs over %s^%d', first.size, second.size, field, system.ell)
    return system
