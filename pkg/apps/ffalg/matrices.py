"""
Exact linear algebra on galois matrices
"""
import logging

import galois
import numpy as np

from . import exceptions as e


logger = logging.getLogger(__name__)


def ensure_same_field(*arrays):
    """Raise FieldMismatch unless every array belongs to one galois field class
    """
    classes = set()
    for array in arrays:
        if not isinstance(array, galois.FieldArray):
            raise e.FieldMismatch(f'expected a field array, got {type(array).__name__}')
        classes.add(type(array))

    if len(classes) > 1:
        orders = sorted(cls.order for cls in classes)
        raise e.FieldMismatch('operands belong to different fields', payload={'orders': orders})

    return classes.pop() if classes else None


def ensure_square(matrix, what='matrix'):
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise e.ShapeMismatch(f'{what} must be square, got shape {matrix.shape}')


def as_lists(matrix):
    return [[int(value) for value in row] for row in matrix.view(np.ndarray)]


def stack(gf, blocks, axis=0):
    """Concatenate field arrays of the same class
    """
    raw = [np.asarray(block.view(np.ndarray)) for block in blocks]
    return gf(np.concatenate(raw, axis=axis))


def rref(matrix):
    """Reduced row-echelon form and rank

    Pivots are 1, with zeros above and below each of them. Zero rows sink to
    the bottom.
    """
    ensure_same_field(matrix)
    if matrix.size == 0:
        return matrix.copy(), 0

    reduced = matrix.row_reduce()
    rank = int(np.count_nonzero(np.any(reduced != 0, axis=1)))
    return reduced, rank


def rank(matrix):
    return rref(matrix)[1]


def invert(matrix):
    ensure_same_field(matrix)
    ensure_square(matrix)
    try:
        return np.linalg.inv(matrix)
    except np.linalg.LinAlgError:
        raise e.SingularMatrix(
            f'{matrix.shape[0]}x{matrix.shape[0]} matrix over GF({type(matrix).order}) is singular',
            payload={'matrix': as_lists(matrix)},
        )


def is_invertible(matrix):
    ensure_square(matrix)
    return rank(matrix) == matrix.shape[0]


def matrix_product(*matrices):
    """Left-to-right product of a chain of matrices
    """
    if not matrices:
        raise e.ShapeMismatch('empty product')

    ensure_same_field(*matrices)
    product = matrices[0]
    for matrix in matrices[1:]:
        if product.shape[-1] != matrix.shape[0]:
            raise e.ShapeMismatch(f'cannot multiply {product.shape} by {matrix.shape}')
        product = product @ matrix
    return product


def solve_left(system, target):
    """Find C with C @ system == target

    Free variables are set to zero. Raises NotInRowSpace when some row of
    `target` is outside the row space of `system`.
    """
    gf = ensure_same_field(system, target)
    if system.shape[1] != target.shape[1]:
        raise e.ShapeMismatch(f'cannot solve against {system.shape} with target {target.shape}')

    unknowns = system.shape[0]
    augmented = stack(gf, [system.T, target.T], axis=1)
    reduced = augmented.row_reduce(ncols=unknowns) if unknowns else augmented

    solution = gf.Zeros((target.shape[0], unknowns))
    for row in range(reduced.shape[0]):
        left = reduced[row, :unknowns]
        if np.any(left != 0):
            pivot = int(np.argmax(left != 0))
            solution[:, pivot] = reduced[row, unknowns:]
        elif np.any(reduced[row, unknowns:] != 0):
            raise e.NotInRowSpace('target rows are not in the row space of the system')

    return solution


def flatten_family(matrices):
    gf = ensure_same_field(*matrices)
    shapes = {matrix.shape for matrix in matrices}
    if len(shapes) > 1:
        raise e.ShapeMismatch('family members differ in shape', payload={'shapes': sorted(shapes)})

    return stack(gf, [matrix.reshape(1, -1) for matrix in matrices])


def family_independent(matrices):
    """True iff the matrices are linearly independent over their field
    """
    matrices = list(matrices)
    if not matrices:
        return True

    flat = flatten_family(matrices)
    if len(matrices) > flat.shape[1]:
        return False
    return rank(flat) == len(matrices)


def family_rank(matrices):
    matrices = list(matrices)
    if not matrices:
        return 0
    return rank(flatten_family(matrices))


def left_null_vector(matrix):
    """A nonzero row vector v with v @ matrix == 0, or None
    """
    gf = ensure_same_field(matrix)
    kernel = matrix.left_null_space()
    if kernel.shape[0] == 0:
        return None
    return gf(kernel[0])
