import logging
from dataclasses import dataclass, field
from typing import Tuple

from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.fields import FieldSpec
from ..ffalg.matrices import as_lists
from . import exceptions as e


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeParams:
    """Shape of an (n, k, ell) array code with r = n - k parities
    """
    ell: int
    k: int
    r: int

    def __post_init__(self):
        for name in ('ell', 'k', 'r'):
            if getattr(self, name) < 1:
                raise e.InvalidParams(f'{name} must be at least 1', payload=self.as_dict())
        if self.ell % self.r:
            raise e.InvalidParams(f'r={self.r} does not divide ell={self.ell}', payload=self.as_dict())

    @property
    def n(self):
        return self.k + self.r

    @property
    def sub_dim(self):
        return self.ell // self.r

    def is_systematic(self, node):
        return 1 <= node <= self.k

    def is_parity(self, node):
        return self.k < node <= self.n

    def check_node(self, node):
        if not 1 <= node <= self.n:
            raise e.InvalidNodeSet(f'node {node} is outside 1..{self.n}')

    def as_dict(self):
        return {'ell': self.ell, 'k': self.k, 'r': self.r}


@dataclass(frozen=True, eq=False)
class ArrayCode:
    """Systematic array code: node k+t stores sum_j A_{t,j} v_j

    `encoding[t-1][j-1]` holds A_{t,j} as an ell x ell galois array.
    """
    params: CodeParams
    field: FieldSpec
    encoding: Tuple[tuple, ...]

    def __post_init__(self):
        ell, k, r = self.params.ell, self.params.k, self.params.r
        if len(self.encoding) != r or any(len(row) != k for row in self.encoding):
            raise ShapeMismatch(f'encoding must be a {r}x{k} grid of matrices')
        for row in self.encoding:
            for matrix in row:
                if not self.field.owns(matrix):
                    raise ShapeMismatch(f'encoding matrices must be over {self.field}')
                if matrix.shape != (ell, ell):
                    raise ShapeMismatch(f'encoding matrices must be {ell}x{ell}, got {matrix.shape}')

    @classmethod
    def build(cls, field, ell, grid):
        """Build from nested integer lists, inferring k and r from the grid
        """
        encoding = tuple(tuple(field.coerce(matrix) for matrix in row) for row in grid)
        params = CodeParams(ell=ell, k=len(encoding[0]) if encoding else 0, r=len(encoding))
        return cls(params=params, field=field, encoding=encoding)

    @property
    def ell(self):
        return self.params.ell

    @property
    def k(self):
        return self.params.k

    @property
    def r(self):
        return self.params.r

    @property
    def n(self):
        return self.params.n

    def matrix(self, t, j):
        """A_{t,j} with 1-based parity t and systematic node j
        """
        return self.encoding[t - 1][j - 1]

    def replace(self, t, j, matrix):
        grid = [list(row) for row in self.encoding]
        grid[t - 1][j - 1] = self.field.coerce(matrix)
        return ArrayCode(params=self.params, field=self.field, encoding=tuple(tuple(row) for row in grid))

    def as_grid(self):
        return [[as_lists(matrix) for matrix in row] for row in self.encoding]


@dataclass(frozen=True, eq=False)
class DataFill:
    """The k systematic vectors, stored as the rows of a k x ell array
    """
    field: FieldSpec
    systematic: object

    def __post_init__(self):
        if self.systematic.ndim != 2:
            raise ShapeMismatch('systematic data must be a k x ell grid')

    @classmethod
    def build(cls, field, vectors):
        return cls(field=field, systematic=field.coerce(vectors))

    def vector(self, j):
        return self.systematic[j - 1]

    def check(self, params):
        if self.systematic.shape != (params.k, params.ell):
            raise ShapeMismatch(
                f'expected {params.k} vectors of length {params.ell}, got shape {self.systematic.shape}'
            )

    def as_lists(self):
        return as_lists(self.systematic)


@dataclass(frozen=True)
class MdsReport:
    passed: bool
    checked: int
    failing: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)
    invertible_encoding: bool = True

    def __bool__(self):
        return self.passed

    @property
    def succeeded(self):
        return self.checked - len(self.failing)
