import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..codes.models import ArrayCode
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.fields import FieldSpec
from ..ffalg.matrices import is_invertible
from ..ffalg.subspaces import Subspace, span
from . import exceptions as e


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PhiSystem:
    """Operators Phi_i paired with subspaces S_i of dimension ell / r

    `labels` are the node numbers the pairs came from. `operators`, when
    present, is the full r x k grid the general-r conditions read.
    """
    field: FieldSpec
    ell: int
    r: int
    phis: Tuple[object, ...]
    subspaces: Tuple[Subspace, ...]
    labels: Tuple[int, ...] = ()
    operators: Optional[Tuple[tuple, ...]] = None

    def __post_init__(self):
        if self.r < 1 or self.ell % self.r:
            raise ShapeMismatch(f'r={self.r} does not divide ell={self.ell}')
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(range(1, len(self.phis) + 1)))
        if not len(self.phis) == len(self.subspaces) == len(self.labels):
            raise ShapeMismatch('phis, subspaces and labels differ in length')
        if len(set(self.labels)) != len(self.labels):
            raise ShapeMismatch('pair labels must be distinct')

        for phi in self.phis:
            if not self.field.owns(phi) or phi.shape != (self.ell, self.ell):
                raise ShapeMismatch(f'operators must be {self.ell}x{self.ell} over {self.field}')
            if not is_invertible(phi):
                raise e.SystemInvalid('every operator must be invertible')
        for subspace in self.subspaces:
            if subspace.field != self.field or subspace.ambient != self.ell:
                raise ShapeMismatch(f'subspaces must live in {self.field}^{self.ell}')

        if self.operators is not None:
            if len(self.operators) != self.r or any(len(row) != self.size for row in self.operators):
                raise ShapeMismatch(f'operator grid must be {self.r}x{self.size}')

    @classmethod
    def build(cls, field, ell, r, pairs, labels=(), operators=None):
        """Build from (phi, basis) pairs given as arrays or nested lists
        """
        phis = tuple(field.coerce(phi) for phi, _ in pairs)
        subspaces = tuple(
            basis if isinstance(basis, Subspace) else span(field.coerce(basis).reshape(-1, ell))
            for _, basis in pairs
        )
        if operators is not None:
            operators = tuple(tuple(field.coerce(matrix) for matrix in row) for row in operators)
        return cls(field=field, ell=ell, r=r, phis=phis, subspaces=subspaces,
                   labels=tuple(labels), operators=operators)

    @property
    def size(self):
        return len(self.phis)

    @property
    def sub_dim(self):
        return self.ell // self.r

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ShapeMismatch(f'no pair labelled {label}', payload={'labels': list(self.labels)})

    def phi(self, label):
        return self.phis[self.index_of(label)]

    def subspace(self, label):
        return self.subspaces[self.index_of(label)]

    def restrict(self, labels):
        indices = [self.index_of(label) for label in labels]
        return PhiSystem(
            field=self.field, ell=self.ell, r=self.r,
            phis=tuple(self.phis[i] for i in indices),
            subspaces=tuple(self.subspaces[i] for i in indices),
            labels=tuple(labels),
        )


@dataclass(frozen=True, eq=False)
class NormalizedCode:
    """A code whose second parity uses identity matrices

    `transforms[j-1]` is A_{2,j}^-1 from the original code: the new data
    coordinates are v'_j = A_{2,j} v_j, so helper bases map through it.
    """
    code: ArrayCode
    original: ArrayCode
    transforms: Tuple[object, ...]

    @property
    def phis(self):
        return tuple(self.code.matrix(1, j) for j in range(1, self.code.k + 1))
