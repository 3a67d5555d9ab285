import logging
from dataclasses import dataclass
from typing import Dict

from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.fields import FieldSpec
from ..ffalg.subspaces import span
from . import exceptions as e


logger = logging.getLogger(__name__)


class RepairScheme:
    """Repairing subspaces S_{i,j} for failed systematic nodes

    `bases[i][j]` is the (ell/r) x ell matrix helper j applies to its vector
    when node i fails. Its rows are the transmission matrix, so two bases of
    one subspace give different transcripts but the same recovered vector.
    """
    def __init__(self, params, field, bases):
        self.params = params
        self.field = field
        self.bases = {}
        for failed, helpers in bases.items():
            if not params.is_systematic(failed):
                raise ShapeMismatch(f'only systematic nodes 1..{params.k} can be repaired, got {failed}')
            expected = set(range(1, params.n + 1)) - {failed}
            if set(helpers) != expected:
                raise ShapeMismatch(
                    f'node {failed} needs bases for helpers {sorted(expected)}',
                    payload={'failed': failed, 'helpers': sorted(helpers)},
                )
            self.bases[failed] = {j: self._coerce(helpers[j]) for j in sorted(helpers)}

    def _coerce(self, basis):
        matrix = self.field.coerce(basis)
        shape = (self.params.sub_dim, self.params.ell)
        if matrix.ndim != 2 or matrix.shape != shape:
            raise ShapeMismatch(f'repair bases must be {shape[0]}x{shape[1]}, got {matrix.shape}')
        return matrix

    @classmethod
    def uniform(cls, params, field, failed, basis):
        """Every helper of `failed` uses the same basis
        """
        helpers = {j: basis for j in range(1, params.n + 1) if j != failed}
        return cls(params, field, {failed: helpers})

    def covers(self, failed):
        return failed in self.bases

    def failed_nodes(self):
        return sorted(self.bases)

    def basis(self, failed, helper):
        try:
            return self.bases[failed][helper]
        except KeyError:
            raise e.SchemeInvalid(f'scheme has no basis for helper {helper} of node {failed}')

    def subspace(self, failed, helper):
        return span(self.basis(failed, helper))

    def merge(self, other):
        bases = {**self.bases, **other.bases}
        return RepairScheme(self.params, self.field, bases)

    def __eq__(self, other):
        if not isinstance(other, RepairScheme):
            return NotImplemented
        if (self.params, self.field) != (other.params, other.field):
            return False
        if self.bases.keys() != other.bases.keys():
            return False
        return all(
            (self.bases[i][j] == other.bases[i][j]).all()
            for i in self.bases for j in self.bases[i]
        )


@dataclass(frozen=True, eq=False)
class RepairTranscript:
    failed: int
    field: FieldSpec
    transmissions: Dict[int, object]
    recovered: object

    @property
    def symbols(self):
        return sum(vector.shape[0] for vector in self.transmissions.values())

    @property
    def helpers(self):
        return sorted(self.transmissions)