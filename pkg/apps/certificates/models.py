import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from ..ffalg.matrices import family_independent, family_rank


class FamilyKind(enum.Enum):
    T = 't'
    UPSILON = 'upsilon'
    R = 'r'
    LAMBDA = 'lambda'
    GAMMA = 'gamma'
    IDENTITY_THETA = 'identity'


@dataclass(frozen=True, eq=False)
class CertificateFamily:
    """Products of system operators whose independence a result predicts

    `labels[i]` says how members[i] was formed: an index pair, an epsilon
    bit vector, or a tuple of node labels.
    """
    kind: FamilyKind
    members: Tuple[object, ...]
    labels: Tuple[tuple, ...]
    claim: int

    @property
    def size(self):
        return len(self.members)

    @property
    def rank(self):
        return family_rank(self.members)

    def independent(self):
        return family_independent(self.members)


@dataclass(frozen=True)
class CorollaryResult:
    """Outcome of checking a T family

    `vacuous` is set when some pair intersects trivially. For a dependent
    family `coefficients` is a vanishing combination and `witness` a pair
    with nonzero coefficient whose subspaces are complementary, if any.
    """
    holds: bool
    vacuous: bool
    independent: bool
    coefficients: Optional[Tuple[int, ...]] = None
    witness: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class SumDimension:
    dim: int
    bound: int
    ok: bool
    indices: Tuple[int, ...] = ()
