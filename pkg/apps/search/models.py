import enum
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from django.conf import settings

from ..ffalg.fields import FieldSpec
from . import exceptions as e


class SearchMode(enum.Enum):
    SCHEME_FOR_CODE = 'scheme'
    MAX_K_PAIRS = 'maxk'


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a search

    `samples` switches max-k search to randomized mode: that many invertible
    matrices are drawn with a generator seeded by `seed` instead of
    enumerating all of them. Randomized results are lower bounds.
    """
    ell: int
    r: int
    field: FieldSpec
    mode: SearchMode = SearchMode.MAX_K_PAIRS
    seed: int = 0
    budget: Optional[int] = None
    symmetry_fix: bool = True
    samples: Optional[int] = None

    def __post_init__(self):
        if self.budget is None:
            object.__setattr__(self, 'budget', settings.MSRLAB_DEFAULT_BUDGET)
        if self.budget < 1:
            raise e.InvalidConfig('budget must be positive', payload={'budget': self.budget})
        if self.r < 1 or self.ell % self.r:
            raise e.InvalidConfig(f'r={self.r} does not divide ell={self.ell}')

    @property
    def randomized(self):
        return self.samples is not None

    @property
    def sub_dim(self):
        return self.ell // self.r


@dataclass(frozen=True, eq=False)
class SchemeSearchResult:
    """Outcome of a per-node scheme search

    `solutions[i]` lists every accepted tuple (S_{i,k+1}, ..., S_{i,k+r});
    the scheme is built from the first one of each node.
    """
    scheme: object
    solutions: Dict[int, Tuple[tuple, ...]]
    exhaustive: bool
    expansions: int


@dataclass(frozen=True, eq=False)
class MaxKResult:
    config: SearchConfig
    kmax: int
    witness: Optional[object]
    exhaustive: bool
    expansions: int
    branches: int = 0
    clique: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def lower_bound(self):
        return not self.exhaustive
