"""
Repair scheme search for a given code

Conditions for failed node i only involve node i's subspaces, so every node
is searched on its own. S_{i,k+1} runs over all subspaces of dimension
ell / r; for t > 1 alignment with a systematic helper j whose A_{t,j} is
invertible forces S_{i,k+t} = S_{i,k+1} A_{1,j} A_{t,j}^-1, otherwise
S_{i,k+t} is enumerated too. Systematic helpers then use
S_{i,j} = S_{i,k+1} A_{1,j}.
"""
import logging

import numpy as np
from django.conf import settings

from ..ffalg.matrices import is_invertible, invert
from ..ffalg.subspaces import subspace_apply, sum_of
from ..repair.engine import verify_scheme
from ..repair.models import RepairScheme
from . import exceptions as e
from .enumeration import enumerate_subspaces, sample_subspaces
from .models import SchemeSearchResult


logger = logging.getLogger(__name__)


class _Budget:

    def __init__(self, total):
        self.total = total
        self.used = 0

    def spend(self):
        if self.used >= self.total:
            return False
        self.used += 1
        return True


def _forcing_helper(code, failed, t):
    """A systematic helper j != failed whose A_{t,j} is invertible, or None
    """
    for j in range(1, code.k + 1):
        if j != failed and is_invertible(code.matrix(t, j)):
            return j
    return None


def _aligned(code, failed, choice):
    first = choice[0]
    for j in range(1, code.k + 1):
        if j == failed:
            continue
        target = subspace_apply(first, code.matrix(1, j))
        for t, subspace in enumerate(choice[1:], start=2):
            if subspace_apply(subspace, code.matrix(t, j)) != target:
                return False
    return True


def _spans(code, failed, choice):
    parts = [subspace_apply(s, code.matrix(t, failed)) for t, s in enumerate(choice, start=1)]
    return sum_of(parts, code.field, code.ell).dim == code.ell


def search_node(code, failed, candidates, budget):
    """All parity-subspace tuples repairing `failed`; False as the second
    value when the budget ran out first
    """
    forced = {}
    for t in range(2, code.r + 1):
        j = _forcing_helper(code, failed, t)
        if j is not None:
            forced[t] = code.matrix(1, j) @ invert(code.matrix(t, j))

    solutions = []

    def extend(choice):
        t = len(choice) + 1
        if t > code.r:
            if _aligned(code, failed, choice) and _spans(code, failed, choice):
                solutions.append(tuple(choice))
            return True
        if t in forced:
            if not budget.spend():
                return False
            return extend(choice + [subspace_apply(choice[0], forced[t])])
        for subspace in candidates:
            if not budget.spend():
                return False
            if not extend(choice + [subspace]):
                return False
        return True

    complete = extend([])
    return solutions, complete


def _scheme_bases(code, failed, choice):
    helpers = {}
    for j in range(1, code.k + 1):
        if j != failed:
            helpers[j] = subspace_apply(choice[0], code.matrix(1, j)).basis
    for t, subspace in enumerate(choice, start=1):
        helpers[code.k + t] = subspace.basis
    return helpers


def search_scheme(code, nodes=None, budget=None, randomized=False, seed=0, samples=None):
    """Find repair subspaces for every requested systematic node

    Exhaustive mode lists every solution and raises NoSchemeExists when some
    node has none. Randomized mode tries `samples` random subspaces per slot,
    in an order fixed by `seed`, and never claims nonexistence.
    """
    nodes = list(nodes or range(1, code.k + 1))
    budget = _Budget(budget or settings.MSRLAB_DEFAULT_BUDGET)

    if randomized:
        rng = np.random.default_rng(seed)
        candidates = sample_subspaces(code.ell, code.params.sub_dim, code.field, samples or 64, rng)
    else:
        candidates = enumerate_subspaces(code.ell, code.params.sub_dim, code.field, limit='scheme_subspace')

    solutions, exhaustive = {}, not randomized
    for failed in nodes:
        found, complete = search_node(code, failed, candidates, budget)
        solutions[failed] = tuple(found)
        exhaustive = exhaustive and complete
        logger.info('node %d: %d repair solutions (%s)', failed, len(found),
                    'complete' if complete else 'budget exhausted')

        if not found:
            if not complete:
                raise e.BudgetExhausted(
                    f'budget of {budget.total} expansions ran out before node {failed} was repaired',
                    payload={'failed': failed, 'expansions': budget.used},
                )
            if not randomized:
                raise e.NoSchemeExists(
                    f'no repair scheme exists for node {failed} over {code.field}',
                    payload={'failed': failed, 'expansions': budget.used},
                )
            raise e.BudgetExhausted(
                f'no sampled subspace repairs node {failed}',
                payload={'failed': failed, 'expansions': budget.used},
            )

    scheme = RepairScheme(code.params, code.field, {
        failed: _scheme_bases(code, failed, solutions[failed][0]) for failed in nodes
    })
    for failed in nodes:
        report = verify_scheme(code, scheme, failed)
        if not report:
            logger.error('searched scheme for node %d does not verify: %s', failed,
                         [v.as_dict() for v in report.violations])
            raise e.WitnessRejected(
                f'searched scheme for node {failed} does not verify',
                payload={'failed': failed, 'violations': [v.as_dict() for v in report.violations]},
            )

    return SchemeSearchResult(
        scheme=scheme, solutions=solutions, exhaustive=exhaustive, expansions=budget.used,
    )
