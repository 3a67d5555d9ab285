"""
Largest system of (S_i, Phi_i) pairs satisfying the helper-independent
repair conditions over a fixed field

Top-level branches (one per starting vertex) are split into chunks and run
as a celery group. With `symmetry_fix` only branches starting on the first
subspace are explored: GL(ell) acts transitively on subspaces of a given
dimension, so every system is conjugate to one containing it. The fix is
off in randomized mode, where the sampled operators are not closed under
conjugation.
"""
import logging

from celery import group
from django.conf import settings

from ..bounds.helpers import bound_report, consistency_assert
from ..reduction.conditions import RELAXED, TWO_PARITY, check_constant_conditions
from ..reduction.models import PhiSystem
from . import exceptions as e
from .cliques import candidate_table
from .models import MaxKResult, SearchMode
from .tasks import explore_branches


logger = logging.getLogger(__name__)


def _roots(table, config):
    if config.symmetry_fix and not config.randomized:
        return [v for v, (s, _) in enumerate(table.vertices) if s == 0]
    return list(range(table.size))


def _chunks(items, count):
    count = max(1, min(count, len(items)))
    size, extra = divmod(len(items), count)
    ret, start = [], 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        ret.append(items[start:end])
        start = end
    return ret


def witness_system(table, config, clique):
    pairs = []
    for vertex in clique:
        s, m = table.vertices[vertex]
        pairs.append((table.matrices[m], table.subspaces[s]))
    return PhiSystem.build(config.field, config.ell, config.r, pairs,
                           labels=range(1, len(pairs) + 1))


def verify_witness(system):
    mode = TWO_PARITY if system.r == 2 else RELAXED
    report = check_constant_conditions(system, mode=mode)
    if not report:
        violations = [v.as_dict() for v in report.violations]
        logger.error('max-k witness of size %d does not verify: %s', system.size, violations)
        raise e.WitnessRejected(
            f'witness of size {system.size} does not satisfy the {mode} conditions',
            payload={'violations': violations},
        )
    return report


def search_max_k(config):
    """Maximum number of pairs over config.field at (ell, r)

    Every branch gets an equal share of the expansion budget; a branch that
    runs out marks the result as a lower bound rather than failing.
    """
    if config.mode is not SearchMode.MAX_K_PAIRS:
        raise e.InvalidConfig(f'max-k search needs mode {SearchMode.MAX_K_PAIRS.value}, got {config.mode.value}')

    table = candidate_table(config.field, config.ell, config.r, config.samples, config.seed)
    roots = _roots(table, config)
    if not roots:
        logger.info('no candidate pairs over %s at ell=%d, r=%d', config.field, config.ell, config.r)
        return MaxKResult(config=config, kmax=0, witness=None,
                          exhaustive=not config.randomized, expansions=0)

    payload = {
        'field': config.field.as_dict(),
        'ell': config.ell,
        'r': config.r,
        'samples': config.samples,
        'seed': config.seed,
        'budget': max(1, config.budget // len(roots)),
    }
    chunks = _chunks(roots, settings.MSRLAB_THREADS)
    logger.info('max-k over %s at ell=%d, r=%d: %d branches in %d chunks',
                config.field, config.ell, config.r, len(roots), len(chunks))

    outcomes = group(explore_branches.s(payload, chunk) for chunk in chunks).apply_async().get()
    branches = [branch for chunk in outcomes for branch in chunk]

    best = min((tuple(b['clique']) for b in branches), key=lambda c: (-len(c), c))
    expansions = sum(b['expansions'] for b in branches)
    complete = all(b['complete'] for b in branches)
    if not complete:
        logger.warning('budget of %d expansions ran out; kmax=%d is a lower bound', config.budget, len(best))

    witness = witness_system(table, config, best)
    verify_witness(witness)
    consistency_assert(len(best), bound_report(config.ell, config.r))

    return MaxKResult(
        config=config,
        kmax=len(best),
        witness=witness,
        exhaustive=complete and not config.randomized,
        expansions=expansions,
        branches=len(roots),
        clique=best,
    )
