"""
Builders for the linear-independence families of a PhiSystem

Products are always taken left to right in the order the indices are given;
Lambda blocks multiply their operators in ascending label order. Builders whose
family is predicted independent refuse systems that fail check_sc, then
re-check the family and raise CounterexampleFound with all of it when the
check fails.
"""
import functools
import itertools
import logging
import math
from fractions import Fraction

from ..bounds.helpers import floor_log_delta
from ..core.utils import ensure_within
from ..ffalg.matrices import as_lists, flatten_family, left_null_vector, matrix_product
from ..ffalg.subspaces import intersection_of, subspace_intersect, sum_of
from ..reduction.conditions import check_sc
from . import exceptions as e
from .models import CertificateFamily, CorollaryResult, FamilyKind, SumDimension


logger = logging.getLogger(__name__)


def _check_labels(system, labels):
    unknown = [label for label in labels if label not in system.labels]
    if unknown:
        raise e.IndexOutOfRange(
            f'indices {unknown} are not in the system',
            payload={'unknown': unknown, 'labels': list(system.labels)},
        )


def _product(system, labels):
    identity = system.field.identity(system.ell)
    if not labels:
        return identity
    return matrix_product(identity, *(system.phi(label) for label in labels))


def _power_product(factors, bits, identity):
    chosen = [factor for factor, bit in zip(factors, bits) if bit]
    return functools.reduce(lambda left, right: left @ right, chosen, identity)


def family_payload(family, system):
    return {
        'kind': family.kind.value,
        'field': system.field.as_dict(),
        'claim': family.claim,
        'labels': [list(label) for label in family.labels],
        'members': [as_lists(member) for member in family.members],
    }


def _require_independent(family, system):
    if family.members and not family.independent():
        logger.error('%s family of %d members over %s is dependent',
                     family.kind.name, family.size, system.field)
        raise e.CounterexampleFound(
            f'{family.kind.name} family is linearly dependent (rank {family.rank} of {family.size})',
            payload=family_payload(family, system),
        )
    return family


def _require_sc(system, kind):
    report = check_sc(system)
    if not report:
        raise e.HypothesisFailed(
            f'{kind.name} family needs a system that satisfies the invariance conditions',
            payload={'violations': [v.as_dict() for v in report.violations]},
        )


def intersects_trivially(system, i, j):
    return subspace_intersect(system.subspace(i), system.subspace(j)).is_zero()


def build_T(system, odd_set, even_set):
    """Phi_i Phi_j for i in odd_set, j in even_set, in that nesting order
    """
    odd_set, even_set = list(odd_set), list(even_set)
    _check_labels(system, odd_set + even_set)
    if set(odd_set) & set(even_set):
        raise e.OverlappingSets(f'index sets share {sorted(set(odd_set) & set(even_set))}')
    if len(odd_set) != len(even_set):
        raise e.OverlappingSets(f'index sets differ in size: {len(odd_set)} and {len(even_set)}')
    if len(set(odd_set)) != len(odd_set) or len(set(even_set)) != len(even_set):
        raise e.OverlappingSets('index sets repeat an index')

    labels = tuple((i, j) for i in odd_set for j in even_set)
    members = tuple(system.phi(i) @ system.phi(j) for i, j in labels)
    return CertificateFamily(FamilyKind.T, members, labels, claim=len(odd_set) ** 2)


def check_corollary1(system, family):
    """If every pair of the T family intersects nontrivially, T is independent
    """
    pairs = list(family.labels)
    vacuous = any(intersects_trivially(system, i, j) for i, j in pairs)
    independent = family.independent()
    if independent:
        return CorollaryResult(holds=True, vacuous=vacuous, independent=True)

    vector = left_null_vector(flatten_family(family.members))
    coefficients = tuple(int(c) for c in vector)
    supported = [pair for pair, c in zip(pairs, coefficients) if c]
    candidates = supported + [pair for pair in pairs if pair not in supported]
    witness = next((pair for pair in candidates if intersects_trivially(system, *pair)), None)

    if not vacuous:
        logger.error('T family over %s is dependent while every pair intersects', system.field)
    return CorollaryResult(
        holds=vacuous, vacuous=vacuous, independent=False,
        coefficients=coefficients, witness=witness,
    )


def _check_pairs(system, pairs):
    pairs = [tuple(pair) for pair in pairs]
    _check_labels(system, [label for pair in pairs for label in pair])
    used = [label for pair in pairs for label in pair]
    if len(set(used)) != len(used):
        raise e.PairsOverlap('pairs must use disjoint indices', payload={'pairs': [list(p) for p in pairs]})
    for i, j in pairs:
        if not intersects_trivially(system, i, j):
            raise e.PairsNotComplementary(
                f'S_{i} and S_{j} intersect nontrivially',
                payload={'pair': [i, j]},
            )
    return pairs


def _upsilon_members(system, pairs):
    identity = system.field.identity(system.ell)
    factors = [system.phi(i) @ system.phi(j) for i, j in pairs]
    bits = list(itertools.product((0, 1), repeat=len(pairs)))
    return tuple(_power_product(factors, eps, identity) for eps in bits), tuple(bits)


def build_upsilon(system, pairs):
    """prod_j (Phi_a Phi_b)^eps_j over complementary pairs (a, b), eps in {0,1}^n
    """
    pairs = _check_pairs(system, pairs)
    _require_sc(system, FamilyKind.UPSILON)
    members, labels = _upsilon_members(system, pairs)
    family = CertificateFamily(FamilyKind.UPSILON, members, labels, claim=2 ** len(pairs))
    return _require_independent(family, system)


def build_R(system, pairs, t_family):
    """Omega Upsilon_eps for every Omega in T and every eps
    """
    pairs = _check_pairs(system, pairs)
    _require_sc(system, FamilyKind.R)
    paired = {label for pair in pairs for label in pair}
    t_labels = {label for pair in t_family.labels for label in pair}
    if paired & t_labels:
        raise e.IndexClash(
            f'T and the pairs share indices {sorted(paired & t_labels)}',
            payload={'shared': sorted(paired & t_labels)},
        )

    for i, j in t_family.labels:
        if intersects_trivially(system, i, j):
            raise e.HypothesisFailed(
                f'S_{i} and S_{j} in T intersect trivially; pair them instead',
                payload={'pair': [i, j]},
            )

    upsilon, bits = _upsilon_members(system, pairs)
    if not t_family.members:
        members, labels = upsilon, bits
    elif not pairs:
        members, labels = t_family.members, t_family.labels
    else:
        members = tuple(omega @ ups for omega in t_family.members for ups in upsilon)
        labels = tuple(tuple(pair) + eps for pair in t_family.labels for eps in bits)

    claim = 2 ** len(pairs) * (len(t_family.members) or 1)
    family = CertificateFamily(FamilyKind.R, members, labels, claim=claim)
    return _require_independent(family, system)


def _check_partition(system, partition):
    blocks = [list(block) for block in partition]
    if not blocks or any(not block for block in blocks):
        raise e.PartitionInvalid('partition blocks must be nonempty')
    flat = [label for block in blocks for label in block]
    _check_labels(system, flat)
    if len(set(flat)) != len(flat):
        raise e.PartitionInvalid('partition blocks must be disjoint', payload={'partition': blocks})
    return blocks


def build_lambda(system, partition):
    """prod_i Lambda_i^eps_i, Lambda_i the ascending product over block X_i
    """
    blocks = _check_partition(system, partition)
    _require_sc(system, FamilyKind.LAMBDA)
    for block in blocks:
        total = sum_of([system.subspace(label) for label in block], system.field, system.ell)
        if total.dim != system.ell:
            raise e.SumNotFull(
                f'subspaces of block {block} span dimension {total.dim} of {system.ell}',
                payload={'block': block, 'dimension': total.dim},
            )

    identity = system.field.identity(system.ell)
    factors = [_product(system, sorted(block)) for block in blocks]
    bits = tuple(itertools.product((0, 1), repeat=len(blocks)))
    members = tuple(_power_product(factors, eps, identity) for eps in bits)
    family = CertificateFamily(FamilyKind.LAMBDA, members, bits, claim=2 ** len(blocks))
    return _require_independent(family, system)


def build_gamma(system, partition):
    """Phi_{i_1} ... Phi_{i_t} over tuples from O_1 x ... x O_t whose
    subspaces share a nonzero vector
    """
    blocks = _check_partition(system, partition)
    _require_sc(system, FamilyKind.GAMMA)
    sizes = {len(block) for block in blocks}
    if len(sizes) != 1:
        raise e.UnequalParts(f'parts have sizes {sorted(sizes)}', payload={'partition': blocks})
    ensure_within(len(blocks[0]) ** len(blocks), 'gamma', error_class=e.TooLarge, what='tuples')

    labels = []
    for combo in itertools.product(*blocks):
        common = intersection_of([system.subspace(label) for label in combo], system.field, system.ell)
        if not common.is_zero():
            labels.append(combo)

    members = tuple(_product(system, combo) for combo in labels)
    family = CertificateFamily(FamilyKind.GAMMA, members, tuple(labels), claim=len(labels))
    return _require_independent(family, system)


def build_identity_family(system):
    """{I, Phi_1, ..., Phi_k}; independent whenever the system satisfies check_sc
    """
    members = (system.field.identity(system.ell),) + tuple(system.phis)
    labels = ((),) + tuple((label,) for label in system.labels)
    family = CertificateFamily(FamilyKind.IDENTITY_THETA, members, labels, claim=len(members))
    if check_sc(system):
        return _require_independent(family, system)
    return family


def sum_dim_check(system, indices):
    """dim(sum of S_i) against ceil((1 - ((r-1)/r)^n) ell)
    """
    indices = tuple(indices)
    _check_labels(system, indices)
    total = sum_of([system.subspace(label) for label in indices], system.field, system.ell)
    shrink = Fraction(system.r - 1, system.r) ** len(indices)
    bound = math.ceil((1 - shrink) * system.ell)
    return SumDimension(dim=total.dim, bound=bound, ok=total.dim >= bound, indices=indices)


def complementary_pairs(system):
    return [
        (i, j) for i, j in itertools.combinations(system.labels, 2)
        if intersects_trivially(system, i, j)
    ]


def greedy_pairing(system):
    """A maximal set of disjoint complementary pairs, scanning in label order
    """
    used, pairs = set(), []
    for i, j in complementary_pairs(system):
        if i not in used and j not in used:
            pairs.append((i, j))
            used.update((i, j))
    return pairs


def remaining_sets(system, pairs):
    """Split the unpaired labels into two equal halves for build_T
    """
    paired = {label for pair in pairs for label in pair}
    rest = [label for label in system.labels if label not in paired]
    half = len(rest) // 2
    return rest[:half], rest[half:2 * half]


def log_partition(system):
    """Consecutive blocks of floor(log_delta ell) + 1 labels; a short tail is dropped
    """
    size = floor_log_delta(system.ell, system.r) + 1 if system.r >= 2 else 1
    labels = list(system.labels)
    return [labels[i:i + size] for i in range(0, len(labels) - size + 1, size)]
