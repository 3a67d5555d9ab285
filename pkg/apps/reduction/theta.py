"""
From a two-parity code with a valid repair scheme to a Theta system

With node a as the anchor, Theta_i = A_{1,i} A_{2,i}^-1 A_{2,a} A_{1,a}^-1
and S_i = S_{i,k+1} for every other systematic node i. A valid scheme makes
S_i invariant under Theta_j for j != i and disjoint from S_i Theta_i.
"""
import logging

from ..codes.models import ArrayCode
from ..core.exceptions import MsrlabError
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.matrices import invert, matrix_product
from ..ffalg.subspaces import span
from ..repair.engine import verify_scheme
from ..repair.exceptions import SchemeInvalid
from ..repair.models import RepairScheme
from . import exceptions as e
from .conditions import check_sc
from .models import NormalizedCode, PhiSystem


logger = logging.getLogger(__name__)


def _invert_encoding(code, t, j):
    try:
        return invert(code.matrix(t, j))
    except MsrlabError:
        raise e.SingularEncodingMatrix(
            f'A_{t},{j} is singular',
            payload={'parity': t, 'node': j},
        )


def _require_two_parities(code):
    if code.r != 2:
        raise e.RequiresTwoParities(f'the Theta construction needs r = 2, got r = {code.r}')


def theta_operators(code, anchor=None):
    """Theta_i for every systematic node except the anchor, keyed by node
    """
    _require_two_parities(code)
    anchor = code.k if anchor is None else anchor
    if not code.params.is_systematic(anchor):
        raise ShapeMismatch(f'anchor {anchor} is not a systematic node')

    tail = code.matrix(2, anchor) @ _invert_encoding(code, 1, anchor)
    return {
        i: matrix_product(code.matrix(1, i), _invert_encoding(code, 2, i), tail)
        for i in range(1, code.k + 1) if i != anchor
    }


def theta_reduce(code, scheme, anchor=None):
    """The Theta system of a code and a scheme valid for every non-anchor node

    Raises ConditionsFailed if the result does not satisfy check_sc, which a
    valid scheme rules out.
    """
    _require_two_parities(code)
    anchor = code.k if anchor is None else anchor
    operators = theta_operators(code, anchor)

    for i in operators:
        report = verify_scheme(code, scheme, i)
        if not report:
            raise SchemeInvalid(
                f'scheme cannot repair node {i}',
                payload={'failed': i, 'violations': [v.as_dict() for v in report.violations]},
            )

    labels = tuple(sorted(operators))
    system = PhiSystem(
        field=code.field, ell=code.ell, r=2,
        phis=tuple(operators[i] for i in labels),
        subspaces=tuple(span(scheme.basis(i, code.k + 1)) for i in labels),
        labels=labels,
    )

    report = check_sc(system)
    if not report:
        logger.error('Theta system from a valid scheme fails the conditions: %s',
                     [v.as_dict() for v in report.violations])
        raise e.ConditionsFailed(
            'Theta system fails the invariance conditions',
            payload={'violations': [v.as_dict() for v in report.violations]},
        )
    logger.info('Theta reduction: %d pairs anchored at node %d', system.size, anchor)
    return system


def normalize_identity_parity(code):
    """Rewrite the code so every A_{2,j} becomes the identity

    Data coordinates change to v'_j = A_{2,j} v_j, so A'_{t,j} = A_{t,j} A_{2,j}^-1
    for every parity t.
    """
    if code.r < 2:
        raise ShapeMismatch(f'normalization needs a second parity, got r = {code.r}')
    transforms = tuple(_invert_encoding(code, 2, j) for j in range(1, code.k + 1))
    grid = [
        [code.matrix(t, j) @ transforms[j - 1] for j in range(1, code.k + 1)]
        for t in range(1, code.r + 1)
    ]
    normalized = ArrayCode(
        params=code.params, field=code.field,
        encoding=tuple(tuple(row) for row in grid),
    )
    return NormalizedCode(code=normalized, original=code, transforms=transforms)


def transform_scheme(scheme, normalized):
    """Carry a scheme for the original code over to the normalized one
    """
    k = normalized.code.k
    bases = {}
    for failed in scheme.failed_nodes():
        bases[failed] = {
            j: basis @ normalized.transforms[j - 1] if j <= k else basis
            for j, basis in scheme.bases[failed].items()
        }
    return RepairScheme(scheme.params, scheme.field, bases)
