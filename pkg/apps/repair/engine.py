"""
Exact interference-aligned repair of a failed systematic node

Helper j sends S_{i,j} v_j. Parity k+t sends S_{i,k+t} v_{k+t}, whose
systematic terms for j != i are cancelled with C_{j,t} S_{i,j} v_j, where
C_{j,t} S_{i,j} = S_{i,k+t} A_{t,j}. What is left is S_{i,k+t} A_{t,i} v_i
for every t, and these stack to an invertible ell x ell system.
"""
import logging
from fractions import Fraction

import numpy as np

from ..core.models import CheckReport, Violation
from ..ffalg.exceptions import NotInRowSpace, ShapeMismatch
from ..ffalg.matrices import as_lists, rank, solve_left, stack
from ..ffalg.subspaces import span, sum_of
from . import exceptions as e
from .models import RepairTranscript


logger = logging.getLogger(__name__)


def _check_compatible(code, scheme, failed):
    if scheme.params != code.params or scheme.field != code.field:
        raise ShapeMismatch('scheme and code disagree on parameters or field')
    if not code.params.is_systematic(failed):
        raise ShapeMismatch(f'node {failed} is not a systematic node of 1..{code.k}')


def residual_block(code, scheme, failed, t):
    """S_{i,k+t} A_{t,i}, the part of parity t's transmission that carries v_i
    """
    return scheme.basis(failed, code.k + t) @ code.matrix(t, failed)


def verify_scheme(code, scheme, failed):
    """Check alignment for every systematic helper and the full-rank sum

    Alignment violations carry (j, t); a deficient sum carries its dimension.
    """
    _check_compatible(code, scheme, failed)
    if not scheme.covers(failed):
        return CheckReport.from_violations([
            Violation('missing', (failed,), message=f'scheme has no entry for node {failed}'),
        ])

    sub_dim = code.params.sub_dim
    violations = []
    for j in range(1, code.n + 1):
        if j != failed and rank(scheme.basis(failed, j)) != sub_dim:
            violations.append(Violation(
                'rank', (j,), dimension=rank(scheme.basis(failed, j)),
                message=f'basis of helper {j} has rank below {sub_dim}',
            ))

    for j in range(1, code.k + 1):
        if j == failed:
            continue
        helper = scheme.subspace(failed, j)
        for t in range(1, code.r + 1):
            aligned = span(scheme.basis(failed, code.k + t) @ code.matrix(t, j))
            if aligned != helper:
                violations.append(Violation(
                    'alignment', (j, t),
                    message=f'S_{failed},{code.k + t} A_{t},{j} does not span S_{failed},{j}',
                ))

    parts = [span(residual_block(code, scheme, failed, t)) for t in range(1, code.r + 1)]
    total = sum_of(parts, code.field, code.ell)
    if total.dim != code.ell:
        violations.append(Violation(
            'direct_sum', (failed,), dimension=total.dim,
            message=f'residual subspaces span dimension {total.dim} of {code.ell}',
        ))

    report = CheckReport.from_violations(violations)
    logger.debug('scheme for node %d: %s', failed, 'valid' if report else f'{len(violations)} violations')
    return report


def verify_all(code, scheme):
    return {failed: verify_scheme(code, scheme, failed) for failed in scheme.failed_nodes()}


def change_of_basis(code, scheme, failed, j, t):
    """C_{j,t} with C_{j,t} S_{i,j} = S_{i,k+t} A_{t,j}
    """
    target = scheme.basis(failed, code.k + t) @ code.matrix(t, j)
    try:
        return solve_left(scheme.basis(failed, j), target)
    except NotInRowSpace:
        raise e.SchemeInvalid(
            f'helper {j} is not aligned with parity {t} for node {failed}',
            payload={'failed': failed, 'helper': j, 'parity': t},
        )


def _node_vectors(code, nodes, failed):
    if isinstance(nodes, dict):
        vectors = dict(nodes)
    else:
        vectors = {index: vector for index, vector in enumerate(nodes, start=1)}

    missing = [j for j in range(1, code.n + 1) if j != failed and vectors.get(j) is None]
    if missing:
        raise e.InconsistentNodeData(f'helpers {missing} have no data', payload={'missing': missing})

    ret = {}
    for j in range(1, code.n + 1):
        if j == failed:
            continue
        vector = code.field.coerce(vectors[j]).reshape(-1)
        if vector.shape != (code.ell,):
            raise e.InconsistentNodeData(f'node {j} holds {vector.shape[0]} symbols, expected {code.ell}')
        ret[j] = vector
    return ret


def execute_repair(code, scheme, failed, nodes):
    """Rebuild v_i from one projection per helper

    `nodes` is a list of the n node vectors or a dict keyed by node; the
    failed node's entry is ignored and may be missing.
    """
    report = verify_scheme(code, scheme, failed)
    if not report:
        raise e.SchemeInvalid(
            f'scheme cannot repair node {failed}',
            payload={'violations': [v.as_dict() for v in report.violations]},
        )

    vectors = _node_vectors(code, nodes, failed)
    transmissions = {j: scheme.basis(failed, j) @ vector for j, vector in vectors.items()}

    residuals = []
    for t in range(1, code.r + 1):
        residual = transmissions[code.k + t]
        for j in range(1, code.k + 1):
            if j != failed:
                residual = residual - change_of_basis(code, scheme, failed, j, t) @ transmissions[j]
        residuals.append(residual)

    system = stack(code.field.gf, [residual_block(code, scheme, failed, t) for t in range(1, code.r + 1)])
    recovered = np.linalg.solve(system, stack(code.field.gf, residuals))

    for t in range(1, code.r + 1):
        parity = code.matrix(t, failed) @ recovered
        for j in range(1, code.k + 1):
            if j != failed:
                parity = parity + code.matrix(t, j) @ vectors[j]
        if not np.array_equal(parity, vectors[code.k + t]):
            raise e.InconsistentNodeData(
                f'parity node {code.k + t} does not match the systematic data',
                payload={'node': code.k + t, 'expected': as_lists(parity.reshape(1, -1))[0]},
            )

    transcript = RepairTranscript(
        failed=failed, field=code.field, transmissions=transmissions, recovered=recovered,
    )
    logger.info('repaired node %d from %d symbols', failed, transcript.symbols)
    return transcript


def bandwidth_of(params):
    """Optimal repair bandwidth (n - 1) ell / r in symbols
    """
    return Fraction((params.n - 1) * params.ell, params.r)


def naive_bandwidth(params):
    """Symbols moved by repairing through full reconstruction from k nodes
    """
    return params.k * params.ell
