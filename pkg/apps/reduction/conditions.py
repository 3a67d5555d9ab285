"""
Helper-independent repair conditions on a PhiSystem

two_parity: S_i Phi_j = S_i for i != j and S_i Phi_i + S_i = F^ell.
general:    S_i A_{t,j} = S_i for every t and j != i, and
            sum_u S_i A_{u,i} = F^ell, reading the operator grid.
relaxed:    S_i Phi_j = S_i for i != j and S_i Phi_i meets S_i only in 0.
"""
import logging

from ..core.models import CheckReport, Violation
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.subspaces import subspace_apply, subspace_intersect, subspace_sum, sum_of


logger = logging.getLogger(__name__)

TWO_PARITY = 'two_parity'
GENERAL = 'general'
RELAXED = 'relaxed'
MODES = (TWO_PARITY, GENERAL, RELAXED)


def _invariance_violations(system, operator_of):
    violations = []
    for a, label_i in enumerate(system.labels):
        subspace = system.subspaces[a]
        for b, label_j in enumerate(system.labels):
            if a == b:
                continue
            for t, operator in operator_of(b):
                if subspace_apply(subspace, operator) != subspace:
                    violations.append(Violation(
                        'invariance', (label_i, label_j) if t is None else (label_i, label_j, t),
                        message=f'S_{label_i} is not invariant under the operator of {label_j}',
                    ))
    return violations


def check_sc(system):
    """Invariance under the other operators, trivial intersection under one's own
    """
    violations = _invariance_violations(system, lambda b: [(None, system.phis[b])])
    for a, label in enumerate(system.labels):
        subspace = system.subspaces[a]
        common = subspace_intersect(subspace_apply(subspace, system.phis[a]), subspace)
        if not common.is_zero():
            violations.append(Violation(
                'intersection', (label,), dimension=common.dim,
                message=f'S_{label} Phi_{label} meets S_{label} in dimension {common.dim}',
            ))
    return CheckReport.from_violations(violations)


def _check_dimensions(system):
    for label, subspace in zip(system.labels, system.subspaces):
        if subspace.dim != system.sub_dim:
            raise ShapeMismatch(
                f'S_{label} has dimension {subspace.dim}, expected {system.sub_dim}',
                payload={'label': label, 'dimension': subspace.dim},
            )


def default_mode(system):
    if system.operators is not None:
        return GENERAL
    return TWO_PARITY if system.r == 2 else RELAXED


def check_constant_conditions(system, code_row=None, mode=None):
    """Check a system against one of the three condition families

    `code_row` overrides the system's own operator grid for the general form.
    """
    _check_dimensions(system)
    operators = code_row if code_row is not None else system.operators
    if mode is None:
        mode = GENERAL if operators is not None else default_mode(system)
    if mode not in MODES:
        raise ShapeMismatch(f'unknown condition mode {mode!r}')

    if mode == RELAXED:
        return check_sc(system)

    if mode == TWO_PARITY:
        violations = _invariance_violations(system, lambda b: [(None, system.phis[b])])
        for a, label in enumerate(system.labels):
            subspace = system.subspaces[a]
            total = subspace_sum(subspace_apply(subspace, system.phis[a]), subspace)
            if total.dim != system.ell:
                violations.append(Violation(
                    'direct_sum', (label,), dimension=total.dim,
                    message=f'S_{label} Phi_{label} + S_{label} has dimension {total.dim}',
                ))
        return CheckReport.from_violations(violations)

    if operators is None:
        raise ShapeMismatch('the general form needs an r x k operator grid')
    if len(operators) != system.r or any(len(row) != system.size for row in operators):
        raise ShapeMismatch(f'operator grid must be {system.r}x{system.size}')

    def column(b):
        return [(t, operators[t - 1][b]) for t in range(1, system.r + 1)]

    violations = _invariance_violations(system, column)
    for a, label in enumerate(system.labels):
        subspace = system.subspaces[a]
        parts = [subspace_apply(subspace, matrix) for _, matrix in column(a)]
        total = sum_of(parts, system.field, system.ell)
        if total.dim != system.ell:
            violations.append(Violation(
                'direct_sum', (label,), dimension=total.dim,
                message=f'images of S_{label} under its own column span dimension {total.dim}',
            ))
    return CheckReport.from_violations(violations)
