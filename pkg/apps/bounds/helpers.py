"""
Closed-form bounds on the number of systematic nodes

All logarithms are evaluated exactly: log2 only for powers of two, and
floor(log_delta ell) with delta = r / (r - 1) by integer comparison.
"""
import logging
import math
from fractions import Fraction

from . import exceptions as e
from .models import CODE, SYSTEM, BoundReport


logger = logging.getLogger(__name__)


def exact_log2(ell):
    if ell < 1 or ell & (ell - 1):
        raise e.NonPowerOfTwo(f'{ell} is not a power of two', payload={'ell': ell})
    return ell.bit_length() - 1


def exact_log(value, base):
    """log_base(value) when value is an exact power of base, else None
    """
    exponent, power = 0, 1
    while power < value:
        power *= base
        exponent += 1
    return exponent if power == value else None


def delta(r):
    if r < 2:
        raise e.InvalidParams(f'delta needs r >= 2, got {r}')
    return Fraction(r, r - 1)


def floor_log_delta(ell, r):
    """Largest e with (r / (r - 1))**e <= ell, i.e. r**e <= ell * (r - 1)**e
    """
    if ell < 1:
        raise e.InvalidParams(f'ell must be positive, got {ell}')
    delta(r)
    exponent = 0
    while r ** (exponent + 1) <= ell * (r - 1) ** (exponent + 1):
        exponent += 1
    return exponent


def bound_quadratic(ell):
    if ell < 1:
        raise e.InvalidParams(f'ell must be positive, got {ell}')
    return ell * ell


def bound_linear_r2(ell):
    """max(4 ell, 8 log2 ell), bounding the size of a two-parity system
    """
    return max(4 * ell, 8 * exact_log2(ell))


def linear_r2_intro(ell):
    """The same result stated for the code's k: 4 ell + 1
    """
    exact_log2(ell)
    return 4 * ell + 1


def bound_logsq(ell, r):
    """2 log2(ell) (floor(log_delta ell) + 1) + 1, bounding the code's k
    """
    if ell < 2 or r < 2:
        raise e.InvalidParams(f'log-squared bound needs ell >= 2 and r >= 2, got ell={ell}, r={r}',
                              payload={'ell': ell, 'r': r})
    return 2 * exact_log2(ell) * (floor_log_delta(ell, r) + 1) + 1


def known_achievable(ell, r):
    """(r + 1) log_r ell, the size reached by known constructions

    Exact when ell is a power of r, otherwise the closest fraction with a
    denominator up to 10**6.
    """
    if ell < 1 or r < 2:
        raise e.InvalidParams(f'known_achievable needs ell >= 1 and r >= 2, got ell={ell}, r={r}')
    exponent = exact_log(ell, r)
    if exponent is not None:
        return Fraction((r + 1) * exponent)
    return Fraction((r + 1) * math.log(ell, r)).limit_denominator(10 ** 6)


def bandwidth(ell, r, n):
    return Fraction((n - 1) * ell, r)


def bound_report(ell, r, n=None):
    def optional(func, *args):
        try:
            return func(*args)
        except e.InvalidParams:
            return None

    return BoundReport(
        ell=ell,
        r=r,
        quadratic=bound_quadratic(ell),
        linear_r2=optional(bound_linear_r2, ell) if r == 2 else None,
        logsq=optional(bound_logsq, ell, r),
        known_achievable=known_achievable(ell, r) if r >= 2 else Fraction(0),
        bandwidth=bandwidth(ell, r, n) if n is not None else None,
        n=n,
        linear_r2_intro=optional(linear_r2_intro, ell) if r == 2 else None,
        delta=delta(r) if r >= 2 else None,
    )


def consistency_assert(kmax, report, counts=SYSTEM):
    """Check a searched maximum against every applicable upper bound

    `counts` says whether kmax is a system size or a code's k; a system of
    size s comes from a code with s + 1 systematic nodes.
    """
    system_k = kmax if counts == SYSTEM else kmax - 1
    code_k = system_k + 1
    violated = []
    for name, value, target in report.upper_bounds():
        k = code_k if target == CODE else system_k
        if k > value:
            violated.append({'bound': name, 'value': value, 'k': k})

    if violated:
        logger.error('k=%d at ell=%d, r=%d exceeds %s', kmax, report.ell, report.r, violated)
        raise e.BoundViolated(
            f'k={kmax} exceeds {len(violated)} bound(s) at ell={report.ell}, r={report.r}',
            payload={'kmax': kmax, 'counts': counts, 'ell': report.ell, 'r': report.r,
                     'violated': violated},
        )
    return True
