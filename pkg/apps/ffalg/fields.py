"""
Finite fields GF(p^m) backed by galois field classes

Elements are packed integers in [0, q): the polynomial c_0 + c_1 x + ... is
stored as sum(c_i * p**i), which is also galois' integer representation.
"""
import functools
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import galois

from . import exceptions as e


logger = logging.getLogger(__name__)

MAX_ORDER = 2 ** 64


@functools.lru_cache(maxsize=None)
def _galois_field(p, m, reduction):
    if m == 1:
        return galois.GF(p)

    poly = galois.Poly(list(reduction), field=galois.GF(p), order='asc')
    logger.debug('building GF(%d^%d) with reduction %s', p, m, poly)
    return galois.GF(p ** m, irreducible_poly=poly)


@dataclass(frozen=True)
class FieldSpec:
    """A finite field given by characteristic, degree and reduction polynomial

    `reduction` lists coefficients in ascending degree order and is None for
    prime fields. Build instances through `field_make`, which validates.
    """
    p: int
    m: int = 1
    reduction: Optional[Tuple[int, ...]] = None

    @property
    def order(self):
        return self.p ** self.m

    @property
    def gf(self):
        return _galois_field(self.p, self.m, self.reduction)

    @property
    def label(self):
        if self.m == 1:
            return f'GF({self.p})'
        return f'GF({self.p}^{self.m})'

    def __str__(self):
        return self.label

    def __call__(self, values):
        return self.gf(values)

    def owns(self, array):
        return isinstance(array, galois.FieldArray) and type(array) is self.gf

    def coerce(self, values):
        if self.owns(values):
            return values
        if isinstance(values, galois.FieldArray):
            raise e.FieldMismatch(
                f'array over GF({type(values).order}) used where {self.label} is expected'
            )
        return self.gf(values)

    def zeros(self, shape):
        return self.gf.Zeros(shape)

    def identity(self, size):
        return self.gf.Identity(size)

    def random(self, shape, rng=None):
        return self.gf.Random(shape, seed=rng)

    # Element arithmetic on packed integers
    def add(self, a, b):
        return int(self.gf(a) + self.gf(b))

    def sub(self, a, b):
        return int(self.gf(a) - self.gf(b))

    def neg(self, a):
        return int(-self.gf(a))

    def mul(self, a, b):
        return int(self.gf(a) * self.gf(b))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('0 has no inverse')
        return int(self.gf(a) ** -1)

    def pow(self, a, exponent):
        return int(self.gf(a) ** exponent)

    def as_dict(self):
        return {
            'p': self.p,
            'm': self.m,
            'reduction': list(self.reduction) if self.reduction is not None else None,
        }


def field_make(p, m=1, reduction=None):
    """Validate (p, m, reduction) and return the FieldSpec

    The reduction polynomial is required exactly when m > 1; it must be monic
    of degree m and irreducible over GF(p).
    """
    p = int(p)
    m = int(m)
    if p < 2 or not galois.is_prime(p):
        raise e.NonPrimeCharacteristic(f'{p} is not prime', payload={'p': p})

    if m < 1:
        raise e.FieldSpecError(f'extension degree must be at least 1, got {m}', payload={'m': m})

    if p ** m >= MAX_ORDER:
        raise e.FieldTooLarge(f'GF({p}^{m}) does not fit in 64 bits', payload={'p': p, 'm': m})

    if m == 1:
        if reduction is not None:
            raise e.FieldSpecError('prime fields take no reduction polynomial')
        return FieldSpec(p=p, m=1, reduction=None)

    if reduction is None:
        raise e.MissingReduction(f'GF({p}^{m}) needs a reduction polynomial')

    coefficients = tuple(int(c) for c in reduction)
    if len(coefficients) != m + 1 or coefficients[-1] != 1:
        raise e.ReduciblePolynomial(
            f'reduction must be monic of degree {m}',
            payload={'reduction': list(coefficients)},
        )

    if any(c < 0 or c >= p for c in coefficients):
        raise e.ReduciblePolynomial(
            f'reduction coefficients must lie in [0, {p})',
            payload={'reduction': list(coefficients)},
        )

    poly = galois.Poly(list(coefficients), field=galois.GF(p), order='asc')
    if not poly.is_irreducible():
        raise e.ReduciblePolynomial(
            f'{poly} is reducible over GF({p})',
            payload={'reduction': list(coefficients)},
        )

    return FieldSpec(p=p, m=m, reduction=coefficients)


def spec_of(array):
    """Recover the FieldSpec of a galois array
    """
    gf = type(array)
    if gf.degree == 1:
        return FieldSpec(p=int(gf.characteristic), m=1, reduction=None)

    coefficients = tuple(int(c) for c in gf.irreducible_poly.coeffs[::-1])
    return FieldSpec(p=int(gf.characteristic), m=int(gf.degree), reduction=coefficients)
