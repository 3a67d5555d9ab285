from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

# Which systematic count a bound constrains: the code's own k, or the number
# of pairs in its helper-independent system (one fewer).
CODE = 'code'
SYSTEM = 'system'


@dataclass(frozen=True)
class BoundReport:
    """Every closed-form bound at (ell, r)

    Entries that do not apply at these parameters are None. quadratic, logsq
    and linear_r2_intro bound the code's k; linear_r2 bounds the system size.
    """
    ell: int
    r: int
    quadratic: int
    linear_r2: Optional[int]
    logsq: Optional[int]
    known_achievable: Fraction
    bandwidth: Optional[Fraction] = None
    n: Optional[int] = None
    linear_r2_intro: Optional[int] = None
    delta: Optional[Fraction] = None

    def upper_bounds(self):
        """(name, value, counts) for every applicable upper bound
        """
        ret = [('quadratic', self.quadratic, CODE)]
        if self.linear_r2 is not None:
            ret.append(('linear_r2', self.linear_r2, SYSTEM))
        if self.linear_r2_intro is not None:
            ret.append(('linear_r2_intro', self.linear_r2_intro, CODE))
        if self.logsq is not None:
            ret.append(('logsq', self.logsq, CODE))
        return ret
