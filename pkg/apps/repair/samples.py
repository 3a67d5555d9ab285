from ..codes.samples import fig1
from .models import RepairScheme


def fig1_scheme(failed=1, overrides=None):
    """Every helper of `failed` projects onto span(0, 1) unless overridden
    """
    code = fig1()
    helpers = {j: [[0, 1]] for j in range(1, code.n + 1) if j != failed}
    helpers.update(overrides or {})
    return RepairScheme(code.params, code.field, {failed: helpers})
