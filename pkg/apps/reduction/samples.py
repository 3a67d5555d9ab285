from ..codes.samples import fig1, fixture_path
from ..repair.samples import fig1_scheme
from .serializers import load_system
from .theta import theta_reduce


def fig1_theta():
    """Single pair Theta_1 = [[1, 1], [1, 0]], S_1 = span(0, 1)
    """
    return theta_reduce(fig1(), fig1_scheme())


def three_parity_system():
    """Both nodes of the (5, 2, 3) sample with S = span(1, 0, 0) and its operator grid

    Only node 1's subspace is constant under the other column.
    """
    return load_system(fixture_path('gf7_r3_system.json'))
