"""
The two shipped example codes
"""
import os

from django.conf import settings

from .serializers import load_code


def fixture_path(name):
    return os.path.join(settings.FIXTURE_ROOT, name)


def fig1():
    """(4, 2, 2) code over GF(2) with A_{2,1} = [[0, 1], [1, 1]]
    """
    return load_code(fixture_path('fig1.json'))


def table1():
    """(6, 4, 2) code over GF(7)
    """
    return load_code(fixture_path('table1.json'))


def three_parity():
    """(5, 2, 3) code over GF(7): node 1 has cyclic permutations, node 2 diagonals
    """
    return load_code(fixture_path('gf7_r3.json'))
