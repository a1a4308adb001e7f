"""
Store global constants.

Author: Tilings developers
"""


import math


INFINITY = math.inf
SCHEMA_VERSION = 1

MAX_GENERATORS = 16
MAX_GROUP_ORDER = 10 ** 6
MAX_COMPLEX_VERTICES = 24
MAX_AUTOMORPHISMS = 10 ** 5
MAX_COSETS = 10 ** 5
T_SCAN_CAP = 100
MAX_CONDITION_F_GENERATORS = 12
MAX_SYMMETRIC_PRESENTATION_DIM = 6

ROOT_ROUNDING_DIGITS = 8
FLOAT_TOLERANCE = 1e-9
