"""
Functions for generating and loading datasets
"""

__all__ = [
    'make_puiseux', 'make_unit', 'make_unipotent', 'make_sl_matrix',
    'make_integral_matrix', 'make_orthogonal', 'make_pd_point',
    'make_building_point', 'make_trajectory', 'make_weight',
    'load_worked_examples'
]

from .generators import (make_puiseux, make_unit, make_unipotent,
                         make_sl_matrix, make_integral_matrix,
                         make_orthogonal, make_pd_point, make_building_point,
                         make_trajectory, make_weight)
from .utils import (load_worked_examples)
