# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Ehrhart module

Fitted Ehrhart series, reciprocity, intersection posets and Möbius
inversion for inside-out polytopes.
"""

from .poset import Flat, IntersectionPoset, intersection_poset
from .series import (ehrhart_series,
                     open_series,
                     open_series_via_reciprocity,
                     open_inside_out_series,
                     closed_inside_out_series)
