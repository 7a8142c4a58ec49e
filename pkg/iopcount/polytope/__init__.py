# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Polytope module

Exact rational polytopes, faces and inside-out polytopes, with vertex
enumeration and lattice point counting of their dilates.
"""

from .polytope import (Hyperplane,
                       HPolytope,
                       Face,
                       InsideOutPolytope,
                       vertices,
                       inside_out_vertices,
                       denominator,
                       affine_dimension)
from .lattice import DilateCount, count_closed, count_open, count_open_off_arrangement
