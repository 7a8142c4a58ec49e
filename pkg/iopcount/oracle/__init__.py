# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Oracle module

Brute-force enumeration of 3x3 squares, used to check every generating
function, plus verification tables and b-file export.
"""

from .square import (Square3,
                     symmetry_group,
                     satisfies,
                     canonicalize,
                     orbit,
                     orbit_size,
                     stabilizer_order)
from .enumerate import (reduced_counts,
                        reduced_counts_table,
                        enumerate_squares,
                        enumerate_weak,
                        scan_squares)
from .export import (VerificationRow,
                     verification_table,
                     series_values,
                     format_csv,
                     write_csv,
                     format_bfile,
                     write_bfile,
                     oeis_sequence)
