# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Rational generating functions over (1 - x^a) denominators and their
quasipolynomials
"""

from .gf import (RationalGF,
                 add,
                 mul,
                 scale,
                 shift,
                 coefficients,
                 coefficient,
                 convolve_upper_bound,
                 convolve_magic_sum,
                 deconvolve_upper_bound,
                 deconvolve_magic_sum,
                 standard_form,
                 format_polynomial)
from .quasi import (Quasipolynomial,
                    to_quasipolynomial,
                    eval_quasipolynomial,
                    format_constituent)
