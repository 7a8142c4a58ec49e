# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
The magic, semimagic and magilatin counting problems
"""
from .instances import (ProblemId, CountMode, WeightedFace, ProblemInstance,
                        instance, all_problems)
from .counting import (count_gf, quasipolynomial, principal_constant, s7_correction,
                       s7_series, truncated_quasipolynomial, weak_gf, weak_quasipolynomial,
                       StructuralReport, structural_checks, order_type_classes)
from .report import PeriodReport, period_report
