# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Generic Error Classes
"""

# needed imports
from iopcount.util.constants import ErrorConstants as errconst

# list every error class that's enabled

__all__ = [
        'GenericError',
        'ProvidedValueError',
        'MissingValueError',
        'ConfigurationError',
        'NotFoundError',
        'UnboundedPolytopeError',
        'SeriesFitError',
        'SeriesFormError',
        'ConstituentMismatchError',
        'RouteMismatchError',
        'BudgetExceededError',
        'VerificationMismatchError',
]


class GenericError(Exception):
    """
    Custom exceptions entrypoint
    """
    fault_code = errconst.ERR_GENERAL
    from_fault = False
    def __str__(self):
        try:
            return str(self.args[0]['args'][0])
        # pylint: disable=broad-exception-caught
        except Exception:
            try:
                return str(self.args[0])
            # pylint: disable=broad-exception-caught
            except Exception:
                return str(self.__dict__)

# Starting at this point is every error class that iopcount will deal with.
class ProvidedValueError(GenericError):
    """
    What it says on the tin
    """
    fault_code = errconst.ERR_PROVIDED_VALUE

class MissingValueError(GenericError):
    """
    Value being requested or provided is missing
    """
    fault_code = errconst.ERR_MISSING_VALUE

class ConfigurationError(GenericError):
    """
    Config file is unreadable or carries bad values
    """
    fault_code = errconst.ERR_CONFIGURATION

class NotFoundError(GenericError):
    """
    Requested key (problem, mode, sequence) does not exist
    """
    fault_code = errconst.ERR_NOTFOUND

class UnboundedPolytopeError(GenericError):
    """
    Constraint system has a nonzero recession direction
    """
    fault_code = errconst.GEOM_ERR_UNBOUNDED

class SeriesFitError(GenericError):
    """
    Extra dilate counts disagree with the fitted Ehrhart series
    """
    fault_code = errconst.SERIES_ERR_FIT

class SeriesFormError(GenericError):
    """
    Generating function is not in the expected standard form
    """
    fault_code = errconst.SERIES_ERR_FORM

class ConstituentMismatchError(GenericError):
    """
    Quasipolynomial evaluated to a non-integer
    """
    fault_code = errconst.SERIES_ERR_CONSTITUENT

class RouteMismatchError(GenericError):
    """
    Reciprocity-first and reciprocity-last series differ
    """
    fault_code = errconst.SERIES_ERR_ROUTE

class BudgetExceededError(GenericError):
    """
    Enumeration request beyond the configured budget
    """
    fault_code = errconst.ORACLE_ERR_BUDGET

class VerificationMismatchError(GenericError):
    """
    Generating function and oracle disagree
    """
    fault_code = errconst.ORACLE_ERR_MISMATCH
