# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Budget and export configuration.

The config file is optional and INI-like:

    [budget]
    cubic_t_max = 60
    affine_t_max = 60
    scan_t_max = 15
    weak_t_max = 40

    [oeis]
    A108576 = 1
"""

import logging
from configparser import ConfigParser, Error as ConfigParserError
from iopcount.util import error as err
from iopcount.util import constants as const

# List all classes in this module
__all__ = [
        'BudgetConfig',
]

class BudgetConfig:
    """
    Brute-force budgets and b-file offsets. Instances are read-only once
    built so worker threads can share them.
    """
    _BUDGET_KEYS = ('cubic_t_max', 'affine_t_max', 'scan_t_max', 'weak_t_max')

    def __init__(
            self,
            cubic_t_max: int = const.BudgetConstants.CUBIC_T_MAX,
            affine_t_max: int = const.BudgetConstants.AFFINE_T_MAX,
            scan_t_max: int = const.BudgetConstants.SCAN_T_MAX,
            weak_t_max: int = const.BudgetConstants.WEAK_T_MAX,
            oeis_offsets: dict = None
    ):
        self.logger = logging.getLogger(self.__module__)
        self.cubic_t_max = cubic_t_max
        self.affine_t_max = affine_t_max
        self.scan_t_max = scan_t_max
        self.weak_t_max = weak_t_max
        self.oeis_offsets = dict(oeis_offsets or {})

    @classmethod
    def from_file(cls, file_path: str) -> 'BudgetConfig':
        """
        Loads a config file. Missing sections fall back to the defaults.
        """
        parser = ConfigParser()
        # keep sequence ids in their upper case form
        parser.optionxform = str
        try:
            with open(file_path, encoding='utf-8') as config_file:
                parser.read_file(config_file)
        except (OSError, ConfigParserError) as exc:
            raise err.ConfigurationError(f'Could not read config {file_path}: {exc}') from exc

        values = {}
        if parser.has_section('budget'):
            for key, raw in parser.items('budget'):
                if key not in cls._BUDGET_KEYS:
                    raise err.ConfigurationError(f'{key} is not a budget setting')
                values[key] = cls._parse_positive(key, raw)

        offsets = {}
        if parser.has_section('oeis'):
            for key, raw in parser.items('oeis'):
                if key not in const.OeisConstants.SEQUENCES.values():
                    raise err.ConfigurationError(f'{key} is not a known sequence id')
                try:
                    offsets[key] = int(raw)
                except ValueError as exc:
                    raise err.ConfigurationError(f'{key}: offset {raw!r} is not an integer') from exc
                if offsets[key] < 0:
                    raise err.ConfigurationError(f'{key}: offset must not be negative')

        return cls(oeis_offsets=offsets, **values)

    @staticmethod
    def _parse_positive(key: str, raw: str) -> int:
        try:
            value = int(raw)
        except ValueError as exc:
            raise err.ConfigurationError(f'{key}: {raw!r} is not an integer') from exc
        if value < 1:
            raise err.ConfigurationError(f'{key} must be positive')
        return value

    def limit_for(self, parameter: str) -> int:
        """
        Normal-form enumeration limit for a counting parameter
        """
        if parameter == 'cubic':
            return self.cubic_t_max
        if parameter == 'affine':
            return self.affine_t_max
        raise err.ProvidedValueError(f'{parameter} is not a counting parameter')

    def check(self, parameter: str, t: int, limit: int = None):
        """
        Raises BudgetExceededError when t is beyond the budget
        """
        bound = self.limit_for(parameter) if limit is None else limit
        if t > bound:
            self.logger.warning('Refusing %s enumeration at t=%s (budget %s)', parameter, t, bound)
            raise err.BudgetExceededError(f'budget: t={t} exceeds {parameter} limit {bound}')

    def offset_for(self, sequence_id: str) -> int:
        """
        b-file offset for an OEIS sequence
        """
        return self.oeis_offsets.get(sequence_id, const.OeisConstants.DEFAULT_OFFSET)
