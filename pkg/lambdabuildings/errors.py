# -*- coding: utf-8 -*-
"""
Exceptions raised by lambdabuildings
"""

import numpy as np


class LambdaBuildingError(Exception):
    """Base class for all errors raised by lambdabuildings"""


class PrecisionExhausted(LambdaBuildingError, ArithmeticError):
    """
    Raised when a comparison falls outside a certified truncation window

    Parameters
    ----------
    operation : str
        Name of the comparison that could not be decided
    operands : sequence, optional
        Values involved in the comparison. Stored as strings so the error can
        be reported verbatim. Default: ()
    """

    def __init__(self, operation, operands=()):
        self.operation = operation
        self.operands = tuple(str(op) for op in operands)
        msg = 'Cannot certify `{}`'.format(operation)
        if self.operands:
            msg += ' on operands ({})'.format(', '.join(self.operands))
        super().__init__(msg + '; increase the truncation depth.')


class DivisionByZero(LambdaBuildingError, ZeroDivisionError):
    """Raised when inverting the zero element"""


class NegativeRadicand(LambdaBuildingError, ValueError):
    """Raised when taking the square root of a negative element"""


class SingularMatrix(LambdaBuildingError, np.linalg.LinAlgError):
    """Raised when a matrix that must be invertible has zero determinant"""


class NotInRing(LambdaBuildingError, ValueError):
    """Raised when an element outside the valuation ring is reduced"""


class NotSupported(LambdaBuildingError, NotImplementedError):
    """Raised when a value cannot be represented in the exact backend"""


class InvariantViolation(LambdaBuildingError, ValueError):
    """Raised when input data violates the invariants of its type"""
