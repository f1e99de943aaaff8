"""semiact Exceptions.

SPDX-License-Identifier: BSD-3-Clause
"""


class SemiactException(Exception):
    """The most generic form of exception raised by semiact."""


class DocumentException(SemiactException):
    """Indicates an input document could not be read or parsed."""


class ValidationException(SemiactException):
    """Indicates that an input did not satisfy the axioms of its type."""


class OutOfRangeException(ValidationException):
    """Indicates a multiplication table entry outside of the element range."""


class NotAssociativeException(ValidationException):
    """Indicates that a multiplication table is not associative."""

    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"Table is not associative on the triple ({a}, {b}, {c})")
        self.triple = (a, b, c)


class InvalidGroupException(ValidationException):
    """Indicates that a semigroup expected to be a group is not one."""


class NotInverseException(ValidationException):
    """Indicates that a semigroup expected to be an inverse semigroup is not one."""


class UnknownFamilyException(ValidationException):
    """Indicates that an unknown semigroup family was requested."""


class RingMismatchException(SemiactException):
    """Indicates that operands live over different semigroups or coefficient rings."""


class DimensionMismatchException(SemiactException):
    """Indicates that matrix or vector dimensions are incompatible."""


class ShapeMismatchException(SemiactException):
    """Indicates that points or vectors do not share the same shape."""


class PreconditionViolatedException(SemiactException):
    """Indicates that an operation was called outside of its precondition."""


class NoLeftIdentityException(PreconditionViolatedException):
    """Indicates that the convolution algebra has no left identity."""


class ZeroElementException(PreconditionViolatedException):
    """Indicates that a non-zero element was required."""


class NotInvertibleException(SemiactException):
    """Indicates that an element is not invertible."""


class NotContractiveException(SemiactException):
    """Indicates that a Neumann series would not converge."""


class BudgetException(SemiactException):
    """Indicates that a computation did not finish within its budget."""


class IdentitySolveFailedException(SemiactException):
    """Indicates that an identity which must exist could not be found."""


class ConsistencyException(SemiactException):
    """Indicates that two independent computations disagreed."""


class VerificationException(SemiactException):
    """Indicates that a certificate failed re-verification."""
