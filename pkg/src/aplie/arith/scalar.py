"""Exact rational scalars.

Every quantity in this package is an exact rational number.  The scalar
type is ``gmpy2.mpq`` when gmpy2 is importable (its C implementation is
much faster for the Groebner and solver hot paths) and
``fractions.Fraction`` otherwise.  Both types are immutable, hashable,
always stored in lowest terms with a positive denominator, and
interoperate through the same operator interface, so the rest of the
code never needs to know which backend is active.

Set ``APLIE_PURE_PYTHON=1`` to force the Fraction backend.
"""

from __future__ import annotations

import os
from fractions import Fraction

from aplie.errors import ArithmeticDomainError

if os.environ.get("APLIE_PURE_PYTHON"):
    Q = Fraction
    SCALAR_BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as Q

        SCALAR_BACKEND = "gmpy2"
    except ImportError:
        Q = Fraction
        SCALAR_BACKEND = "fractions"

ZERO = Q(0)
ONE = Q(1)

#: accepted scalar-like inputs for :func:`as_scalar`
Scalar = type(ZERO)


def as_scalar(value) -> Scalar:
    """Coerce an int, string "p/q", or scalar to the active scalar type."""
    if isinstance(value, str):
        return parse_scalar(value)
    return Q(value)


def parse_scalar(text: str) -> Scalar:
    """Parse the serialization format "p/q" (or "p" when q = 1)."""
    try:
        if "/" in text:
            num, den = text.split("/")
            return Q(int(num), int(den))
        return Q(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ArithmeticDomainError(f"bad rational literal {text!r}: {exc}") from None


def scalar_str(value: Scalar) -> str:
    """Serialize as "p/q", or "p" for integers.  str() of both backends agrees."""
    return str(value)


def scalar_arith(op: str, a, b=None) -> Scalar:
    """Dispatch table for the four field operations.

    ``inv`` and two-argument ops validate their preconditions and raise
    :class:`ArithmeticDomainError` instead of the backend's ZeroDivisionError.
    """
    a = as_scalar(a)
    if op == "neg":
        return -a
    if op == "inv":
        if a == 0:
            raise ArithmeticDomainError("inverse of zero")
        return 1 / a
    if b is None:
        raise ArithmeticDomainError(f"operation {op!r} needs a second operand")
    b = as_scalar(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ArithmeticDomainError(f"unknown scalar operation {op!r}")


def is_reduced(value: Scalar) -> bool:
    """Check the reduced-form invariant gcd(|num|, den) = 1, den > 0."""
    import math

    num = int(value.numerator)
    den = int(value.denominator)
    return den > 0 and math.gcd(abs(num), den) == 1
