"""Sparse multivariate polynomials over the exact rationals.

A :class:`PolyRing` is a registry of variable names; polynomials store a
dict mapping dense exponent tuples (one slot per registered variable) to
nonzero scalar coefficients.  The systems built here stay small (at most
a few hundred variables, total degree two), so dense exponent tuples are
cheap and make hashing trivial.

Monomial orders are passed by name ("degrevlex" or "lex") to the
operations that need one; the term store itself is unordered.
"""

from __future__ import annotations

import math
from typing import Iterable

from aplie._kernels import addmul_terms, terms_mul
from aplie.arith.scalar import ONE, Q, ZERO, as_scalar, scalar_str
from aplie.errors import ArithmeticDomainError

MONOMIAL_ORDERS = ("degrevlex", "lex")


def order_key(order: str):
    """Sort key on exponent tuples; larger key = larger monomial."""
    if order == "lex":
        return lambda e: e
    if order == "degrevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ArithmeticDomainError(f"unknown monomial order {order!r}")


class PolyRing:
    """Variable registry shared by all polynomials of one constraint system."""

    def __init__(self, variables: Iterable[str]):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ArithmeticDomainError("duplicate variable names in ring")
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.nvars = len(self.variables)
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"PolyRing({list(self.variables)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def const(self, c) -> MultiPoly:
        c = as_scalar(c)
        if not c:
            return self.zero()
        return MultiPoly(self, {self._zero_exp: c})

    def var(self, name: str) -> MultiPoly:
        i = self.index[name]
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MultiPoly(self, {exp: ONE})

    def monomial(self, exp, coeff=ONE) -> MultiPoly:
        coeff = as_scalar(coeff)
        if not coeff:
            return self.zero()
        return MultiPoly(self, {tuple(exp): coeff})

    def from_terms(self, terms) -> MultiPoly:
        clean = {tuple(e): as_scalar(c) for e, c in terms.items() if as_scalar(c)}
        return MultiPoly(self, clean)


class MultiPoly:
    """Immutable sparse polynomial.  Do not mutate ``terms`` after creation."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """Value of a constant polynomial (zero polynomial gives 0)."""
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ArithmeticDomainError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def variables_present(self) -> tuple[str, ...]:
        seen = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen[i] = True
        return tuple(v for i, v in enumerate(self.ring.variables) if seen[i])

    def leading_term(self, order: str = "degrevlex"):
        """(exponent tuple, coefficient) of the largest monomial, or None."""
        if not self.terms:
            return None
        e = max(self.terms, key=order_key(order))
        return e, self.terms[e]

    def sorted_terms(self, order: str = "degrevlex"):
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    # -- ring operations -------------------------------------------------

    def _check_ring(self, other: "MultiPoly"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ArithmeticDomainError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        self._check_ring(other)
        out = dict(self.terms)
        addmul_terms(out, ONE, None, other.terms)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        self._check_ring(other)
        out = dict(self.terms)
        addmul_terms(out, -ONE, None, other.terms)
        return MultiPoly(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_scalar(other)
            if not c:
                return self.ring.zero()
            return MultiPoly(self.ring, {e: c * v for e, v in self.terms.items()})
        self._check_ring(other)
        return MultiPoly(self.ring, terms_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ArithmeticDomainError("negative polynomial power")
        result = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, type(ZERO))):
                return self.terms == self.ring.const(other).terms
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and evaluation --------------------------------------

    def substitute(self, name: str, value) -> "MultiPoly":
        """Eliminate ``name`` by substituting a polynomial or scalar for it."""
        i = self.ring.index.get(name)
        if i is None:
            raise ArithmeticDomainError(f"variable {name!r} not in ring")
        if not isinstance(value, MultiPoly):
            value = self.ring.const(value)
        deg = self.degree_in(name)
        if deg == 0:
            return self
        powers = [self.ring.const(1), value]
        for _ in range(deg - 1):
            powers.append(powers[-1] * value)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                addmul_terms(out, c, None, {e: ONE})
                continue
            stripped = e[:i] + (0,) + e[i + 1 :]
            addmul_terms(out, c, stripped, powers[k].terms)
        return MultiPoly(self.ring, out)

    def evaluate(self, assignment: dict):
        """Evaluate at a full scalar assignment; returns a scalar.

        Raises with the list of missing variables if the assignment does
        not cover every variable that actually occurs.
        """
        needed = self.variables_present()
        missing = [v for v in needed if v not in assignment]
        if missing:
            raise ArithmeticDomainError(f"missing assignments for {missing}")
        values = {self.ring.index[v]: as_scalar(assignment[v]) for v in needed}
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * values[i] ** k
            total = total + term
        return total

    # -- univariate factoring ---------------------------------------------

    def factor_univariate_in(self, name: str):
        """Split off rational linear factors in ``name``.

        The polynomial must have degree <= 2 in ``name`` and constant
        coefficients (no other variables).  Returns ``(factors, irreducible)``;
        when irreducible over the rationals the factor list is ``[self]``.
        Rational roots are found by divisor enumeration on the
        integer-cleared coefficients.
        """
        deg = self.degree_in(name)
        if deg > 2:
            raise ArithmeticDomainError(f"degree in {name!r} exceeds 2")
        others = [v for v in self.variables_present() if v != name]
        if others:
            raise ArithmeticDomainError(f"coefficients involve {others}")
        i = self.ring.index[name]
        coeffs = {k: ZERO for k in range(3)}
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        a, b, c0 = coeffs[2], coeffs[1], coeffs[0]
        x = self.ring.var(name)
        if deg <= 1:
            if deg == 0:
                return [self], False
            return [x + self.ring.const(c0 / b)], False
        roots = _rational_quadratic_roots(a, b, c0)
        if roots is None:
            return [self], True
        r1, r2 = roots
        return [x - self.ring.const(r1), x - self.ring.const(r2)], False

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms("degrevlex"):
            mono = "*".join(
                f"{self.ring.variables[i]}^{k}" if k > 1 else self.ring.variables[i]
                for i, k in enumerate(e)
                if k
            )
            if not mono:
                parts.append(scalar_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{scalar_str(c)}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    __repr__ = __str__


def _divisors(n: int):
    n = abs(n)
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _rational_quadratic_roots(a, b, c):
    """Both roots of a*x^2 + b*x + c when rational, else None.

    Uses the discriminant: roots are rational iff b^2 - 4ac is the square
    of a rational, checked exactly via integer square roots.
    """
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    num = int(disc.numerator)
    den = int(disc.denominator)
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    s = Q(rn, rd)
    r1 = (-b + s) / (2 * a)
    r2 = (-b - s) / (2 * a)
    return (r1, r2) if r1 <= r2 else (r2, r1)


def rational_root_candidates(int_coeffs: list[int]):
    """Candidate rational roots p/q of an integer polynomial by divisor
    enumeration: p divides the trailing coefficient, q the leading one."""
    coeffs = list(int_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    lead = coeffs[-1]
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    trailing = coeffs[shift]
    cands = set()
    if shift:
        cands.add(ZERO)
    for p in _divisors(trailing):
        for q in _divisors(lead):
            cands.add(Q(p, q))
            cands.add(Q(-p, q))
    return sorted(cands)
