"""Exact scalars: rational numbers and polynomials in the formal parameter s.

All algebraic computation in this package runs over Q[s].  Plain scalars are
``int`` or ``fractions.Fraction``; a genuinely non-constant polynomial in the
parameter is an :class:`SPoly`.  Arithmetic between :class:`SPoly` and plain
numbers mixes freely, and any operation whose result is constant collapses
back to a ``Fraction``, so degree-0 polynomials never survive and comparisons
with rationals just work.
"""

from __future__ import annotations

from fractions import Fraction

Rat = (int, Fraction)


def _build(coeffs):
    """Make a scalar from an exponent -> coefficient map, demoting constants."""
    clean = {e: Fraction(c) for e, c in coeffs.items() if c}
    if not clean:
        return Fraction(0)
    if set(clean) == {0}:
        return clean[0]
    return SPoly(clean)


class SPoly:
    """Non-constant polynomial in s with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {e: Fraction(c) for e, c in coeffs.items() if c}

    def degree(self):
        return max(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, Rat):
            other = SPoly({0: other})
        if not isinstance(other, SPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return _build(out)

    __radd__ = __add__

    def __neg__(self):
        return SPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rat):
            return _build({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, SPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return _build(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Fraction(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Rat):
            return not self.coeffs or self.coeffs == {0: Fraction(other)}
        if isinstance(other, SPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def subs(self, value):
        """Evaluate at a concrete rational value of s."""
        value = Fraction(value)
        return sum((c * value**e for e, c in self.coeffs.items()), Fraction(0))

    def __str__(self):
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "1" if e == 0 else ("s" if e == 1 else f"s^{e}")
            if e == 0:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"SPoly({self})"


#: The formal parameter itself.
S = SPoly({1: 1})


def format_scalar(c):
    """Render a scalar for element dumps; polynomials get parentheses."""
    if isinstance(c, SPoly):
        return f"({c})"
    return str(Fraction(c))


def scalar_subs(c, value):
    """Evaluate c at s = value (no-op for plain rationals)."""
    return c.subs(value) if isinstance(c, SPoly) else Fraction(c)
