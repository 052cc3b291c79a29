"""Exact noncommutative arithmetic in U(gl(N,C)^{+L}).

Generators are matrix units E_{ij|a} encoded as (i, j, a) triples: row, column,
and the copy index a (a "letter" in {1,...,L}).  Elements are kept in PBW
normal form with respect to a pluggable total order on generators; products
are reduced by repeated adjacent swaps E F = F E + [E, F].

The PROJECTION(N) order realizes the block order behind the centralizer
projection pi_{N,N-1}: generators E_{Nj|a} (j < N) come first, everything
with both indices below N together with the E_{NN|a} in the middle, and the
E_{iN|a} (i < N) last.  Once an element of weight 0 is normal-ordered this
way, dropping every monomial that touches the index N is an algebra morphism
onto U(gl(N-1,C)^{+L}).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import format_scalar, scalar_subs


class GeneratorOrder:
    """Total order on matrix-unit generators, given by a sort key."""

    def key(self, gen):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class DefaultOrder(GeneratorOrder):
    """Sort by (letter, row, column)."""

    def key(self, gen):
        i, j, a = gen
        return (a, i, j)

    def __repr__(self):
        return "DEFAULT"


class ProjectionOrder(GeneratorOrder):
    """Block order for the projection at level N; ties broken by (letter, row, column)."""

    def __init__(self, N):
        self.N = N

    def _group(self, gen):
        i, j, _ = gen
        if i == self.N and j < self.N:
            return 0
        if j == self.N and i < self.N:
            return 2
        return 1

    def key(self, gen):
        i, j, a = gen
        return (self._group(gen), a, i, j)

    def __repr__(self):
        return f"PROJECTION({self.N})"


DEFAULT = DefaultOrder()


def gen_weight(gen, N):
    """Eigenvalue of the generator under ad of the diagonal E_NN."""
    i, j, _ = gen
    if i == N and j < N:
        return 1
    if j == N and i < N:
        return -1
    return 0


def bracket_gens(a, b):
    """gl bracket of two matrix units, as a list of (gen, sign) pairs."""
    i, j, p = a
    k, l, q = b
    if p != q:
        return []
    out = []
    if j == k:
        out.append(((i, l, p), 1))
    if l == i:
        out.append(((k, j, p), -1))
    return out


def _straighten(mono, coeff, key, out):
    """Accumulate coeff * mono into out, reducing to PBW normal form."""
    stack = [(mono, coeff)]
    while stack:
        m, c = stack.pop()
        pos = -1
        for p in range(len(m) - 1):
            if key(m[p]) > key(m[p + 1]):
                pos = p
                break
        if pos < 0:
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            elif m in out:
                del out[m]
            continue
        head, a, b, tail = m[:pos], m[pos], m[pos + 1], m[pos + 2:]
        stack.append((head + (b, a) + tail, c))
        for g, sign in bracket_gens(a, b):
            stack.append((head + (g,) + tail, sign * c))


def _mono_key(order):
    def k(mono):
        return (len(mono), tuple(order.key(g) for g in mono))
    return k


class PbwElement:
    """An element of U(gl(N,C)^{+L}) in PBW normal form.

    ``terms`` maps normal-ordered generator tuples to nonzero scalars in Q[s].
    Instances are immutable by convention; all operations return new elements.
    """

    __slots__ = ("N", "order", "terms")

    def __init__(self, N, terms=None, order=DEFAULT, _normal=False):
        self.N = N
        self.order = order
        if terms is None:
            self.terms = {}
        elif _normal:
            self.terms = terms
        else:
            out = {}
            key = order.key
            for mono, c in terms.items():
                if c:
                    _straighten(tuple(mono), c, key, out)
            self.terms = out

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, N, order=DEFAULT):
        return cls(N, {}, order, _normal=True)

    @classmethod
    def one(cls, N, order=DEFAULT):
        return cls(N, {(): Fraction(1)}, order, _normal=True)

    @classmethod
    def generator(cls, N, i, j, a, order=DEFAULT):
        if not (1 <= i <= N and 1 <= j <= N):
            raise ValueError(f"index out of range for N={N}")
        return cls(N, {((i, j, a),): Fraction(1)}, order, _normal=True)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.N != other.N:
            raise ValueError("ambient N mismatch")
        if self.order != other.order:
            raise ValueError("generator order mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PbwElement(self.N, {(): other}, self.order, _normal=True)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            elif m in out:
                del out[m]
        return PbwElement(self.N, out, self.order, _normal=True)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.N, {m: -c for m, c in self.terms.items()},
                          self.order, _normal=True)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            self._check(other)
            out = {}
            key = self.order.key
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    _straighten(m1 + m2, c1 * c2, key, out)
            return PbwElement(self.N, out, self.order, _normal=True)
        # scalar
        if not other:
            return PbwElement.zero(self.N, self.order)
        return PbwElement(self.N, {m: c * other for m, c in self.terms.items()},
                          self.order, _normal=True)

    def __rmul__(self, other):
        return self.__mul__(other)  # scalars commute with everything

    def commutator(self, other):
        return self * other - other * self

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PbwElement(self.N, {(): other}, self.order, _normal=True)
        if not isinstance(other, PbwElement):
            return NotImplemented
        return (self - other).is_zero()

    # -- structure ----------------------------------------------------

    def weight(self):
        """Common ad(diag E_NN)-eigenvalue of all monomials, or None if mixed."""
        values = {sum(gen_weight(g, self.N) for g in m) for m in self.terms}
        if not values:
            return 0
        if len(values) > 1:
            return None
        return values.pop()

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def homogeneous_part(self, n):
        """Terms of filtration degree exactly n."""
        return PbwElement(self.N, {m: c for m, c in self.terms.items() if len(m) == n},
                          self.order, _normal=True)

    def reorder(self, order):
        """The same algebra element, normal-formed for another generator order."""
        if order == self.order:
            return self
        return PbwElement(self.N, self.terms, order)

    def project(self, order=DEFAULT):
        """The centralizer projection pi_{N,N-1}, defined on weight-0 elements.

        Normal-orders under PROJECTION(N) and drops every monomial containing
        a generator with an index equal to N; the remainder lives in ambient
        N - 1.
        """
        if self.N < 2:
            raise ValueError("projection needs N >= 2")
        if self.weight() not in (0,):
            raise ValueError("projection is only defined on weight-0 elements")
        staged = self.reorder(ProjectionOrder(self.N))
        kept = {m: c for m, c in staged.terms.items()
                if all(i != self.N and j != self.N for i, j, _ in m)}
        return PbwElement(self.N - 1, kept, order)

    def subs(self, value):
        """Evaluate all coefficients at s = value."""
        out = {}
        for m, c in self.terms.items():
            v = scalar_subs(c, value)
            if v:
                out[m] = v
        return PbwElement(self.N, out, self.order, _normal=True)

    # -- output -------------------------------------------------------

    def dump(self):
        """Deterministic text form: sum of coeff * E[i,j|a] ... in key order."""
        if not self.terms:
            return "0"
        mk = _mono_key(self.order)
        parts = []
        for m in sorted(self.terms, key=mk):
            c = format_scalar(self.terms[m])
            factors = " ".join(f"E[{i},{j}|{a}]" for i, j, a in m)
            parts.append(f"{c} * {factors}" if factors else f"{c} * 1")
        return " + ".join(parts)

    def __repr__(self):
        return f"<PbwElement N={self.N} {self.dump()}>"
