"""Sparse multivariate polynomials, monomial orders, and power series.

A monomial is a plain tuple of exponents, one per ring variable.
Polynomials map monomials to nonzero scalars of the ring's field; all
values are immutable and all operations pure.  Term iteration order in
formatted output follows the chosen monomial order descending, so every
rendering is deterministic.

Linear group actions enter through ``apply_linear_map``: a matrix A
sends the i-th acted variable to sum_j A[i][j] x_j (the row gives the
image of the variable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    ContextMismatch,
    LengthMismatch,
    ParseError,
    SingularMatrix,
    ZeroPolynomial,
)
from .fields import Field, NumberField, Scalar


# ---------------------------------------------------------------------------
# monomials and orders
# ---------------------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_divides(a, b):
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def mono_degree(a):
    return sum(a)


class MonomialOrder:
    """Total, multiplicative well-order on monomials, via a sort key."""

    name = "abstract"

    def key(self, exps):
        raise NotImplementedError

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class _Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return exps


class _GradedLex(MonomialOrder):
    name = "gradedlex"

    def key(self, exps):
        return (sum(exps), exps)


class _Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


LEX = _Lex()
GRADEDLEX = _GradedLex()
GREVLEX = _Grevlex()


class BlockElimination(MonomialOrder):
    """Front block dominates; graded inner orders make it an elimination
    order for the front variables."""

    def __init__(self, front_size: int, inner: MonomialOrder = GREVLEX):
        self.front_size = front_size
        self.inner = inner

    @property
    def name(self):
        return f"block({self.front_size},{self.inner.name})"

    def key(self, exps):
        k = self.front_size
        return (self.inner.key(exps[:k]), self.inner.key(exps[k:]))


def order_by_name(name: str) -> MonomialOrder:
    table = {"lex": LEX, "gradedlex": GRADEDLEX, "graded-lex": GRADEDLEX,
             "grevlex": GREVLEX}
    if name not in table:
        raise ParseError(f"unknown monomial order {name!r}")
    return table[name]


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------

class PolynomialRing:
    """A fixed field together with an ordered tuple of variable names."""

    def __init__(self, field: Field, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ContextMismatch(f"duplicate variable names in {names}")
        for n in names:
            if not n.isidentifier():
                raise ContextMismatch(f"bad variable name {n!r}")
        self.field = field
        self.names = names
        self.nvars = len(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.from_int(1)

    def from_scalar(self, s) -> "Polynomial":
        s = self.field.scalar(s)
        if s.is_zero():
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: s})

    def from_int(self, n: int) -> "Polynomial":
        return self.from_scalar(n)

    def variable(self, i: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        coeff = self.field.scalar(coeff)
        if coeff.is_zero():
            return self.zero
        return Polynomial(self, {tuple(exps): coeff})

    def index(self, name: str) -> int:
        return self.names.index(name)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_expression

        symbols = {n: self.variable(i) for i, n in enumerate(self.names)}
        if isinstance(self.field, NumberField):
            gen = self.field.generator_name
            if gen not in symbols:
                symbols[gen] = self.from_scalar(self.field.generator)
        value = parse_expression(text, symbols, self.from_int)
        if isinstance(value, Polynomial):
            return value
        return self.from_scalar(value)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_coefficient(self) -> Scalar:
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatch(
                    f"mixing polynomials of {self.ring} and {other.ring}"
                )
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.ring.from_scalar(other)
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            acc = terms.get(m)
            terms[m] = c if acc is None else acc + c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            acc = terms.get(m)
            terms[m] = -c if acc is None else acc - c
        return Polynomial(self.ring, terms)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = self.ring.field.scalar(other)
            if c.is_zero():
                return self.ring.zero
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        o = self._check(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc = out.get(m)
                out[m] = c if acc is None else acc + c
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar or constant polynomial."""
        if isinstance(other, Polynomial):
            if not other.is_constant():
                raise ParseError("division by nonconstant polynomial")
            other = other.constant_coefficient()
        inv = self.ring.field.scalar(other).inverse()
        return self * inv

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.ring.from_scalar(other)
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------------

    def leading(self, order: MonomialOrder):
        """Greatest (monomial, coefficient) pair under the order."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder):
        return self.leading(order)[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self * c.inverse()

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(
            self.ring, {m: c for m, c in self.terms.items() if mono_degree(m) == d}
        )

    def homogeneous_components(self):
        """Nonzero components, ascending degree."""
        out = {}
        for m, c in self.terms.items():
            out.setdefault(mono_degree(m), {})[m] = c
        return [Polynomial(self.ring, out[d]) for d in sorted(out)]

    def coefficient_of(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.ring.nvars:
            raise LengthMismatch(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars}"
            )
        pt = [self.ring.field.scalar(x) for x in point]
        powers = [{0: self.ring.field.one} for _ in pt]
        total = self.ring.field.zero
        for m, c in self.terms.items():
            acc = c
            for i, e in enumerate(m):
                if e == 0:
                    continue
                cache = powers[i]
                if e not in cache:
                    p = cache[max(cache)]
                    for k in range(max(cache) + 1, e + 1):
                        p = p * pt[i]
                        cache[k] = p
                acc = acc * cache[e]
            total = total + acc
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Map variable i to images[i]; images live in one common ring."""
        if len(images) != self.ring.nvars:
            raise LengthMismatch("one image per variable required")
        target = images[0].ring if images else self.ring
        imgs = []
        for im in images:
            if not isinstance(im, Polynomial):
                im = target.from_scalar(im)
            if im.ring != target:
                raise ContextMismatch("substitution images in different rings")
            imgs.append(im)
        powers = [{0: target.one} for _ in imgs]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                p = cache[max(cache)]
                for k in range(max(cache) + 1, e + 1):
                    p = p * imgs[i]
                    cache[k] = p
            return cache[e]

        total = target.zero
        for m, c in self.terms.items():
            acc = target.from_scalar(c)
            for i, e in enumerate(m):
                if e:
                    acc = acc * power(i, e)
            total = total + acc
        return total

    def apply_linear_map(self, rows) -> "Polynomial":
        """Substitute x_i -> sum_j rows[i][j] x_j for the first len(rows)
        variables, leaving any remaining variables fixed.  The matrix must
        be invertible."""
        from .linalg import Matrix

        k = len(rows)
        field = self.ring.field
        mat = Matrix.from_rows(field, rows)
        if mat.rank() != k:
            raise SingularMatrix("linear action matrix is singular")
        images = []
        for i in range(self.ring.nvars):
            if i < k:
                terms = {}
                for j in range(k):
                    c = mat.rows[i][j]
                    if not c.is_zero():
                        exps = [0] * self.ring.nvars
                        exps[j] = 1
                        terms[tuple(exps)] = c
                images.append(Polynomial(self.ring, terms))
            else:
                images.append(self.ring.variable(i))
        return self.substitute(images)

    # -- formatting ---------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def format(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        pieces = []
        one = self.ring.field.one
        for m, c in self.sorted_terms(order):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self.ring.names, m)
                if e > 0
            )
            if not mono:
                pieces.append(str(c))
                continue
            if c == one:
                pieces.append(mono)
                continue
            if c == -one:
                pieces.append(f"-{mono}")
                continue
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            pieces.append(f"{cs}*{mono}")
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-") and not piece.startswith("-("):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()})"


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def leading_monomial(p: Polynomial, order: MonomialOrder):
    return p.leading(order)


def homogeneous_component(p: Polynomial, d: int) -> Polynomial:
    return p.homogeneous_component(d)


def evaluate(p: Polynomial, point) -> Scalar:
    return p.evaluate(point)


def apply_linear_map(p: Polynomial, rows) -> Polynomial:
    return p.apply_linear_map(rows)


def monomials_of_degree(ring: PolynomialRing, d: int, order: MonomialOrder = GREVLEX):
    """All exponent tuples of total degree d, ascending under the order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if ring.nvars == 0:
        return [()] if d == 0 else []
    rec((), d, ring.nvars)
    out.sort(key=order.key)
    return out


def transport(p: Polynomial, target: PolynomialRing, index_map) -> Polynomial:
    """Re-home a polynomial: old variable i becomes target variable
    index_map[i].  A None entry asserts the variable is absent from p.
    Fields must agree."""
    if target.field != p.ring.field:
        raise ContextMismatch("transport across different fields")
    terms = {}
    for m, c in p.terms.items():
        exps = [0] * target.nvars
        for i, e in enumerate(m):
            if e == 0:
                continue
            j = index_map[i]
            if j is None:
                raise ContextMismatch(
                    f"variable {p.ring.names[i]} has no image in target ring"
                )
            exps[j] = e
        terms[tuple(exps)] = c
    return Polynomial(target, terms)


def transport_by_name(p: Polynomial, target: PolynomialRing) -> Polynomial:
    """Transport matching variables by name."""
    index_map = []
    for n in p.ring.names:
        index_map.append(target.names.index(n) if n in target.names else None)
    return transport(p, target, index_map)


# ---------------------------------------------------------------------------
# truncated power series (Hilbert/Molien series carrier)
# ---------------------------------------------------------------------------

class PowerSeries:
    """Truncated univariate power series over a field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = tuple(field.scalar(c) for c in coeffs)

    @property
    def truncation_degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __add__(self, other):
        n = min(len(self.coeffs), len(other.coeffs))
        return PowerSeries(
            self.field, [self.coeffs[i] + other.coeffs[i] for i in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = self.field.scalar(other)
            return PowerSeries(self.field, [x * c for x in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        out = [self.field.zero] * n
        for i, x in enumerate(self.coeffs[:n]):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs[: n - i]):
                out[i + j] = out[i + j] + x * y
        return PowerSeries(self.field, out)

    __rmul__ = __mul__

    @classmethod
    def reciprocal(cls, field: Field, poly_coeffs, truncation: int) -> "PowerSeries":
        """1 / p(t) as a series to the given truncation; p(0) must be nonzero."""
        a = [field.scalar(c) for c in poly_coeffs]
        if not a or a[0].is_zero():
            raise ZeroPolynomial("series inverse needs a unit constant term")
        inv0 = a[0].inverse()
        out = [inv0]
        for k in range(1, truncation + 1):
            acc = field.zero
            for i in range(1, min(k, len(a) - 1) + 1):
                acc = acc + a[i] * out[k - i]
            out.append(-inv0 * acc)
        return cls(field, out)

    def __str__(self):
        return " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"PowerSeries({self})"
