"""Exact ground fields and their elements.

Three kinds of field are supported: the rationals, prime fields GF(p),
and simple extensions Q[t]/(m(t)) of the rationals by a monic minimal
polynomial.  All arithmetic is exact; scalars are immutable values in
canonical form (reduced fractions with positive denominator, residues
in [0, p), extension elements reduced modulo m).

Scalar text grammar (used by all input files): signed decimal integers,
fractions ``a/b``, and extension-generator expressions built from
``+ - * ^`` and parentheses, e.g. ``(3*w^2 - 1)/2``.  Whitespace is
insignificant.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, InvalidFieldSpec, ParseError


class ReducibleMinimalPolynomialWarning(UserWarning):
    """The supplied minimal polynomial has a proper factor over Q."""


class UnverifiedIrreducibilityWarning(UserWarning):
    """Irreducibility was not checked beyond squarefreeness (degree > 4)."""


# ---------------------------------------------------------------------------
# univariate polynomials over Q, represented as tuples of Fractions
# (index = power), used only for extension-field bookkeeping
# ---------------------------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _uadd(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _uneg(a):
    return tuple(-x for x in a)


def _umul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _udivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b) and _trim(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        coef = a[-1] * inv
        q[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] -= coef * y
        a.pop()
    return _trim(q), _trim(a)


def _ugcd(a, b):
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if a:
        inv = Fraction(1) / a[-1]
        a = tuple(x * inv for x in a)
    return a


def _uderiv(a):
    return _trim(i * x for i, x in enumerate(a) if i > 0)


def _uext_gcd(a, b):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic or 0."""
    r0, r1 = a, b
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        q, r = _udivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _uadd(u0, _uneg(_umul(q, u1)))
        v0, v1 = v1, _uadd(v0, _uneg(_umul(q, v1)))
    if r0:
        inv = Fraction(1) / r0[-1]
        r0 = tuple(x * inv for x in r0)
        u0 = tuple(x * inv for x in u0)
        v0 = tuple(x * inv for x in v0)
    return r0, u0, v0


def _is_square_fraction(q: Fraction):
    """Return sqrt(q) as a Fraction, or None if q is not a rational square."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _divisors(n: int):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_roots(coeffs):
    """All rational roots of a univariate polynomial with Fraction coeffs."""
    coeffs = _trim(coeffs)
    if len(coeffs) <= 1:
        return []
    from math import lcm

    den = lcm(*[c.denominator for c in coeffs])
    ints = [int(c * den) for c in coeffs]
    roots = set()
    while ints and ints[0] == 0:
        ints = ints[1:]  # factor out x
        roots.add(Fraction(0))
    if not ints:
        return sorted(roots)
    lead, const = ints[-1], ints[0]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(coeffs):
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(cand)
    return sorted(roots)


def _quartic_has_quadratic_factor(m):
    """Monic quartic over Q with no rational root: does it split into two
    rational quadratics?  Decided through the resolvent cubic."""
    a3 = m[3]
    # depress: x -> u - a3/4
    shift = (-a3 / 4,)
    comp = (Fraction(1),)
    depressed = ()
    base = _uadd((Fraction(0), Fraction(1)), shift)  # u + shift
    for c in m:
        depressed = _uadd(depressed, _umul((c,), comp))
        comp = _umul(comp, base)
    depressed = _trim(depressed)
    p = depressed[2] if len(depressed) > 2 else Fraction(0)
    q = depressed[1] if len(depressed) > 1 else Fraction(0)
    r = depressed[0] if len(depressed) > 0 else Fraction(0)
    if q == 0:
        # biquadratic: (u^2+v)(u^2+w) needs p^2-4r square;
        # (u^2+au+b)(u^2-au+b) needs b^2 = r and 2b - p a square
        if _is_square_fraction(p * p - 4 * r) is not None:
            return True
        rt = _is_square_fraction(r)
        if rt is not None:
            for b in (rt, -rt):
                if _is_square_fraction(2 * b - p) is not None:
                    return True
        return False
    # resolvent cubic in s = a^2:  s^3 + 2p s^2 + (p^2 - 4r) s - q^2
    resolvent = (-q * q, p * p - 4 * r, 2 * p, Fraction(1))
    for s in _rational_roots(resolvent):
        if s <= 0:
            continue
        a = _is_square_fraction(s)
        if a is None or a == 0:
            continue
        # b, c from c - b = q/a, c + b = p + s: automatically rational
        return True
    return False


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Base class; concrete fields implement arithmetic on raw payloads."""

    kind = "abstract"

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or Scalar of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(self, self._from_rational(Fraction(value)))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def characteristic(self) -> int:
        raise NotImplementedError

    def parse(self, text: str) -> "Scalar":
        from .parsing import parse_scalar

        return parse_scalar(text, self)

    # payload protocol, implemented per field kind
    def _from_rational(self, q: Fraction):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError


class Rationals(Field):
    kind = "rationals"

    def characteristic(self):
        return 0

    def _from_rational(self, q):
        return q

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidFieldSpec(f"{p} is not prime")
        self.p = p

    def characteristic(self):
        return self.p

    def _from_rational(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator divisible by {self.p}")
        return q.numerator * pow(den, -1, self.p) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class NumberField(Field):
    """Q[t]/(m(t)) for monic squarefree m of degree >= 2.

    Irreducibility is certified for deg(m) <= 4 (rational roots plus
    quadratic-factor search); a detected factor or an unverified higher
    degree only warns.  A reducible m produces a ring with zero
    divisors, in which inverting a zero divisor raises DivisionByZero.
    """

    kind = "simple_extension"

    def __init__(self, minimal_poly, generator_name: str):
        coeffs = tuple(Fraction(c) for c in minimal_poly)
        coeffs = _trim(coeffs)
        if len(coeffs) < 3:
            raise InvalidFieldSpec("minimal polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise InvalidFieldSpec("minimal polynomial must be monic")
        if _ugcd(coeffs, _uderiv(coeffs)) != (Fraction(1),):
            raise InvalidFieldSpec("minimal polynomial must be squarefree")
        if not generator_name.isidentifier():
            raise InvalidFieldSpec(f"bad generator name {generator_name!r}")
        self.minimal_poly = coeffs
        self.generator_name = generator_name
        self.degree = len(coeffs) - 1
        self._warn_if_reducible()

    def _warn_if_reducible(self):
        m = self.minimal_poly
        if self.degree > 4:
            warnings.warn(
                f"irreducibility of degree-{self.degree} minimal polynomial "
                "not verified",
                UnverifiedIrreducibilityWarning,
                stacklevel=3,
            )
            return
        if _rational_roots(m):
            warnings.warn(
                "minimal polynomial has a rational root; the quotient is not "
                "a field",
                ReducibleMinimalPolynomialWarning,
                stacklevel=3,
            )
        elif self.degree == 4 and _quartic_has_quadratic_factor(m):
            warnings.warn(
                "minimal polynomial splits into two rational quadratics; the "
                "quotient is not a field",
                ReducibleMinimalPolynomialWarning,
                stacklevel=3,
            )

    def characteristic(self):
        return 0

    @property
    def generator(self) -> "Scalar":
        pay = [Fraction(0)] * self.degree
        pay[1] = Fraction(1)
        return Scalar(self, tuple(pay))

    def _pad(self, c):
        return tuple(c) + (Fraction(0),) * (self.degree - len(c))

    def _from_rational(self, q):
        return self._pad((q,) if q else ())

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        ta, tb = _trim(a), _trim(b)
        # constants are very common inside polynomial arithmetic
        if len(ta) <= 1:
            c = ta[0] if ta else Fraction(0)
            return tuple(c * y for y in b)
        if len(tb) <= 1:
            c = tb[0] if tb else Fraction(0)
            return tuple(c * x for x in a)
        _, rem = _udivmod(_umul(ta, tb), self.minimal_poly)
        return self._pad(rem)

    def _inv(self, a):
        ta = _trim(a)
        if not ta:
            raise DivisionByZero("division by zero")
        g, u, _ = _uext_gcd(ta, self.minimal_poly)
        if len(g) != 1:
            raise DivisionByZero(
                "nonzero zero divisor inverted; minimal polynomial is reducible"
            )
        _, rem = _udivmod(u, self.minimal_poly)
        return self._pad(rem)

    def _is_zero(self, a):
        return all(x == 0 for x in a)

    def _format(self, a):
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            if i == 0:
                mono = None
            elif i == 1:
                mono = self.generator_name
            else:
                mono = f"{self.generator_name}^{i}"
            if mono is None:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            parts.append(piece)
        if not parts:
            return "0"
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and other.minimal_poly == self.minimal_poly
            and other.generator_name == self.generator_name
        )

    def __hash__(self):
        return hash(("ext", self.minimal_poly, self.generator_name))

    def __repr__(self):
        return f"QQ[{self.generator_name}]/(m)"


class Scalar:
    """Immutable field element; all arithmetic is exact and canonical."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"mixing scalars of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, self.field._neg(o.value)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, self.field._inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        return Scalar(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar) or other.field != self.field:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"Scalar({self})"


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Named entry point over the operator dunders; op in {add,sub,mul,div}."""
    if a.field != b.field:
        raise FieldMismatch(f"mixing scalars of {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def format_scalar(s: Scalar) -> str:
    return str(s)


def characteristic(field: Field) -> int:
    return field.characteristic()


def field_from_config(cfg: dict) -> Field:
    """Build a field from a JSON-style configuration block."""
    kind = cfg.get("kind")
    if kind == "rationals":
        return Rationals()
    if kind == "prime":
        return PrimeField(int(cfg["p"]))
    if kind == "simple_extension":
        name = cfg.get("generator", "t")
        text = cfg["minimal_poly"]
        if isinstance(text, str):
            coeffs = _parse_minimal_poly(text, name)
        else:
            coeffs = [Fraction(c) for c in text]
        return NumberField(coeffs, name)
    raise ParseError(f"unknown field kind {kind!r}")


def _parse_minimal_poly(text: str, name: str):
    """Parse e.g. 'w^2 - 2' into coefficient form, low degree first."""
    from .parsing import parse_univariate_rational

    return parse_univariate_rational(text, name)
