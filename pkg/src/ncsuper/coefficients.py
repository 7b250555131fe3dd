"""Exact polynomials over the rationals in the commuting symbols h, c0, c1, c2.

Every structure constant of the algebras in this package lives in this ring.
Values are immutable; arithmetic is exact and total.
"""

from fractions import Fraction
from numbers import Rational

SYMBOLS = ("h", "c0", "c1", "c2")
_NVARS = len(SYMBOLS)
_ZERO_EXP = (0,) * _NVARS


def _order_key(exp):
    # graded lexicographic on (h, c0, c1, c2)
    return (sum(exp), exp)


class Poly:
    """A polynomial stored as ``{exponent tuple: Fraction}`` with no zero entries.

    >>> h = Poly.symbol("h")
    >>> (h + 1) * (h - 1)
    Poly('h^2 - 1')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, dict):
            self._terms = {e: Fraction(c) for e, c in terms.items() if c != 0}
        else:
            raise TypeError("Poly expects a dict of exponent tuples")
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already cleaned
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls._raw({_ZERO_EXP: value} if value else {})

    @classmethod
    def symbol(cls, name):
        try:
            i = SYMBOLS.index(name)
        except ValueError:
            raise KeyError(f"unknown coefficient symbol {name!r}") from None
        exp = [0] * _NVARS
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Poly")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_value(self):
        """The value of a constant polynomial as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def degree(self, name=None):
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = SYMBOLS.index(name)
        return max(e[i] for e in self._terms)

    def symbols(self):
        return {SYMBOLS[i] for e in self._terms for i in range(_NVARS) if e[i]}

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Rational)):
                other = Poly.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Rational)):
                other = Poly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Rational)):
                other = Fraction(other)
                if not other:
                    return Poly()
                return Poly._raw({e: c * other for e, c in self._terms.items()})
            return NotImplemented
        if not self._terms or not other._terms:
            return Poly()
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by nonzero rationals only; the ring is not a field
        if isinstance(other, Poly):
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of Poly by zero")
        return self * (1 / other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ---------------------------------------------------------

    def substitute(self, bindings=None, **kw):
        """Evaluate some symbols. Values may be rationals or Polys.

        >>> c1, c2 = Poly.symbol("c1"), Poly.symbol("c2")
        >>> (c1 + c2).substitute(c2=-c1)
        Poly('0')
        """
        bindings = dict(bindings or {}, **kw)
        for name in bindings:
            if name not in SYMBOLS:
                raise KeyError(f"unknown coefficient symbol {name!r}")
        if not bindings:
            return self
        values = [Poly.coerce(bindings[s]) if s in bindings else None for s in SYMBOLS]
        powers = [{} for _ in SYMBOLS]
        out = Poly()
        for e, c in self._terms.items():
            kept = [0] * _NVARS
            term = Poly.const(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if values[i] is None:
                    kept[i] = k
                else:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term = term * cache[k]
            if any(kept):
                term = term * Poly._raw({tuple(kept): Fraction(1)})
            out = out + term
        return out

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        return tuple((_order_key(e), c) for e, c in self.items())

    # -- printing -----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_monomial(exp):
    parts = []
    for name, k in zip(SYMBOLS, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _format_rational(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def format_term(coeff, monomial):
    """Unsigned text for ``|coeff| * monomial``; the caller places the sign."""
    c = abs(coeff)
    if not monomial:
        return _format_rational(c)
    if c == 1:
        return monomial
    return f"{_format_rational(c)}*{monomial}"


def format_poly(p):
    """Re-parseable text: ``h^2 - 1``, ``-(1/2)*h``, ``0``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.items()):
        body = format_term(c, format_monomial(e))
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


h = Poly.symbol("h")
c0 = Poly.symbol("c0")
c1 = Poly.symbol("c1")
c2 = Poly.symbol("c2")
ZERO = Poly()
ONE = Poly.const(1)
