"""Text front-end: parse expressions into algebra elements and print them back.

Grammar (loosest binding first)::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := wedge ('ox' wedge)*
    wedge   := product ('/\\' product)*
    product := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INT)?
    atom    := INT | IDENT | '(' expr ')'

``*`` is the algebra product, ``ox`` the tensor product of forms over the
superspace and ``/\\`` the wedge product.  ``/`` divides by a nonzero
rational constant, so ``1/2`` and ``h/2`` are both accepted.
"""

import re

from .algebra import AlgebraElement
from .coefficients import SYMBOLS, Poly, format_monomial, format_poly, format_term

FORM_LETTERS = frozenset({"xi1", "eta", "xi2"})

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>/\\|[-+*/^()=]))")


class ParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup)
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), start))
        elif m.group("ident") is not None:
            word = m.group("ident")
            tokens.append(("ox", word, start) if word == "ox" else ("ident", word, start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def form_degree(elem):
    """Largest number of differential letters in any word of ``elem``."""
    return max((sum(1 for g in w if g in FORM_LETTERS) for w in elem.words()), default=0)


class _Parser:
    def __init__(self, text, algebra, macros, allow_tensor, allow_wedge):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.algebra = algebra
        self.macros = macros or {}
        self.allow_tensor = allow_tensor
        self.allow_wedge = allow_wedge
        self._expanding = set()

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)

    def at_op(self, *ops):
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def parse(self):
        value = self.expr()
        kind, value_, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {value_!r}", pos)
        return value

    def expr(self):
        value = self.tensor()
        while self.at_op("+", "-"):
            _, op, _ = self.take()
            rhs = self.tensor()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _check_forms(self, lhs, rhs, name, pos):
        if form_degree(lhs) == 0 or form_degree(rhs) == 0:
            raise ParseError(f"{name} needs differential forms on both sides", pos)

    def tensor(self):
        value = self.wedge()
        while self.peek()[0] == "ox":
            _, _, pos = self.take()
            if not self.allow_tensor:
                raise ParseError(f"'ox' is not available in algebra {self.algebra.name!r}", pos)
            rhs = self.wedge()
            self._check_forms(value, rhs, "'ox'", pos)
            value = value * rhs
        return value

    def wedge(self):
        value = self.product()
        while self.at_op("/\\"):
            _, _, pos = self.take()
            if not self.allow_wedge:
                raise ParseError(f"'/\\' is not available in algebra {self.algebra.name!r}", pos)
            rhs = self.product()
            self._check_forms(value, rhs, "'/\\'", pos)
            value = value * rhs
        return value

    def product(self):
        value = self.unary()
        while self.at_op("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_scalar() or not rhs.scalar_part().is_constant() or rhs.is_zero():
                    raise ParseError("division only by a nonzero rational constant", pos)
                value = value * (1 / rhs.scalar_part().constant_value())
        return value

    def unary(self):
        if self.at_op("-"):
            self.take()
            return -self.unary()
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.at_op("^"):
            _, _, pos = self.take()
            kind, n, npos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", npos)
            value = value**n
        return value

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            return self.algebra.scalar(value)
        if kind == "ident":
            return self.resolve(value, pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)

    def resolve(self, name, pos):
        if name in self.algebra.table:
            return self.algebra.gen(name)
        if name in SYMBOLS:
            return self.algebra.scalar(Poly.symbol(name))
        if name in self.macros:
            if name in self._expanding:
                raise ParseError(f"recursive definition of {name!r}", pos)
            definition = self.macros[name]
            self._expanding.add(name)
            try:
                if callable(definition):
                    value = definition(self.algebra)
                else:
                    sub = _Parser(definition, self.algebra, self.macros, self.allow_tensor, self.allow_wedge)
                    sub._expanding = self._expanding
                    value = sub.parse()
            except (KeyError, ParseError) as exc:
                raise ParseError(f"{name!r} is not defined in algebra {self.algebra.name!r}: {exc}", pos)
            finally:
                self._expanding.discard(name)
            if not isinstance(value, AlgebraElement) or value.algebra is not self.algebra:
                value = self.algebra.normalize(value)
            return value
        raise ParseError(f"unknown identifier {name!r} in algebra {self.algebra.name!r}", pos)


def parse_in(text, algebra, macros=None, allow_tensor=True, allow_wedge=True):
    """Parse ``text`` into an element of the presentation ``algebra``."""
    return _Parser(text, algebra, macros, allow_tensor, allow_wedge).parse()


def parse_relation(text, algebra, macros=None):
    """Parse ``lhs = rhs`` (or a bare expression) as the element ``lhs - rhs``."""
    if text.count("=") > 1:
        raise ParseError("a relation has at most one '='")
    if "=" in text:
        lhs, rhs = text.split("=")
        return parse_in(lhs, algebra, macros) - parse_in(rhs, algebra, macros)
    return parse_in(text, algebra, macros)


def _separators(algebra_name, wedge_slots):
    if algebra_name == "forms":
        if wedge_slots:
            return [" /\\ "] * (wedge_slots - 1), " ox "
        return [], " ox "
    if algebra_name == "wedge":
        return [], " /\\ "
    return [], "*"


def format_word(word, algebra_name, wedge_slots=0):
    head, tail = _separators(algebra_name, wedge_slots)
    out = []
    forms_seen = 0
    prev_form = False
    for g in word:
        is_form = g in FORM_LETTERS
        if out:
            if is_form and prev_form:
                out.append(head[forms_seen - 1] if forms_seen - 1 < len(head) else tail)
            else:
                out.append("*")
        out.append(g)
        if is_form:
            forms_seen += 1
        prev_form = is_form
    return "".join(out)


def format_element(elem, wedge_slots=0):
    """Deterministic, re-parseable text for an element.

    ``wedge_slots=2`` prints a value of (two-forms) ox (one-forms) with the
    first pair joined by ``/\\``.
    """
    items = elem.items()
    if not items:
        return "0"
    if len(items) == 1 and items[0][0] == ():
        return format_poly(items[0][1])
    name = elem.algebra.name
    out = []
    for i, (word, coeff) in enumerate(items):
        wtext = format_word(word, name, wedge_slots)
        terms = coeff.items()
        if len(terms) == 1:
            (exp, c), = terms
            negative = c < 0
            if word and abs(c) == 1 and not any(exp):
                body = wtext
            else:
                body = format_term(c, format_monomial(exp))
                if word:
                    body = f"{body}*{wtext}"
        else:
            negative = False
            body = f"({format_poly(coeff)})"
            if word:
                body = f"{body}*{wtext}"
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def parse_expression(text, algebra_id):
    """Parse user text in one of the named algebras and return its normal form.

    ``algebra_id`` is one of ``superspace``, ``calculus``, ``group``,
    ``combined``, ``forms`` (tensor products of one-forms), ``wedge``
    (forms up to degree two) or ``omega21`` (two-forms ox one-forms).
    """
    from . import presentations
    from .forms import pi12

    if algebra_id == "omega21":
        alg = presentations.get_algebra("forms")
        value = parse_in(text, alg, presentations.MACROS, allow_tensor=True, allow_wedge=True)
        bad = {form_degree_of_word(w) for w in value.words()} - {3}
        if bad:
            raise ParseError("an omega21 value needs exactly three form slots in every term")
        return pi12(value)
    alg = presentations.get_algebra(algebra_id)
    tensor_ok = algebra_id == "forms"
    wedge_ok = algebra_id in ("wedge", "calculus", "combined")
    return parse_in(text, alg, presentations.MACROS, allow_tensor=tensor_ok, allow_wedge=wedge_ok)


def form_degree_of_word(word):
    return sum(1 for g in word if g in FORM_LETTERS)
