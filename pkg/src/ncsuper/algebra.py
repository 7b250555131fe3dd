"""Graded noncommutative algebras given by generators and quadratic rewrite rules.

A :class:`Presentation` owns a generator table (name, parity, weight in rank
order) and a set of rules ``p*q -> sum of smaller words``.  Elements are
formal sums ``{word: Poly}`` kept in normal form, i.e. no stored word
contains a rule left-hand side.

Termination is certified by a monomial order: words are compared by total
weight, then length, then lexicographically by generator rank.  Every rule
must strictly decrease this order, which the constructor checks.
"""

import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .coefficients import ONE, Poly

DEFAULT_STEP_BUDGET = 10**6


class NormalizationError(RuntimeError):
    """Raised when rewriting exceeds the step budget (a bad rule set)."""


class PresentationError(ValueError):
    """Raised for malformed generator tables or rule sets."""


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    rank: int
    weight: int = 1


class GeneratorTable:
    """Ordered generators; position in the list is the rank."""

    def __init__(self, entries):
        gens = []
        seen = set()
        for rank, entry in enumerate(entries):
            name, parity, *rest = entry
            weight = rest[0] if rest else 1
            if name in seen:
                raise PresentationError(f"duplicate generator {name!r}")
            if parity not in (0, 1):
                raise PresentationError(f"parity of {name!r} must be 0 or 1")
            if weight < 1:
                raise PresentationError(f"weight of {name!r} must be positive")
            seen.add(name)
            gens.append(Generator(name, parity, rank, weight))
        self.generators = tuple(gens)
        self._by_name = {g.name: g for g in gens}

    def __contains__(self, name):
        return name in self._by_name

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def names(self):
        return tuple(g.name for g in self.generators)

    def __getitem__(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def parity(self, name):
        return self[name].parity

    def word_parity(self, word):
        return sum(self[g].parity for g in word) % 2

    def order_key(self, word):
        gens = self._by_name
        return (sum(gens[g].weight for g in word), len(word), tuple(gens[g].rank for g in word))

    def extended(self, entries):
        return GeneratorTable([(g.name, g.parity, g.weight) for g in self.generators] + list(entries))


def word_parity(word, presentation):
    """Parity of a word: the sum of its letter parities mod 2."""
    return presentation.table.word_parity(word)


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: tuple  # ((word, Poly), ...) sorted by order key

    def rhs_terms(self):
        return dict(self.rhs)


@dataclass
class Overlap:
    word: tuple
    via_left: "AlgebraElement"
    via_right: "AlgebraElement"

    @property
    def resolved(self):
        return self.via_left == self.via_right


@dataclass
class ConfluenceReport:
    presentation: str
    overlaps: list = field(default_factory=list)

    @property
    def failures(self):
        return [o for o in self.overlaps if not o.resolved]

    @property
    def ok(self):
        return not self.failures

    def __str__(self):
        lines = [f"{self.presentation}: {len(self.overlaps)} overlaps, {len(self.failures)} unresolved"]
        for o in self.failures:
            lines.append(f"  {'*'.join(o.word)}: {o.via_left}  !=  {o.via_right}")
        return "\n".join(lines)


def _step_budget():
    raw = os.environ.get("NCSUPER_STEP_BUDGET")
    if raw is None:
        return DEFAULT_STEP_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise PresentationError(f"NCSUPER_STEP_BUDGET must be an integer, got {raw!r}") from None


def _accumulate(out, word, coeff):
    v = out.get(word)
    v = coeff if v is None else v + coeff
    if v:
        out[word] = v
    else:
        out.pop(word, None)


class Presentation:
    """A finitely presented graded algebra over the coefficient ring.

    ``rules`` is an iterable of ``(lhs_word, {rhs_word: coeff})``.  Use
    :meth:`from_relations` to orient and inter-reduce a list of relations
    instead of writing rules by hand.
    """

    def __init__(self, name, table, rules=(), check_order=True):
        self.name = name
        self.table = table
        self.rules = {}
        for lhs, rhs in rules:
            self._add_rule(tuple(lhs), rhs, check_order)
        self._cache = {}
        self._steps = 0
        self._depth = 0
        self._budget = DEFAULT_STEP_BUDGET

    def _add_rule(self, lhs, rhs, check_order=True):
        if len(lhs) < 2:
            raise PresentationError(f"{self.name}: rule lhs must have length >= 2, got {lhs}")
        if lhs in self.rules:
            raise PresentationError(f"{self.name}: duplicate rule lhs {'*'.join(lhs)}")
        for g in lhs:
            self.table[g]
        lhs_key = self.table.order_key(lhs)
        lhs_par = self.table.word_parity(lhs)
        clean = {}
        for w, c in dict(rhs).items():
            w = tuple(w)
            c = Poly.coerce(c)
            if not c:
                continue
            if check_order and not self.table.order_key(w) < lhs_key:
                raise PresentationError(
                    f"{self.name}: rule {'*'.join(lhs)} -> {'*'.join(w) or '1'} does not decrease the order"
                )
            if self.table.word_parity(w) != lhs_par:
                raise PresentationError(f"{self.name}: rule {'*'.join(lhs)} mixes parities")
            clean[w] = c
        ordered = tuple(sorted(clean.items(), key=lambda t: self.table.order_key(t[0])))
        self.rules[lhs] = RewriteRule(lhs, ordered)

    @classmethod
    def from_relations(cls, name, table, relations):
        """Orient each relation (an element equal to zero) into a rule.

        The leading word under the order becomes the lhs; its coefficient must
        be a nonzero rational.  Relations are reduced by the rules found so far
        and the rule set is kept inter-reduced.  A relation that reduces to
        zero is redundant and dropped.
        """
        pres = cls(name, table)
        for rel in relations:
            terms = pres._reduce_terms(rel.terms if isinstance(rel, AlgebraElement) else dict(rel))
            if not terms:
                continue
            lead = max(terms, key=table.order_key)
            lc = terms[lead]
            if not lc.is_constant():
                raise PresentationError(
                    f"{name}: leading word {'*'.join(lead)} has non-invertible coefficient {lc}"
                )
            inv = 1 / lc.constant_value()
            rhs = {w: -c * inv for w, c in terms.items() if w != lead}
            pres._add_rule(lead, rhs)
            pres._interreduce()
        return pres

    def _interreduce(self):
        changed = True
        while changed:
            changed = False
            self._cache = {}
            for lhs, rule in list(self.rules.items()):
                reduced = self._reduce_terms(rule.rhs_terms())
                if reduced != rule.rhs_terms():
                    del self.rules[lhs]
                    self._add_rule(lhs, reduced)
                    changed = True
        self._cache = {}

    def with_rules(self, name=None, replace=None, check_order=True):
        """A copy with some rule right-hand sides replaced (used to corrupt rule sets in tests)."""
        replace = replace or {}
        rules = []
        for lhs, rule in self.rules.items():
            rules.append((lhs, replace.get(lhs, rule.rhs_terms())))
        return Presentation(name or self.name, self.table, rules, check_order=check_order)

    def free(self):
        """The free algebra on the same generators (no rules)."""
        return Presentation(self.name + "/free", self.table)

    # -- rewriting ----------------------------------------------------------

    def _tick(self):
        self._steps += 1
        if self._steps > self._budget:
            raise NormalizationError(
                f"{self.name}: rewriting exceeded {self._budget} steps; rule set does not terminate"
            )

    def _mul_letter(self, u, g):
        key = (u, g)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rule = self.rules.get((u[-1], g)) if u else None
        if rule is None:
            out = {u + (g,): ONE}
        else:
            self._tick()
            prefix = u[:-1]
            out = {}
            for r, coeff in rule.rhs:
                for w, c in self._mul_word({prefix: ONE}, r).items():
                    _accumulate(out, w, coeff * c)
        self._cache[key] = out
        return out

    def _mul_word(self, terms, word):
        for g in word:
            nxt = {}
            for u, c in terms.items():
                for w, c2 in self._mul_letter(u, g).items():
                    _accumulate(nxt, w, c * c2)
            terms = nxt
            if not terms:
                break
        return terms

    def _reduce_terms(self, terms):
        if self._depth == 0:
            self._steps = 0
            self._budget = _step_budget()
        self._depth += 1
        try:
            out = {}
            for word, coeff in terms.items():
                coeff = Poly.coerce(coeff)
                if not coeff:
                    continue
                for g in word:
                    self.table[g]
                for w, c in self._mul_word({(): ONE}, tuple(word)).items():
                    _accumulate(out, w, coeff * c)
            return out
        except RecursionError:
            raise NormalizationError(f"{self.name}: rewriting recursed too deeply") from None
        finally:
            self._depth -= 1

    def _product(self, left, right):
        # left is already irreducible, so only the letters of right need inserting
        if self._depth == 0:
            self._steps = 0
            self._budget = _step_budget()
        self._depth += 1
        try:
            out = {}
            for w2, c2 in right.items():
                for w, c in self._mul_word(left, w2).items():
                    _accumulate(out, w, c * c2)
            return out
        except RecursionError:
            raise NormalizationError(f"{self.name}: rewriting recursed too deeply") from None
        finally:
            self._depth -= 1

    def is_irreducible(self, word):
        return all((word[i], word[i + 1]) not in self.rules for i in range(len(word) - 1))

    # -- element constructors -------------------------------------------------

    def element(self, terms):
        """Normalize a ``{word: coeff}`` mapping into an element."""
        return AlgebraElement(self, self._reduce_terms(dict(terms)))

    def normalize(self, elem):
        """Normal form of ``elem`` (which may come from another presentation)."""
        return self.element(elem.terms if isinstance(elem, AlgebraElement) else elem)

    def multiply(self, e1, e2):
        return e1.over(self) * e2.over(self)

    def gen(self, name):
        self.table[name]
        return AlgebraElement(self, {(name,): ONE})

    def gens(self, *names):
        return tuple(self.gen(n) for n in names)

    def scalar(self, value):
        value = Poly.coerce(value)
        return AlgebraElement(self, {(): value} if value else {})

    def one(self):
        return self.scalar(1)

    def zero(self):
        return AlgebraElement(self, {})

    def word(self, *letters):
        return self.element({tuple(letters): ONE})

    # -- confluence -----------------------------------------------------------

    def check_confluence(self):
        """Reduce every overlap ``p*q*r`` (``p*q`` and ``q*r`` both lhs) both ways."""
        report = ConfluenceReport(self.name)
        by_first = {}
        for lhs in self.rules:
            by_first.setdefault(lhs[0], []).append(lhs)
        for lhs1 in sorted(self.rules, key=self.table.order_key):
            for lhs2 in sorted(by_first.get(lhs1[-1], ()), key=self.table.order_key):
                word = lhs1 + lhs2[1:]
                left = self.element({w + lhs2[1:]: c for w, c in self.rules[lhs1].rhs})
                right = self.element({lhs1[:-1] + w: c for w, c in self.rules[lhs2].rhs})
                report.overlaps.append(Overlap(word, left, right))
        return report

    def __repr__(self):
        return f"<Presentation {self.name}: {len(self.table)} generators, {len(self.rules)} rules>"


class AlgebraElement:
    """A normalized formal sum of words with Poly coefficients."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self._terms = terms

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms ordered by the word order (ascending)."""
        key = self.algebra.table.order_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]))

    def words(self):
        return set(self._terms)

    def coefficient(self, word):
        return self._terms.get(tuple(word), Poly())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def parity(self):
        """Parity of a homogeneous element; zero counts as even."""
        pars = {self.algebra.table.word_parity(w) for w in self._terms}
        if len(pars) > 1:
            raise ValueError("element is not homogeneous")
        return pars.pop() if pars else 0

    def is_scalar(self):
        return all(w == () for w in self._terms)

    def scalar_part(self):
        return self._terms.get((), Poly())

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValueError(
                    f"elements of different algebras: {self.algebra.name} and {other.algebra.name}"
                )
            return other
        if isinstance(other, (Poly, int, Rational)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(out, w, c)
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Rational)):
            other = Poly.coerce(other)
            if not other:
                return self.algebra.zero()
            return AlgebraElement(self.algebra, {w: c * other for w, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraElement(self.algebra, self.algebra._product(self._terms, other._terms))

    def __rmul__(self, other):
        if isinstance(other, (Poly, int, Rational)):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra is other.algebra and self._terms == other._terms
        if isinstance(other, (Poly, int, Rational)):
            return self._terms == self.algebra.scalar(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.name, frozenset(self._terms.items())))

    # -- maps -----------------------------------------------------------------

    def over(self, algebra):
        """This element re-normalized in another presentation sharing the letters."""
        if algebra is self.algebra:
            return self
        return algebra.element(self._terms)

    def substitute(self, bindings=None, **kw):
        """Specialize coefficient symbols (see :meth:`Poly.substitute`)."""
        out = {}
        for w, c in self._terms.items():
            _accumulate(out, w, c.substitute(bindings, **kw))
        return AlgebraElement(self.algebra, out)

    def map_letters(self, images, target):
        """Apply the algebra map sending each letter to ``images[letter]`` (default: itself)."""
        out = target.zero()
        cache = {}
        for w, c in self._terms.items():
            term = target.scalar(c)
            for g in w:
                img = images.get(g)
                if img is None:
                    img = cache.get(g)
                    if img is None:
                        img = cache[g] = target.gen(g)
                term = term * img
            out = out + term
        return out

    def __str__(self):
        from .expr import format_element

        return format_element(self)

    def __repr__(self):
        return f"<{self.algebra.name}: {self}>"


def graded_commutator(u, v):
    """``u*v - (-1)^(|u||v|) v*u`` for homogeneous elements."""
    sign = -1 if (u.parity() and v.parity()) else 1
    return u * v - sign * (v * u)


if sys.getrecursionlimit() < 5000:
    sys.setrecursionlimit(5000)
