"""Independent reference reducer for cross-checking the engine.

Words are tuples of letter names; coefficients are sympy expressions.
Reduction rewrites the leftmost reducible adjacent pair until none is left,
which shares no code with the engine's letter-by-letter multiplication.
"""

from functools import lru_cache

import sympy

H, C0, C1, C2 = sympy.symbols("h c0 c1 c2")
_SYMS = (H, C0, C1, C2)

# quantum superspace, oriented by hand towards theta1 < x < theta2
SUPERSPACE_RULES = {
    ("x", "theta1"): {("theta1", "x"): 1, ("x", "theta2"): H},
    ("theta2", "theta1"): {("theta1", "theta2"): -1},
    ("theta2", "x"): {("x", "theta2"): 1},
    ("theta1", "theta1"): {("x", "x"): -H / 2, ("theta1", "theta2"): H},
    ("theta2", "theta2"): {},
}

SUPERSPACE_PARITY = {"theta1": 1, "x": 0, "theta2": 1}


def poly_to_sympy(p):
    total = sympy.Integer(0)
    for exp, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(_SYMS, exp):
            term *= s**e
        total += term
    return sympy.expand(total)


def rules_from_presentation(pres):
    return {lhs: {w: poly_to_sympy(c) for w, c in rule.rhs} for lhs, rule in pres.rules.items()}


def element_to_terms(elem):
    return {w: poly_to_sympy(c) for w, c in elem.terms.items()}


class NaiveRewriter:
    def __init__(self, rules):
        self.rules = {tuple(k): {tuple(w): sympy.sympify(c) for w, c in v.items()} for k, v in rules.items()}
        self._nf = lru_cache(maxsize=None)(self._normal_form_word)

    def _normal_form_word(self, word):
        for i in range(len(word) - 1):
            rhs = self.rules.get(word[i : i + 2])
            if rhs is not None:
                out = {}
                for r, c in rhs.items():
                    for w, d in self._nf(word[:i] + r + word[i + 2 :]).items():
                        out[w] = out.get(w, 0) + c * d
                return _clean(out)
        return {word: sympy.Integer(1)}

    def reduce(self, terms):
        out = {}
        for w, c in terms.items():
            for v, d in self._nf(tuple(w)).items():
                out[v] = out.get(v, 0) + c * d
        return _clean(out)

    def multiply(self, a, b):
        prod = {}
        for u, c in a.items():
            for v, d in b.items():
                prod[u + v] = prod.get(u + v, 0) + c * d
        return self.reduce(prod)

    def overlaps(self):
        """Every overlap word p*q*r reduced both ways: (word, via_left, via_right)."""
        out = []
        for (p, q), rhs1 in self.rules.items():
            for (q2, r), rhs2 in self.rules.items():
                if q2 != q:
                    continue
                left = self.reduce({w + (r,): c for w, c in rhs1.items()})
                right = self.reduce({(p,) + w: c for w, c in rhs2.items()})
                out.append(((p, q, r), left, right))
        return out


def _clean(terms):
    out = {}
    for w, c in terms.items():
        c = sympy.expand(c)
        if c != 0:
            out[w] = c
    return out


def add(*parts):
    out = {}
    for part in parts:
        for w, c in part.items():
            out[w] = out.get(w, 0) + c
    return _clean(out)


def scale(c, terms):
    return _clean({w: c * d for w, d in terms.items()})


def letter(name):
    return {(name,): sympy.Integer(1)}


def scalar(c):
    return {(): sympy.sympify(c)} if c != 0 else {}


def group_entries(rw):
    """T with e, beta, gamma written out by hand from their defining formulas."""
    a, b, c, d, al, de = (letter(n) for n in ("a", "b", "c", "d", "alpha", "delta"))
    m = rw.multiply
    e = add(scalar(1), m(al, de), scale(-H / 2, m(a, c)))
    gamma = add(m(al, c), scale(-1, m(de, a)), scale(-H, m(de, c)))
    beta = add(m(al, d), scale(-1, m(de, b)), scale(-H, m(de, d)), scale(-H / 2, gamma))
    return [[a, al, b], [gamma, e, beta], [c, de, d]]


def exterior_d(word, parity):
    """d of a single superspace word as free terms: d(theta1) = xi1, d(x) = eta, d(theta2) = xi2."""
    diff = {"theta1": "xi1", "x": "eta", "theta2": "xi2"}
    out = {}
    sign = 1
    for k, g in enumerate(word):
        w = word[:k] + (diff[g],) + word[k + 1 :]
        out[w] = out.get(w, 0) + sign
        if parity[g]:
            sign = -sign
    return out
