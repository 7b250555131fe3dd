"""The concrete algebras: superspace, its differential calculus, the deformed
supergroup and their graded tensor product, plus the coaction.

Relations are transcribed as text and oriented into rewrite rules by
:meth:`Presentation.from_relations`.  A relation is one of

* ``("[", u, v, rhs)``  the commutator ``u*v - v*u = rhs``
* ``("{", u, v, rhs)``  the anticommutator ``u*v + v*u = rhs``
* ``("=", lhs, rhs)``   a plain equation
"""

from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cache, wraps

from .algebra import GeneratorTable, Presentation, PresentationError
from .coefficients import Poly
from .expr import parse_relation

# (name, parity, weight); list position is the rank
COORDINATES = [("theta1", 1, 2), ("x", 0, 1), ("theta2", 1, 1)]
DIFFERENTIALS = [("xi1", 0, 3), ("eta", 1, 2), ("xi2", 0, 1)]
DERIVATIVES = [("d1", 1, 1), ("dx", 0, 1), ("d2", 1, 1)]
GROUP = [("a", 0, 2), ("b", 0, 4), ("c", 0, 1), ("d", 0, 1), ("alpha", 1, 3), ("delta", 1, 1)]

X_NAMES = ("theta1", "x", "theta2")
XI_NAMES = ("xi1", "eta", "xi2")
DER_NAMES = ("d1", "dx", "d2")
GROUP_NAMES = tuple(g[0] for g in GROUP)

# entries of T row by row; e, beta, gamma are macros
T_ENTRIES = (("a", "alpha", "b"), ("gamma", "e", "beta"), ("c", "delta", "d"))

MACROS = {
    "e": "1 + alpha*delta - (1/2)*h*a*c",
    "gamma": "alpha*c - delta*a - h*delta*c",
    "beta": "alpha*d - delta*b - h*delta*d - (1/2)*h*gamma",
    "phi": "x*x - 2*theta1*theta2",
    "rho": "theta1*xi2 + x*eta - theta2*xi1 - (1/2)*h*theta2*xi2",
    "Lambda": "xi1 ox xi2 + eta ox eta - xi2 ox xi1 - (1/2)*h*xi2 ox xi2",
}

SUPERSPACE_RELATIONS = [
    ("[", "theta1", "x", "-h*x*theta2"),
    ("{", "theta1", "theta2", "0"),
    ("[", "theta2", "x", "0"),
    ("=", "theta1^2", "-(h/2)*(x^2 - 2*theta1*theta2)"),
    ("=", "theta2^2", "0"),
]

WEDGE_RELATIONS = [
    ("=", "xi1*eta - eta*xi1", "h*eta*xi2"),
    ("=", "xi1*xi2 - xi2*xi1", "h*xi2*xi2"),
    ("=", "eta*xi2 - xi2*eta", "0"),
    ("=", "eta*eta", "-(h/2)*xi2*xi2"),
]

COORDINATE_DIFFERENTIAL_RELATIONS = [
    ("[", "theta1", "xi1", "h*(theta1*xi2 + x*eta - theta2*xi1 - (h/2)*theta2*xi2)"),
    ("{", "theta1", "eta", "h*x*xi2"),
    ("[", "theta1", "xi2", "h*theta2*xi2"),
    ("[", "x", "xi1", "-h*theta2*eta"),
    ("[", "x", "eta", "-h*theta2*xi2"),
    ("[", "x", "xi2", "0"),
    ("[", "theta2", "xi1", "-h*theta2*xi2"),
    ("{", "theta2", "eta", "0"),
    ("[", "theta2", "xi2", "0"),
]

DERIVATIVE_COORDINATE_RELATIONS = [
    ("=", "d1*theta1", "1 - theta1*d1 + h*theta2*d1"),
    ("=", "d1*x", "x*d1"),
    ("=", "d1*theta2", "-theta2*d1"),
    ("=", "dx*theta1", "theta1*dx - h*x*d1"),
    ("=", "dx*x", "1 + x*dx + h*theta2*d1"),
    ("=", "dx*theta2", "theta2*dx"),
    ("=", "d2*theta1", "-theta1*d2 - h*(theta1*d1 + x*dx + theta2*d2 + (h/2)*theta2*d1)"),
    ("=", "d2*x", "x*d2 - h*theta2*dx"),
    ("=", "d2*theta2", "1 - theta2*d2 + h*theta2*d1"),
]

DERIVATIVE_DIFFERENTIAL_RELATIONS = [
    ("=", "d1*xi1", "xi1*d1 - h*xi2*d1"),
    ("=", "d1*eta", "-eta*d1"),
    ("=", "d1*xi2", "xi2*d1"),
    ("=", "dx*xi1", "xi1*dx - h*eta*d1"),
    ("=", "dx*eta", "eta*dx + h*xi2*d1"),
    ("=", "dx*xi2", "xi2*dx"),
    ("=", "d2*xi1", "xi1*d2 + h*(xi1*d1 + eta*dx + xi2*d2 + (h/2)*xi2*d1)"),
    ("=", "d2*eta", "-eta*d2 + h*xi2*dx"),
    ("=", "d2*xi2", "xi2*d2 - h*xi2*d1"),
]

DERIVATIVE_RELATIONS = [
    ("=", "d1^2", "0"),
    ("=", "d1*dx", "dx*d1"),
    ("=", "d1*d2", "-d2*d1"),
    ("=", "dx*d2", "d2*dx - h*d1*dx"),
    ("=", "d2^2", "h*(d1*d2 - (1/2)*dx^2)"),
]

CALCULUS_FAMILIES = {
    "coordinates": SUPERSPACE_RELATIONS,
    "differentials": WEDGE_RELATIONS,
    "coordinates-differentials": COORDINATE_DIFFERENTIAL_RELATIONS,
    "derivatives-coordinates": DERIVATIVE_COORDINATE_RELATIONS,
    "derivatives-differentials": DERIVATIVE_DIFFERENTIAL_RELATIONS,
    "derivatives": DERIVATIVE_RELATIONS,
}

GROUP_RELATIONS = [
    ("[", "a", "b", "h*(1 - a^2)"),
    ("[", "a", "c", "h*c^2"),
    ("[", "a", "d", "h*(c*d - c*a)"),
    ("[", "a", "alpha", "0"),
    ("[", "a", "delta", "h*c*delta"),
    ("[", "b", "c", "h*(c*a + d*c)"),
    ("[", "b", "d", "h*(d^2 - 1)"),
    ("[", "b", "alpha", "h*alpha*a"),
    ("[", "b", "delta", "h*(d*delta + c*alpha)"),
    ("[", "c", "d", "-h*c^2"),
    ("[", "c", "alpha", "-h*c*delta"),
    ("[", "c", "delta", "0"),
    ("[", "d", "alpha", "h*(delta*a - delta*d)"),
    ("[", "d", "delta", "h*delta*c"),
    ("{", "alpha", "delta", "h*(a*c - delta^2)"),
    ("=", "alpha^2", "(h/2)*(a^2 - 1)"),
    ("=", "delta^2", "(h/2)*c^2"),
]

# The commutation relations alone admit the h = 0 supercommutative algebra
# without unit superdeterminant, so the determinant relation is defining.
DETERMINANT_RELATION = ("=", "a*d - b*c + alpha*delta + (h/2)*a*c", "1")

CENTER_RELATIONS = [
    DETERMINANT_RELATION,
    ("=", "alpha*delta + beta*gamma", "(h/2)*(a*c - d*c)"),
]

DERIVED_GROUP_RELATIONS = [
    ("[", "a", "e", "h*gamma*delta"),
    ("[", "b", "e", "h*(beta*delta + gamma*alpha)"),
    ("[", "c", "e", "0"),
    ("[", "d", "e", "h*gamma*delta"),
    ("[", "e", "alpha", "h*(e*delta + gamma*a)"),
    ("[", "e", "beta", "h*(d*delta + gamma*e)"),
    ("[", "e", "gamma", "h*c*delta"),
    ("[", "e", "delta", "h*c*gamma"),
    ("[", "a", "beta", "h*(gamma*d - gamma*a)"),
    ("[", "b", "beta", "h*beta*d"),
    ("[", "c", "beta", "-h*c*gamma"),
    ("[", "d", "beta", "0"),
    ("{", "alpha", "beta", "h*(e*a - e*d)"),
    ("{", "beta", "gamma", "-h*(d*c + gamma^2)"),
    ("{", "beta", "delta", "h*c*e"),
    ("[", "a", "gamma", "h*gamma*c"),
    ("[", "b", "gamma", "h*(beta*c + gamma*a)"),
    ("[", "c", "gamma", "0"),
    ("[", "d", "gamma", "h*c*gamma"),
    ("{", "alpha", "gamma", "-h*c*e"),
    ("{", "gamma", "delta", "0"),
    ("=", "beta^2", "(h/2)*(1 - d^2)"),
    ("=", "gamma^2", "-(h/2)*c^2"),
]


def relation_text(rel):
    kind = rel[0]
    if kind == "[":
        _, u, v, rhs = rel
        return f"{u}*{v} - {v}*{u} = {rhs}"
    if kind == "{":
        _, u, v, rhs = rel
        return f"{u}*{v} + {v}*{u} = {rhs}"
    if kind == "=":
        _, lhs, rhs = rel
        return f"{lhs} = {rhs}"
    raise ValueError(f"unknown relation kind {kind!r}")


def relation_label(rel):
    kind = rel[0]
    if kind == "[":
        return f"[{rel[1]}, {rel[2]}] = {rel[3]}"
    if kind == "{":
        return f"{{{rel[1]}, {rel[2]}}} = {rel[3]}"
    return f"{rel[1]} = {rel[2]}"


def relation_element(rel, algebra):
    """``lhs - rhs`` as an element of ``algebra`` (normalized there)."""
    return parse_relation(relation_text(rel), algebra, MACROS)


def _build(name, entries, relations):
    table = GeneratorTable(entries)
    free = Presentation(name + "/free", table)
    elements = [relation_element(rel, free) for rel in relations]
    pres = Presentation.from_relations(name, table, elements)
    pres.relations = list(relations)
    return pres


def _cross_rules(first, second):
    # Koszul rule: a letter of the second factor moves right past one of the first
    rules = []
    for y, py, _ in second:
        for g, pg, _ in first:
            rules.append(((y, g), {(g, y): Poly.const(-1 if py and pg else 1)}))
    return rules


def _tensor(name, first, second, first_rules, second_rules):
    table = GeneratorTable(list(first) + list(second))
    rules = [(lhs, r.rhs_terms()) for lhs, r in first_rules.items()]
    rules += [(lhs, r.rhs_terms()) for lhs, r in second_rules.items()]
    rules += _cross_rules(first, second)
    return Presentation(name, table, rules)


_OVERRIDES = {}
_DERIVED = ("combined", "combined-forms")


def _named(algebra_id):
    """Cache a builder, honouring presentations swapped in by :func:`overridden`."""

    def wrap(build):
        cached = cache(build)

        @wraps(build)
        def get():
            if not _OVERRIDES:
                return cached()
            if algebra_id not in _OVERRIDES:
                # tensor products are rebuilt from possibly replaced factors
                if algebra_id not in _DERIVED:
                    return cached()
                _OVERRIDES[algebra_id] = build()
            return _OVERRIDES[algebra_id]

        get.cache_clear = cached.cache_clear
        return get

    return wrap


@contextmanager
def overridden(algebra_id, presentation):
    """Temporarily replace a named presentation everywhere it is looked up."""
    if algebra_id not in _BUILDERS:
        raise KeyError(f"unknown algebra {algebra_id!r}")
    saved = dict(_OVERRIDES)
    _OVERRIDES.clear()
    _OVERRIDES.update({k: v for k, v in saved.items() if k not in _DERIVED})
    _OVERRIDES[algebra_id] = presentation
    try:
        yield presentation
    finally:
        _OVERRIDES.clear()
        _OVERRIDES.update(saved)


@_named("superspace")
def superspace():
    return _build("superspace", COORDINATES, SUPERSPACE_RELATIONS)


@_named("calculus")
def calculus():
    relations = [rel for family in CALCULUS_FAMILIES.values() for rel in family]
    return _build("calculus", DIFFERENTIALS + COORDINATES + DERIVATIVES, relations)


@_named("group")
def group():
    return _build("group", GROUP, GROUP_RELATIONS + [DETERMINANT_RELATION])


@_named("forms")
def forms():
    """Tensor algebra of one-forms over the superspace; coefficients sit left."""
    return _build("forms", COORDINATES + DIFFERENTIALS, SUPERSPACE_RELATIONS + COORDINATE_DIFFERENTIAL_RELATIONS)


@_named("wedge")
def wedge():
    """Exterior forms: the tensor algebra modulo the two-form relations."""
    return _build(
        "wedge",
        COORDINATES + DIFFERENTIALS,
        SUPERSPACE_RELATIONS + COORDINATE_DIFFERENTIAL_RELATIONS + WEDGE_RELATIONS,
    )


@_named("combined")
def combined():
    return _tensor("combined", GROUP, DIFFERENTIALS + COORDINATES + DERIVATIVES, group().rules, calculus().rules)


@_named("combined-forms")
def combined_forms():
    return _tensor("combined-forms", GROUP, COORDINATES + DIFFERENTIALS, group().rules, forms().rules)


_BUILDERS = {
    "superspace": superspace,
    "calculus": calculus,
    "group": group,
    "combined": combined,
    "forms": forms,
    "wedge": wedge,
    "combined-forms": combined_forms,
}

ALGEBRA_IDS = ("superspace", "calculus", "group", "combined", "forms", "wedge")


def get_algebra(algebra_id):
    try:
        return _BUILDERS[algebra_id]()
    except KeyError:
        raise KeyError(f"unknown algebra {algebra_id!r}; expected one of {', '.join(_BUILDERS)}") from None


@dataclass
class NamedAlgebra:
    id: str
    presentation: Presentation


def build_presentation(algebra_id):
    """The named algebra, after checking that its rewrite system is confluent."""
    pres = get_algebra(algebra_id)
    report = pres.check_confluence()
    if not report.ok:
        raise PresentationError(str(report))
    return NamedAlgebra(algebra_id, pres)


def macro(name, algebra=None):
    """A derived element (``e``, ``beta``, ``gamma``, ``phi``, ``rho``, ``Lambda``)."""
    from .expr import parse_in

    if algebra is None:
        algebra = group() if name in ("e", "beta", "gamma") else forms()
    return parse_in(name, algebra, MACROS)


def index_parity(i):
    """Parity of the index i in {0, 1, 2}: the middle index is odd."""
    return 1 if i == 1 else 0


def coordinate_parity(i):
    return 1 - index_parity(i)


# -- theorem suite --------------------------------------------------------------


@dataclass
class Check:
    """One verified identity: ``residual`` is the normal form of lhs - rhs."""

    check_id: str
    anchor: str
    residual: object

    @property
    def passed(self):
        r = self.residual
        if isinstance(r, (list, tuple)):
            return all(_is_zero(x) for x in r)
        return _is_zero(r)


def _is_zero(r):
    if r is None:
        return True
    if hasattr(r, "is_zero"):
        return r.is_zero()
    return r == 0


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, check_id, anchor, residual):
        self.checks.append(Check(check_id, anchor, residual))

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def verify_presentation_theorems(report=None):
    """Derived supergroup relations, matrix forms of the relation lists, parities."""
    from . import matrices

    report = report or Report("presentations")
    grp = group()
    for rel in CENTER_RELATIONS:
        report.add(f"group.center[{relation_label(rel)}]", relation_label(rel), relation_element(rel, grp))
    for rel in DERIVED_GROUP_RELATIONS:
        report.add(f"group.derived[{relation_label(rel)}]", relation_label(rel), relation_element(rel, grp))
    # inverse of e, cross-multiplied
    e = macro("e", grp)
    inv_numerator = parse_relation("1 - alpha*delta + (h/2)*a*c", grp)
    target = parse_relation("1 - (h^2/4)*c^2", grp)
    report.add("group.e-inverse.left", "e*(1 - alpha*delta + (h/2)*a*c) = 1 - (h^2/4)*c^2", e * inv_numerator - target)
    report.add("group.e-inverse.right", "(1 - alpha*delta + (h/2)*a*c)*e = 1 - (h^2/4)*c^2", inv_numerator * e - target)
    for name, expected in (("e", 0), ("beta", 1), ("gamma", 1)):
        value = macro(name, grp)
        report.add(
            f"group.parity[{name}]",
            f"parity of {name} is {expected}",
            grp.scalar(value.parity() - expected),
        )

    # relation lists versus their matrix forms
    B = matrices.build_constant("B")
    Binv = matrices.build_constant("Binv")
    ss = superspace()
    X = [ss.gen(n) for n in X_NAMES]
    for i in range(3):
        for j in range(3):
            rhs = ss.zero()
            for k in range(3):
                for l in range(3):
                    rhs = rhs + B.scalar(i, j, k, l) * (X[l] * X[k])
            report.add(f"superspace.matrix-form[{i + 1}{j + 1}]", "X^i X^j = sum B^{ij}_{kl} X^l X^k", X[i] * X[j] - rhs)

    calc = calculus()
    Xc = [calc.gen(n) for n in X_NAMES]
    Xi = [calc.gen(n) for n in XI_NAMES]
    Dr = [calc.gen(n) for n in DER_NAMES]
    xp = coordinate_parity
    for i in range(3):
        for j in range(3):
            wedge_rhs = calc.zero()
            cd_rhs = calc.zero()
            dx_rhs = calc.scalar(1 if i == j else 0)
            dd_rhs = calc.zero()
            dxi_rhs = calc.zero()
            for k in range(3):
                for l in range(3):
                    wedge_rhs = wedge_rhs + (-1) ** (xp(i) + 1 + xp(l)) * B.scalar(i, j, k, l) * (Xi[l] * Xi[k])
                    cd_rhs = cd_rhs + (-1) ** xp(i) * B.scalar(i, j, k, l) * (Xi[l] * Xc[k])
                    dx_rhs = dx_rhs + B.scalar(i, l, k, j) * (Xc[k] * Dr[l])
                    dd_rhs = dd_rhs + B.scalar(k, l, i, j) * (Dr[l] * Dr[k])
                    dxi_rhs = dxi_rhs + (-1) ** xp(j) * Binv.scalar(k, i, j, l) * (Xi[l] * Dr[k])
            tag = f"{i + 1}{j + 1}"
            report.add(f"calculus.matrix-form.differentials[{tag}]", "Xi^i Xi^j = sum (-1)^(X^i + Xi^l) B^{ij}_{kl} Xi^l Xi^k", Xi[i] * Xi[j] - wedge_rhs)
            report.add(f"calculus.matrix-form.coordinates-differentials[{tag}]", "X^i Xi^j = sum (-1)^(X^i) B^{ij}_{kl} Xi^l X^k", Xc[i] * Xi[j] - cd_rhs)
            report.add(f"calculus.matrix-form.derivatives-coordinates[{tag}]", "d_j X^i = delta_ij + sum B^{il}_{kj} X^k d_l", Dr[j] * Xc[i] - dx_rhs)
            report.add(f"calculus.matrix-form.derivatives-differentials[{tag}]", "d_j Xi^i = sum (-1)^(X^j) (B^-1)^{ki}_{jl} Xi^l d_k", Dr[j] * Xi[i] - dxi_rhs)
            report.add(f"calculus.matrix-form.derivatives[{tag}]", "d_i d_j = sum B^{kl}_{ij} d_l d_k", Dr[i] * Dr[j] - dd_rhs)
    return report


# -- coaction -------------------------------------------------------------------


@cache
def _coaction_images(target):
    from . import matrices

    T = matrices.group_matrix("T", target)
    images = {}
    for i in range(3):
        images[X_NAMES[i]] = sum((T.entry(i, j) * target.gen(X_NAMES[j]) for j in range(3)), target.zero())
        images[XI_NAMES[i]] = sum(
            ((-1) ** (index_parity(i) + index_parity(j)) * T.entry(i, j) * target.gen(XI_NAMES[j]) for j in range(3)),
            target.zero(),
        )
    if "d1" in target.table:
        tau = matrices.group_matrix("tau", target)
        for i in range(3):
            images[DER_NAMES[i]] = sum(
                ((-1) ** (index_parity(i) + index_parity(j)) * tau.entry(i, j) * target.gen(DER_NAMES[j]) for j in range(3)),
                target.zero(),
            )
    return images


def coact(elem):
    """Left coaction: calculus (or forms) element to the group tensor product.

    The argument may live in any presentation over calculus or forms letters,
    including the free one; the images are multiplied out in the target.
    """
    letters = set(elem.algebra.table.names)
    target_id = "combined" if letters & set(DER_NAMES) or elem.algebra.name.startswith("calculus") else "combined-forms"
    if elem.algebra.name.startswith(("wedge", "superspace")):
        target_id = "combined"
    target = get_algebra(target_id)
    return elem.map_letters(_coaction_images(target), target)


def counit(elem, target):
    """Apply the counit on the group factor: T goes to the identity matrix."""
    images = {g: target.scalar(1 if g in ("a", "d") else 0) for g in GROUP_NAMES}
    return elem.map_letters(images, target)


def check_covariance(report=None):
    report = report or Report("covariance")
    comb = combined()
    calc_free = calculus().free()
    for family, relations in CALCULUS_FAMILIES.items():
        sector = "derivative-sector" if family.startswith("derivatives") else "forms-sector"
        for rel in relations:
            raw = relation_element(rel, calc_free)
            report.add(f"covariance.{sector}.{family}[{relation_label(rel)}]", relation_label(rel), coact(raw))

    # invariants
    one_phi = parse_relation("phi", comb, MACROS)
    report.add("covariance.invariant[phi]", "phi' = phi", coact(parse_relation("phi", calc_free, MACROS)) - one_phi)
    one_rho = parse_relation("rho", comb, MACROS)
    report.add("covariance.invariant[rho]", "rho' = rho", coact(parse_relation("rho", calc_free, MACROS)) - one_rho)
    cf = combined_forms()
    forms_free = forms().free()
    lam = parse_relation("Lambda", forms_free, MACROS)
    report.add("covariance.invariant[Lambda]", "Lambda' = Lambda", coact(lam) - parse_relation("Lambda", cf, MACROS))

    # counit recovers each generator
    calc = calculus()
    for name in X_NAMES + XI_NAMES + DER_NAMES:
        image = coact(calc_free.gen(name))
        report.add(f"covariance.counit[{name}]", "counit(T) = 1", counit(image, calc) - calc.gen(name))
    return report
