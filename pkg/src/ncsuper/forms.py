"""Differential forms over the superspace as data.

Tensor products of one-forms over the superspace are elements of the
``forms`` presentation whose words are a coordinate word followed by k
one-form labels; its rewrite rules move every coefficient to the far left.
Wedge forms are elements of the ``wedge`` presentation.  A value of
(two-forms) ox (one-forms) is a three-slot ``forms`` element whose first
two labels are a wedge basis pair, see :func:`pi12`.
"""

import random
from itertools import product

from .algebra import AlgebraElement
from .coefficients import Poly
from .expr import FORM_LETTERS, parse_in
from .presentations import (
    COORDINATE_DIFFERENTIAL_RELATIONS,
    MACROS,
    SUPERSPACE_RELATIONS,
    WEDGE_RELATIONS,
    X_NAMES,
    XI_NAMES,
    DER_NAMES,
    Report,
    calculus,
    coordinate_parity,
    forms,
    index_parity,
    relation_element,
    relation_label,
    superspace,
    wedge as wedge_algebra,
)

WEDGE_BASIS = (("xi1", "xi1"), ("xi1", "eta"), ("xi1", "xi2"), ("eta", "xi2"), ("xi2", "xi2"))

SIGMA_TABLE = {
    ("xi1", "xi1"): "xi1 ox xi1 - h*(xi1 ox xi2 + eta ox eta - xi2 ox xi1 - (h/2)*xi2 ox xi2)",
    ("xi1", "eta"): "eta ox xi1 + h*xi2 ox eta",
    ("xi1", "xi2"): "xi2 ox xi1 + h*xi2 ox xi2",
    ("eta", "xi1"): "xi1 ox eta - h*eta ox xi2",
    ("eta", "eta"): "-eta ox eta - h*xi2 ox xi2",
    ("eta", "xi2"): "xi2 ox eta",
    ("xi2", "xi1"): "xi1 ox xi2 - h*xi2 ox xi2",
    ("xi2", "eta"): "eta ox xi2",
    ("xi2", "xi2"): "xi2 ox xi2",
}

SIGMA_RHO_TABLE = [
    ("xi1 ox rho", "rho ox xi1"),
    ("eta ox rho", "-rho ox eta"),
    ("xi2 ox rho", "rho ox xi2"),
    ("rho ox xi1", "xi1 ox rho"),
    ("rho ox eta", "-eta ox rho"),
    ("rho ox xi2", "xi2 ox rho"),
    ("rho ox rho", "-rho ox rho"),
]

RHO_RIGHT_FORM = "xi2*theta1 + eta*x - xi1*theta2 + (h/2)*xi2*theta2"


def split_word(word):
    """``(coefficient word, labels)`` of a left-canonical word."""
    for i, g in enumerate(word):
        if g in FORM_LETTERS:
            return word[:i], word[i:]
    return word, ()


def slot_count(t):
    """Number of one-form slots; every term must agree."""
    counts = {sum(1 for g in w if g in FORM_LETTERS) for w in t.words()}
    if len(counts) > 1:
        raise ValueError(f"mixed tensor degrees {sorted(counts)}")
    return counts.pop() if counts else 0


def canonicalize_tensor(t):
    """Left-canonical form of a tensor given in any word order (e.g. from the free algebra)."""
    return forms().normalize(t)


def _rcheck():
    from .matrices import build_constant

    return build_constant("Rcheck")


def sigma_apply(t, pos=0):
    """Apply the generalized permutation to slots ``pos`` and ``pos + 1``."""
    alg = forms()
    t = t.over(alg)
    Rc = _rcheck()
    out = {}
    for word, coeff in t.terms.items():
        prefix, labels = split_word(word)
        if pos < 0 or pos + 1 >= len(labels):
            raise IndexError(f"slot {pos} out of range for a {len(labels)}-slot tensor")
        k, l = XI_NAMES.index(labels[pos]), XI_NAMES.index(labels[pos + 1])
        for i, j in product(range(3), repeat=2):
            v = Rc.scalar(k, l, i, j)
            if v:
                w = prefix + labels[:pos] + (XI_NAMES[i], XI_NAMES[j]) + labels[pos + 2 :]
                acc = out.get(w, Poly()) + coeff * v
                if acc:
                    out[w] = acc
                else:
                    out.pop(w, None)
    return AlgebraElement(alg, out)


def pi12(t):
    """Wedge the first two slots, leaving the rest: a (two-form) ox ... value in ``forms``."""
    alg, wedge_alg = forms(), wedge_algebra()
    t = t.over(alg)
    out = alg.zero()
    for word, coeff in t.terms.items():
        prefix, labels = split_word(word)
        if len(labels) < 2:
            raise ValueError("pi needs at least two slots")
        head = wedge_alg.element({prefix + labels[:2]: coeff})
        rest = labels[2:]
        out = out + alg.element({w + rest: c for w, c in head.terms.items()})
    return out


def pi_apply(t):
    """Project a two-slot tensor onto two-forms (a ``wedge`` element)."""
    if t and slot_count(t) != 2:
        raise ValueError("pi_apply expects a two-slot tensor; use pi12 for more slots")
    return t.over(wedge_algebra())


def wedge(a, b):
    """Wedge product of forms of total degree at most two."""
    wedge_alg = wedge_algebra()
    if slot_count(a) + slot_count(b) > 2:
        raise ValueError("wedge products beyond degree two are not supported")
    return a.over(wedge_alg) * b.over(wedge_alg)


def d_apply(e, target=None):
    """Exterior derivative as the graded derivation with d(X^i) = Xi^i and d(Xi^i) = 0.

    ``e`` may live in any presentation over coordinate and form letters
    (including free ones); the result is computed in ``target`` (default:
    the wedge algebra).
    """
    target = target or wedge_algebra()
    table = e.algebra.table
    out = target.zero()
    for word, coeff in e.terms.items():
        left = target.scalar(coeff)
        parity = 0
        for k, g in enumerate(word):
            if g in X_NAMES:
                diff = XI_NAMES[X_NAMES.index(g)]
                term = left * target.gen(diff)
                rest = word[k + 1 :]
                if rest:
                    term = term * target.element({rest: 1})
                out = out + (-term if parity else term)
            elif g not in FORM_LETTERS:
                raise ValueError(f"d is not defined on the letter {g!r}")
            left = left * target.gen(g)
            parity ^= table.parity(g)
    return out


def invariant(name):
    """phi, rho, Lambda, chi or varpi."""
    if name == "phi":
        return parse_in("phi", superspace(), MACROS)
    if name == "rho":
        return parse_in("rho", forms(), MACROS)
    if name == "Lambda":
        return parse_in("Lambda", forms(), MACROS)
    if name == "varpi":
        return parse_in("rho ox rho", forms(), MACROS)
    if name == "chi":
        from .matrices import build_constant

        J = build_constant("J")
        wedge_alg = wedge_algebra()
        xi = [wedge_alg.gen(n) for n in XI_NAMES]
        return sum((J.entry(a, b) * (xi[a] * xi[b]) for a in range(3) for b in range(3)), wedge_alg.zero())
    raise KeyError(f"unknown invariant {name!r}")


def f_text(text, algebra=None):
    return parse_in(text, algebra or forms(), MACROS)


def _sign(e):
    return -1 if e % 2 else 1


def random_superspace_words(count, max_len=3, seed=0):
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        n = rng.randint(1, max_len)
        words.append(tuple(rng.choice(X_NAMES) for _ in range(n)))
    return words


def partial_action(i, f):
    """The derivative d_i applied to a superspace element, read off the calculus."""
    calc = calculus()
    moved = calc.gen(DER_NAMES[i]) * f.over(calc)
    return calc.element({w: c for w, c in moved.terms.items() if not set(w) & set(DER_NAMES)})


def check_form_identities(report=None):
    report = report or Report("forms")
    alg, wedge_alg, ss = forms(), wedge_algebra(), superspace()
    xi = {n: alg.gen(n) for n in XI_NAMES}
    X = [alg.gen(n) for n in X_NAMES]
    basis_pairs = list(product(XI_NAMES, repeat=2))

    for a, b in basis_pairs:
        got = sigma_apply(xi[a] * xi[b])
        report.add(f"forms.sigma-table[{a},{b}]", f"sigma({a} ox {b}) = {SIGMA_TABLE[(a, b)]}", got - f_text(SIGMA_TABLE[(a, b)]))
    for a, b in basis_pairs:
        t = xi[a] * xi[b]
        report.add(f"forms.sigma-involution[{a},{b}]", "sigma^2 = 1", sigma_apply(sigma_apply(t)) - t)
        report.add(f"forms.pi-sigma[{a},{b}]", "pi o (sigma - 1) = 0", pi_apply(sigma_apply(t) - t))
    for a, b, c in product(XI_NAMES, repeat=3):
        t = xi[a] * xi[b] * xi[c]
        lhs = sigma_apply(sigma_apply(sigma_apply(t, 0), 1), 0)
        rhs = sigma_apply(sigma_apply(sigma_apply(t, 1), 0), 1)
        report.add(f"forms.sigma-braid[{a},{b},{c}]", "sigma12 sigma23 sigma12 = sigma23 sigma12 sigma23", lhs - rhs)

    # bilinearity on basis tensors
    phi_f = invariant("phi").over(alg)
    coefficient_samples = [("theta1", X[0]), ("x", X[1]), ("theta2", X[2]), ("phi", phi_f)]
    for (fname, f), (a, b) in product(coefficient_samples, basis_pairs):
        t = xi[a] * xi[b]
        report.add(f"forms.sigma-left-linear[{fname};{a},{b}]", "sigma(f t) = f sigma(t)", sigma_apply(f * t) - f * sigma_apply(t))
        report.add(f"forms.sigma-right-linear[{fname};{a},{b}]", "sigma(t f) = sigma(t) f", sigma_apply(t * f) - sigma_apply(t) * f)

    # invariants and their exchange relations
    phi = invariant("phi")
    rho = invariant("rho")
    lam = invariant("Lambda")
    Xs = [ss.gen(n) for n in X_NAMES]
    for i, n in enumerate(X_NAMES):
        report.add(f"forms.coordinate-phi[{n}]", "X^a phi = phi X^a", Xs[i] * phi - phi * Xs[i])
    for n in XI_NAMES:
        report.add(f"forms.differential-phi[{n}]", "Xi^a phi = phi Xi^a", xi[n] * phi_f - phi_f * xi[n])
    for i, n in enumerate(X_NAMES):
        report.add(
            f"forms.coordinate-rho[{n}]",
            "X^a rho = (-1)^(X^a) rho X^a",
            X[i] * rho - _sign(coordinate_parity(i)) * (rho * X[i]),
        )
    rho_w = rho.over(wedge_alg)
    for i, n in enumerate(XI_NAMES):
        xw = wedge_alg.gen(n)
        report.add(
            f"forms.differential-rho[{n}]",
            "Xi^a /\\ rho = (-1)^(Xi^a) rho /\\ Xi^a",
            xw * rho_w - _sign(index_parity(i)) * (rho_w * xw),
        )
    report.add("forms.rho-wedge-rho", "rho /\\ rho = 0", rho_w * rho_w)
    report.add("forms.chi", "chi = sum J_ab Xi^a /\\ Xi^b = 0", invariant("chi"))
    report.add("forms.pi-Lambda", "pi(Lambda) = 0", pi_apply(lam))
    for i, n in enumerate(X_NAMES):
        report.add(f"forms.coordinate-Lambda[{n}]", "[X^a, Lambda] = 0", X[i] * lam - lam * X[i])
    for lhs, rhs in SIGMA_RHO_TABLE:
        report.add(f"forms.sigma-rho[{lhs}]", f"sigma({lhs}) = {rhs}", sigma_apply(f_text(lhs)) - f_text(rhs))

    # sigma solves the exchange relation with B
    from .matrices import build_constant

    B = build_constant("B")
    for i, j in product(range(3), repeat=2):
        rhs = alg.zero()
        for k, l in product(range(3), repeat=2):
            v = B.scalar(i, j, k, l)
            if v:
                rhs = rhs + _sign(coordinate_parity(i) + index_parity(l)) * v * sigma_apply(xi[XI_NAMES[l]] * xi[XI_NAMES[k]])
        report.add(
            f"forms.sigma-exchange[{i + 1}{j + 1}]",
            "Xi^i ox Xi^j = sum (-1)^(X^i + Xi^l) B^{ij}_{kl} sigma(Xi^l ox Xi^k)",
            xi[XI_NAMES[i]] * xi[XI_NAMES[j]] - rhs,
        )

    theta1_sq = Xs[0] * Xs[0]
    for i, n in enumerate(X_NAMES):
        report.add(f"forms.theta1-squared-central[{n}]", "[theta1^2, X^a] = 0", theta1_sq * Xs[i] - Xs[i] * theta1_sq)

    # reordering rho with differentials on the left
    right = f_text(RHO_RIGHT_FORM)
    report.add("forms.rho-right-coefficients", f"{RHO_RIGHT_FORM} = rho", right - rho)

    # exterior derivative
    for n in X_NAMES:
        report.add(f"forms.d-squared[{n}]", "d(d(X)) = 0", d_apply(d_apply(ss.gen(n))))
    for w in random_superspace_words(25, max_len=3, seed=7):
        e = ss.element({w: 1})
        report.add(f"forms.d-squared[{'*'.join(w)}]", "d(d(f)) = 0", d_apply(d_apply(e)))
    free = wedge_alg.free()
    for rel in SUPERSPACE_RELATIONS + COORDINATE_DIFFERENTIAL_RELATIONS:
        raw = relation_element(rel, free)
        report.add(f"forms.d-of-relation[{relation_label(rel)}]", "d maps relations to relations", d_apply(raw))
    report.add("forms.d-theta1", "d(theta1) = xi1", d_apply(ss.gen("theta1")) - wedge_alg.gen("xi1"))

    # d agrees with the derivatives: df = sum_i Xi^i d_i f
    calc = calculus()
    samples = [ss.element({w: 1}) for w in product(X_NAMES, repeat=2)] + [phi]
    samples += [ss.element({w: 1}) for w in random_superspace_words(6, max_len=3, seed=11)]
    for f in samples:
        via_partials = sum(
            (calc.gen(XI_NAMES[i]) * partial_action(i, f) for i in range(3)),
            calc.zero(),
        )
        report.add(f"forms.d-via-derivatives[{f}]", "df = sum_i Xi^i d_i f", d_apply(f).over(calc) - via_partials)

    # wedge relations in matrix form, in the wedge algebra itself
    xw = [wedge_alg.gen(n) for n in XI_NAMES]
    for i, j in product(range(3), repeat=2):
        rhs = wedge_alg.zero()
        for k, l in product(range(3), repeat=2):
            v = B.scalar(i, j, k, l)
            if v:
                rhs = rhs + _sign(coordinate_parity(i) + index_parity(l)) * v * (xw[l] * xw[k])
        report.add(f"forms.wedge-matrix-form[{i + 1}{j + 1}]", "Xi^i /\\ Xi^j = sum (-1)^(X^i + Xi^l) B^{ij}_{kl} Xi^l /\\ Xi^k", xw[i] * xw[j] - rhs)
    basis_words = {w for w in wedge_alg_basis_words(wedge_alg)}
    report.add(
        "forms.two-form-basis",
        "irreducible two-form words are the five basis pairs",
        wedge_alg.scalar(0 if basis_words == set(WEDGE_BASIS) else 1),
    )
    return report


def wedge_alg_basis_words(wedge_alg):
    return [w for w in product(XI_NAMES, repeat=2) if wedge_alg.is_irreducible(w)]


def check_classical_limit(report=None):
    """At h = 0: graded-commutative superspace, trivial R and signed-diagonal B, graded flip sigma."""
    from .matrices import GradedMatrix, b_matrix, r_matrix

    report = report or Report("classical")
    ss = superspace()
    for i, j in product(range(3), repeat=2):
        u, v = ss.gen(X_NAMES[i]), ss.gen(X_NAMES[j])
        sign = _sign(coordinate_parity(i) * coordinate_parity(j))
        report.add(
            f"classical.superspace[{X_NAMES[i]},{X_NAMES[j]}]",
            "X^i X^j = (-1)^(X^i X^j) X^j X^i at h = 0",
            (u * v - sign * (v * u)).substitute(h=0),
        )
    report.add("classical.R", "R(0) = 1", (r_matrix(0) - GradedMatrix.identity(9)).nonzero_entries())
    B0 = b_matrix(0)
    expected = [
        [Poly.const(_sign(coordinate_parity(i) * coordinate_parity(j)) if (i, j) == (k, l) else 0) for k in range(3) for l in range(3)]
        for i in range(3)
        for j in range(3)
    ]
    report.add("classical.B", "B(0)^{ij}_{kl} = (-1)^(X^i X^j) delta", (B0 - GradedMatrix(expected)).nonzero_entries())
    alg = forms()
    for a, b in product(range(3), repeat=2):
        t = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        flip = _sign(index_parity(a) * index_parity(b)) * (alg.gen(XI_NAMES[b]) * alg.gen(XI_NAMES[a]))
        report.add(
            f"classical.sigma[{XI_NAMES[a]},{XI_NAMES[b]}]",
            "sigma(Xi^a ox Xi^b) = (-1)^(ab) Xi^b ox Xi^a at h = 0",
            (sigma_apply(t) - flip).substitute(h=0),
        )
    return report


__all__ = [
    "WEDGE_BASIS",
    "SIGMA_TABLE",
    "canonicalize_tensor",
    "sigma_apply",
    "pi12",
    "pi_apply",
    "wedge",
    "d_apply",
    "invariant",
    "slot_count",
    "split_word",
    "check_form_identities",
    "check_classical_limit",
    "partial_action",
]
