"""Covariant derivatives, torsion, curvature and the metric on the superspace.

The connection on the one-form basis is

    D Xi^a = c0 X^a rho ox rho + c1 (-1)^a Xi^a ox rho + c2 rho ox Xi^a

and is extended to f Xi^a by the left Leibniz rule and to tensors by
D(w ox w') = Dw ox w' + (-1)^|w| sigma12(w ox Dw').  Results are
``forms`` elements (see :mod:`ncsuper.forms`).
"""

from dataclasses import dataclass
from itertools import product

from .coefficients import Poly, c0 as C0, c1 as C1, c2 as C2
from .expr import FORM_LETTERS
from .forms import (
    d_apply,
    f_text,
    invariant,
    pi12,
    pi_apply,
    sigma_apply,
    slot_count,
    split_word,
)
from .presentations import (
    X_NAMES,
    XI_NAMES,
    Report,
    coordinate_parity,
    forms,
    index_parity,
    superspace,
    wedge as wedge_algebra,
)


@dataclass(frozen=True)
class ConnectionParams:
    c0: Poly = C0
    c1: Poly = C1
    c2: Poly = C2

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, Poly.coerce(getattr(self, name)))

    @classmethod
    def torsionless(cls, c0=C0, c1=C1):
        c1 = Poly.coerce(c1)
        return cls(c0, c1, -c1)

    def is_torsionless(self):
        return self.c1 + self.c2 == 0


def _sign(e):
    return -1 if e % 2 else 1


def D_basis(a, params):
    """D of the basis one-form ``Xi^a`` (a in 0..2)."""
    alg = forms()
    rho = invariant("rho")
    xa, xia = alg.gen(X_NAMES[a]), alg.gen(XI_NAMES[a])
    varpi = rho * rho
    return (
        params.c0 * (xa * varpi)
        + params.c1 * _sign(index_parity(a)) * (xia * rho)
        + params.c2 * (rho * xia)
    )


def D_apply(omega, params):
    """D on a one-form via D(f Xi) = df ox Xi + (-1)^f f D(Xi)."""
    alg = forms()
    omega = omega.over(alg)
    if omega and slot_count(omega) != 1:
        raise ValueError("D_apply expects a one-form")
    table = alg.table
    basis = {}
    out = alg.zero()
    for word, coeff in omega.terms.items():
        prefix, (label,) = split_word(word)
        a = XI_NAMES.index(label)
        if a not in basis:
            basis[a] = D_basis(a, params)
        f = alg.element({prefix: coeff})
        if prefix:
            out = out + d_apply(f, target=alg) * alg.gen(label)
        out = out + _sign(table.word_parity(prefix)) * (f * basis[a])
    return out


def D_tensor(t, params):
    """D on a k-slot tensor (k >= 1), producing k + 1 slots."""
    alg = forms()
    t = t.over(alg)
    if not t:
        return alg.zero()
    k = slot_count(t)
    if k == 1:
        return D_apply(t, params)
    table = alg.table
    out = alg.zero()
    cache = {}
    for word, coeff in t.terms.items():
        prefix, labels = split_word(word)
        first = alg.element({prefix + labels[:1]: coeff})
        rest_labels = labels[1:]
        rest = alg.element({rest_labels: 1})
        if rest_labels not in cache:
            cache[rest_labels] = D_tensor(rest, params)
        out = out + D_apply(first, params) * rest
        sign = _sign(table.word_parity(prefix + labels[:1]))
        out = out + sign * sigma_apply(first * cache[rest_labels], 0)
    return out


def torsion(omega, params):
    """Theta = d - pi o D on one-forms (a ``wedge`` element)."""
    return d_apply(omega) - pi_apply(D_apply(omega, params))


def curvature(omega, params):
    """pi12 D^2 on a one-form: a two-form ox one-form value."""
    return pi12(D_tensor(D_apply(omega, params), params))


def curvature_basis(a, params):
    return curvature(forms().gen(XI_NAMES[a]), params)


def curvature_components(a, params):
    """Two-forms w^a_b with pi12 D^2 Xi^a = sum_b w^a_b ox Xi^b."""
    wedge_alg = wedge_algebra()
    value = curvature_basis(a, params)
    parts = [dict() for _ in range(3)]
    for word, coeff in value.terms.items():
        b = XI_NAMES.index(word[-1])
        parts[b][word[:-1]] = coeff
    return [wedge_alg.element(p) for p in parts]


def curvature_closed_form(a, params):
    """(c0 - c1^2 + c0 c1 phi) Xi^a /\\ rho ox rho + (c0 (-1)^a X^a rho + c1 Xi^a) /\\ Lambda."""
    alg = forms()
    rho, lam = invariant("rho"), invariant("Lambda")
    phi = invariant("phi").over(alg)
    xa, xia = alg.gen(X_NAMES[a]), alg.gen(XI_NAMES[a])
    c0, c1 = params.c0, params.c1
    scalar = alg.scalar(c0 - c1 * c1) + c0 * c1 * phi
    first = scalar * pi12(xia * rho * rho)
    second = pi12((c0 * _sign(index_parity(a)) * (xa * rho) + c1 * xia) * lam)
    return first + second


def components_closed_form(a, b, params):
    wedge_alg = wedge_algebra()
    from .matrices import build_constant

    J = build_constant("J")
    rho = invariant("rho").over(wedge_alg)
    phi = invariant("phi").over(wedge_alg)
    c0, c1 = params.c0, params.c1
    xa, xia = wedge_alg.gen(X_NAMES[a]), wedge_alg.gen(XI_NAMES[a])
    scalar = wedge_alg.scalar(c0 - c1 * c1) + c0 * c1 * phi
    out = wedge_alg.zero()
    for k in range(3):
        jkb = J.entry(k, b)
        if not jkb:
            continue
        xk, xik = wedge_alg.gen(X_NAMES[k]), wedge_alg.gen(XI_NAMES[k])
        inner = c0 * _sign(index_parity(a)) * (xa * xik) - scalar * (xia * xk)
        out = out + jkb * (_sign(index_parity(k)) * (inner * rho) + c1 * (xia * xik))
    return out


# -- metric -------------------------------------------------------------------


def metric_matrix():
    from .matrices import build_constant

    return build_constant("Jinv")


def metric_eval(t):
    """g on two slots, or (1 ox g) on the last two slots of a three-slot tensor."""
    alg = forms()
    t = t.over(alg)
    if not t:
        return alg.zero()
    k = slot_count(t)
    if k not in (2, 3):
        raise ValueError(f"metric_eval needs 2 or 3 slots, got {k}")
    g = metric_matrix()
    out = {}
    for word, coeff in t.terms.items():
        head, (p, q) = word[:-2], word[-2:]
        v = g.entry(XI_NAMES.index(p), XI_NAMES.index(q))
        if v:
            acc = out.get(head, Poly()) + coeff * v
            if acc:
                out[head] = acc
            else:
                out.pop(head, None)
    result = alg.element(out)
    return result.over(superspace()) if k == 2 else result


def compatibility_defect(a, b, params):
    """(1 ox g) D(Xi^a ox Xi^b) - d g(Xi^a ox Xi^b): zero for a metric-compatible D."""
    alg = forms()
    pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
    lhs = metric_eval(D_tensor(pair, params))
    return lhs - d_apply(metric_eval(pair), target=alg)


def metric_sigma_symmetry():
    """Classify g against sigma: 'symmetric', 'skew-symmetric' or 'neither'."""
    alg = forms()
    same = opposite = True
    for a, b in product(range(3), repeat=2):
        t = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        g_sigma = metric_eval(sigma_apply(t))
        g_t = metric_eval(t)
        same &= (g_sigma - g_t).is_zero()
        opposite &= (g_sigma + g_t).is_zero()
    return "symmetric" if same else "skew-symmetric" if opposite else "neither"


COMPAT_C1_TABLE = {
    (0, 0): "0",
    (0, 1): "c1*(xi1*x + eta*theta1 - h*xi2*x)",
    (0, 2): "c1*(eta*x - (h/2)*xi2*theta2 + rho)",
    (1, 0): "-c1*(xi1*x + eta*theta1 + h*eta*theta2)",
    (1, 1): "-c1*(2*eta*x - h*xi2*theta2 + 2*rho)",
    (1, 2): "-c1*(eta*theta2 + xi2*x)",
    (2, 0): "-c1*(eta*x - (h/2)*xi2*theta2 + rho)",
    (2, 1): "c1*(eta*theta2 + xi2*x)",
    (2, 2): "0",
}


def _linear_parts(values):
    """Coefficients (A, B) with value = c0*A + c1*B, per (word) across a list of results."""
    rows = []
    for v in values:
        for word, coeff in v.terms.items():
            A = coeff.substitute(c0=1, c1=0)
            B = coeff.substitute(c0=0, c1=1)
            rows.append((word, A, B))
    return rows


def compatibility_verdict(results):
    """Residual of the claim: sum c0 A + c1 B vanishes only for c0 = c1 = 0.

    Passes iff the results vanish at c0 = c1 = 0 and the linear system in
    (c0, c1) has rank two, witnessed by a nonzero 2x2 minor.  Returns
    ``(residual, witness)``; the residual is empty on success.
    """
    problems = []
    for v in results:
        z = v.substitute(c0=0, c1=0)
        if z:
            problems.append(f"nonzero at c0 = c1 = 0: {z}")
    rows = _linear_parts(results)
    witness = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            minor = rows[i][1] * rows[j][2] - rows[j][1] * rows[i][2]
            if minor:
                witness = (rows[i][0], rows[j][0], minor)
                if minor.is_constant():
                    break
        if witness and witness[2].is_constant():
            break
    if witness is None:
        problems.append("the c0 and c1 parts are proportional: a nonzero compatible connection exists")
    return problems, witness


# -- suites -------------------------------------------------------------------


def check_connection(report=None, params=None):
    report = report or Report("connection")
    general = ConnectionParams()
    alg, wedge_alg = forms(), wedge_algebra()
    rho = invariant("rho")
    rho_w = rho.over(wedge_alg)

    for a in range(3):
        xia = alg.gen(XI_NAMES[a])
        expected = -(general.c1 + general.c2) * (rho_w * wedge_alg.gen(XI_NAMES[a]))
        report.add(f"connection.torsion[{XI_NAMES[a]}]", "Theta(Xi^a) = -(c1 + c2) rho /\\ Xi^a", torsion(xia, general) - expected)
        report.add(f"connection.torsionless[{XI_NAMES[a]}]", "Theta(Xi^a) = 0 for c2 = -c1", torsion(xia, ConnectionParams.torsionless()))

    explicit = {
        0: "c0*theta1*rho ox rho + c1*(xi1 ox rho - rho ox xi1)",
        1: "c0*x*rho ox rho - c1*(eta ox rho + rho ox eta)",
        2: "c0*theta2*rho ox rho + c1*(xi2 ox rho - rho ox xi2)",
    }
    tl = ConnectionParams.torsionless()
    for a in range(3):
        report.add(f"connection.D-basis[{XI_NAMES[a]}]", f"D {XI_NAMES[a]} = {explicit[a]}", D_basis(a, tl) - f_text(explicit[a]))

    d_rho = D_apply(rho, tl)
    lam = invariant("Lambda")
    phi = invariant("phi").over(alg)
    expected = lam + (tl.c0 * phi - 2 * tl.c1) * (rho * rho)
    report.add("connection.D-rho", "D rho = Lambda + (c0 phi - 2 c1) rho ox rho", d_rho - expected)
    report.add("connection.pi-D-rho", "pi(D rho) = 0", pi_apply(d_rho))
    report.add("connection.pi-D-rho-general", "pi(D rho) = 0 for unconstrained c2", pi_apply(D_apply(rho, general)))

    # both Leibniz rules define the same D
    for (i, fname), a in product(enumerate(X_NAMES), range(3)):
        f = alg.gen(fname)
        xia = alg.gen(XI_NAMES[a])
        via_left = D_apply(xia * f, general)
        df = d_apply(f, target=alg)
        via_right = _sign(index_parity(a)) * sigma_apply(xia * df) + D_basis(a, general) * f
        report.add(f"connection.leibniz-routes[{XI_NAMES[a]}*{fname}]", "D(Xi f) = (-1)^Xi sigma(Xi ox df) + (D Xi) f", via_left - via_right)

    for (i, fname), a in product(enumerate(X_NAMES), range(3)):
        f = alg.gen(fname)
        xia = alg.gen(XI_NAMES[a])
        fpar = coordinate_parity(i)
        left = torsion(f * xia, general)
        expected = _sign(fpar) * (wedge_alg.gen(fname) * torsion(xia, general))
        report.add(f"connection.torsion-left-linear[{fname}*{XI_NAMES[a]}]", "Theta(f xi) = (-1)^f f Theta(xi)", left - expected)
        right = torsion(xia * f, general)
        report.add(f"connection.torsion-right-linear[{XI_NAMES[a]}*{fname}]", "Theta(xi f) = Theta(xi) f", right - torsion(xia, general) * wedge_alg.gen(fname))

    for (i, fname), a, b in product(enumerate(X_NAMES), range(3), range(3)):
        f = alg.gen(fname)
        pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        lhs = D_tensor(f * pair, general)
        rhs = d_apply(f, target=alg) * pair + _sign(coordinate_parity(i)) * (f * D_tensor(pair, general))
        report.add(
            f"connection.tensor-leibniz[{fname};{XI_NAMES[a]},{XI_NAMES[b]}]",
            "D(f t) = df ox t + (-1)^f f D(t)",
            lhs - rhs,
        )
    zero = ConnectionParams(0, 0, 0)
    for a, b in product(range(3), repeat=2):
        pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        report.add(f"connection.zero-params[{XI_NAMES[a]},{XI_NAMES[b]}]", "D(Xi^a ox Xi^b) = 0 at c = 0", D_tensor(pair, zero))
    return report


def check_curvature(report=None, params=None):
    report = report or Report("curvature")
    p = params or ConnectionParams.torsionless()
    alg = forms()
    values = {a: curvature_basis(a, p) for a in range(3)}
    for a in range(3):
        report.add(
            f"curvature.closed-form[{XI_NAMES[a]}]",
            "pi12 D^2 Xi^a = (c0 - c1^2 + c0 c1 phi) Xi^a /\\ rho ox rho + (c0 (-1)^a X^a rho + c1 Xi^a) /\\ Lambda",
            values[a] - curvature_closed_form(a, p),
        )
        comps = curvature_components(a, p)
        recombined = sum((comps[b].over(alg) * alg.gen(XI_NAMES[b]) for b in range(3)), alg.zero())
        report.add(f"curvature.recombination[{XI_NAMES[a]}]", "pi12 D^2 Xi^a = sum_b w^a_b ox Xi^b", pi12(recombined) - values[a])
        for b in range(3):
            report.add(
                f"curvature.component[{XI_NAMES[a]},{XI_NAMES[b]}]",
                "w^a_b = sum_k J_kb ((-1)^k (c0 (-1)^a X^a Xi^k - (c0 - c1^2 + c0 c1 phi) Xi^a X^k) /\\ rho + c1 Xi^a /\\ Xi^k)",
                comps[b] - components_closed_form(a, b, p),
            )
    phi = invariant("phi").over(alg)
    rho, lam = invariant("rho"), invariant("Lambda")
    varpi = rho * rho
    c0, c1 = p.c0, p.c1
    for a in range(3):
        xa, xia = alg.gen(X_NAMES[a]), alg.gen(XI_NAMES[a])
        sa = _sign(index_parity(a))
        ha = pi12(xia * varpi)
        report.add(
            f"curvature.term-X-varpi[{XI_NAMES[a]}]",
            "pi12 D(X^a rho ox rho) = Xi^a /\\ rho ox rho - (-1)^(X^a) X^a rho /\\ Lambda",
            pi12(D_tensor(xa * varpi, p)) - (ha - _sign(coordinate_parity(a)) * pi12(xa * rho * lam)),
        )
        report.add(
            f"curvature.term-Xi-rho[{XI_NAMES[a]}]",
            "pi12 D((-1)^a Xi^a ox rho) = Xi^a /\\ Lambda + (c0 phi - 2 c1) Xi^a /\\ rho ox rho",
            pi12(D_tensor(sa * (xia * rho), p)) - (pi12(xia * lam) + (c0 * phi - 2 * c1) * ha),
        )
        report.add(
            f"curvature.term-rho-Xi[{XI_NAMES[a]}]",
            "pi12 D(rho ox Xi^a) = -c1 Xi^a /\\ rho ox rho",
            pi12(D_tensor(rho * xia, p)) + c1 * ha,
        )
        expansion = alg.zero()
        from .matrices import build_constant

        J = build_constant("J")
        for b, c in product(range(3), repeat=2):
            v = J.entry(b, c)
            if v:
                expansion = expansion + _sign(coordinate_parity(b)) * v * (xia * alg.gen(X_NAMES[b]) * rho * alg.gen(XI_NAMES[c]))
        report.add(
            f"curvature.varpi-expansion[{XI_NAMES[a]}]",
            "Xi^a /\\ rho ox rho = sum (-1)^(X^b) J_bc Xi^a X^b /\\ rho ox Xi^c",
            ha - pi12(expansion),
        )
    samples = [(n, alg.gen(n)) for n in X_NAMES] + [("phi", phi)]
    for (fname, f), a in product(samples, range(3)):
        xia = alg.gen(XI_NAMES[a])
        report.add(f"curvature.left-linear[{fname}*{XI_NAMES[a]}]", "pi12 D^2(f xi) = f pi12 D^2(xi)", curvature(f * xia, p) - f * values[a])
    for a, b in product(range(3), repeat=2):
        xa = alg.gen(X_NAMES[a])
        xib = alg.gen(XI_NAMES[b])
        lhs = curvature(xib * xa, p)
        rhs = pi12(values[b] * xa)
        report.add(f"curvature.right-linear[{XI_NAMES[b]}*{X_NAMES[a]}]", "pi12 D^2(Xi^b X^a) = (pi12 D^2 Xi^b) X^a", lhs - rhs)
    classical = ConnectionParams.torsionless(c0=0)
    rho, lam = invariant("rho"), invariant("Lambda")
    for a in range(3):
        xia = alg.gen(XI_NAMES[a])
        got = curvature_basis(a, classical).substitute(h=0)
        c1 = classical.c1
        expected = (-(c1 * c1) * pi12(xia * rho * rho) + c1 * pi12(xia * lam)).substitute(h=0)
        report.add(f"curvature.classical-limit[{XI_NAMES[a]}]", "at h = 0, c0 = 0: -c1^2 Xi^a /\\ rho ox rho + c1 Xi^a /\\ Lambda", got - expected)
    report.add("curvature.zero-params", "curvature = 0 at c = 0", curvature_basis(0, ConnectionParams(0, 0, 0)))
    return report


def check_metric(report=None, params=None):
    """Metric values and the compatibility computation.

    With symbolic parameters the suite checks the closed forms and the verdict
    that only c0 = c1 = 0 is compatible.  With pinned parameters it checks
    compatibility itself, pair by pair.
    """
    report = report or Report("metric")
    alg, ss = forms(), superspace()
    g = metric_matrix()
    printed = [["-h/2", "0", "-1"], ["0", "1", "0"], ["1", "0", "0"]]
    from .expr import parse_in
    from .matrices import build_constant

    for a, b in product(range(3), repeat=2):
        pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        report.add(
            f"metric.value[{XI_NAMES[a]},{XI_NAMES[b]}]",
            f"g({XI_NAMES[a]} ox {XI_NAMES[b]}) = {printed[a][b]}",
            metric_eval(pair) - parse_in(printed[a][b], ss),
        )
    J = build_constant("J")
    report.add("metric.inverse-of-J", "J g = 1", [v for _, v in (J @ g - _identity3()).nonzero_entries()])
    det = _det3(g)
    report.add("metric.nondegenerate", "det g is a nonzero constant", ss.scalar(0 if det.is_constant() and det else 1))

    rho = invariant("rho")
    for a in range(3):
        xa = ss.gen(X_NAMES[a])
        xia = alg.gen(XI_NAMES[a])
        report.add(f"metric.g-rho-left[{XI_NAMES[a]}]", "g(rho ox Xi^a) = X^a", metric_eval(rho * xia) - xa)
        report.add(
            f"metric.g-rho-right[{XI_NAMES[a]}]",
            "g(Xi^a ox rho) = (-1)^(X^a) X^a",
            metric_eval(xia * rho) - _sign(coordinate_parity(a)) * xa,
        )
    for a, b in product(range(3), repeat=2):
        pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        report.add(f"metric.d-of-g[{XI_NAMES[a]},{XI_NAMES[b]}]", "d g(Xi^a ox Xi^b) = 0", d_apply(metric_eval(pair), target=alg))

    symbolic = params is None
    p = params or ConnectionParams.torsionless()
    c0_only = ConnectionParams.torsionless(c0=p.c0, c1=0)
    c1_only = ConnectionParams.torsionless(c0=0, c1=p.c1)
    totals = []
    for a, b in product(range(3), repeat=2):
        tag = f"{XI_NAMES[a]},{XI_NAMES[b]}"
        pair = alg.gen(XI_NAMES[a]) * alg.gen(XI_NAMES[b])
        xa, xb = alg.gen(X_NAMES[a]), alg.gen(X_NAMES[b])
        expected_c0 = _sign(coordinate_parity(a)) * 2 * p.c0 * (rho * xa * xb)
        part0 = metric_eval(D_tensor(pair, c0_only))
        part1 = metric_eval(D_tensor(pair, c1_only))
        if symbolic:
            report.add(f"metric.c0-part[{tag}]", "(1 ox g) D(Xi^a ox Xi^b) at c1 = 0: (-1)^(X^a) 2 c0 rho X^a X^b", part0 - expected_c0)
            report.add(f"metric.c1-part[{tag}]", f"(1 ox g) D({XI_NAMES[a]} ox {XI_NAMES[b]}) at c0 = 0: {COMPAT_C1_TABLE[(a, b)]}", part1 - f_text(COMPAT_C1_TABLE[(a, b)]))
            # D on pairs in the split forms
            c0_form = p.c0 * (xa * rho * rho * alg.gen(XI_NAMES[b]) + rho * alg.gen(XI_NAMES[a]) * rho * xb)
            report.add(f"metric.D-pair-c0[{tag}]", "D(Xi^a ox Xi^b) at c1 = 0: c0 (X^a rho ox rho ox Xi^b + rho ox Xi^a ox rho X^b)", D_tensor(pair, c0_only) - c0_form)
            xia, xib = alg.gen(XI_NAMES[a]), alg.gen(XI_NAMES[b])
            c1_form = p.c1 * (
                _sign(index_parity(a)) * (xia * rho * xib)
                - 2 * (rho * xia * xib)
                + _sign(index_parity(a) + index_parity(b)) * sigma_apply(xia * xib * rho, 0)
            )
            report.add(f"metric.D-pair-c1[{tag}]", "D(Xi^a ox Xi^b) at c0 = 0 in three terms", D_tensor(pair, c1_only) - c1_form)
        total = compatibility_defect(a, b, p)
        report.add(f"metric.linear-split[{tag}]", "(1 ox g) D = c0 part + c1 part", total - (part0 + part1))
        totals.append(total)
        if not symbolic:
            report.add(f"metric.compatible[{tag}]", "d g = (1 ox g) D", total)
    if symbolic:
        problems, witness = compatibility_verdict(totals)
        report.add("metric.verdict", "(1 ox g) D != d g unless c0 = c1 = 0", problems)
        if witness:
            w1, w2, minor = witness
            report.notes.append(f"compatibility rank witness: words {'*'.join(w1)} and {'*'.join(w2)}, minor {minor}")
    report.notes.append(f"sigma-symmetry of g: {metric_sigma_symmetry()}")
    return report


def _identity3():
    from .matrices import GradedMatrix

    return GradedMatrix.identity(3)


def _det3(m):
    e = m.entry
    return (
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    )


__all__ = [
    "ConnectionParams",
    "D_apply",
    "D_basis",
    "D_tensor",
    "torsion",
    "curvature",
    "curvature_basis",
    "curvature_components",
    "metric_eval",
    "compatibility_defect",
    "metric_sigma_symmetry",
    "check_connection",
    "check_curvature",
    "check_metric",
    "FORM_LETTERS",
]
