"""Constant and supergroup matrices and the identities relating them.

Pair indices (i, j) with i, j in {0, 1, 2} flatten to ``3*i + j``; a 9x9
matrix entry ``M[3*i + j][3*k + l]`` is written ``M^{ij}_{kl}``: upper
indices label the row, lower ones the column.  Index parity is 1 for the
middle index only.
"""

from functools import cache
from itertools import product

from .algebra import AlgebraElement
from .coefficients import Poly, h
from .presentations import (
    MACROS,
    T_ENTRIES,
    Report,
    group,
    index_parity,
)

PAIR_PARITY = [index_parity(i) for i in range(3)]

_H2 = h * h / 2

# printed row by row, "." is zero
_R_ROWS = [
    [1, 0, -h, 0, h, 0, h, 0, _H2],
    [0, 1, 0, 0, 0, -h, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, -h],
    [0, 0, 0, 1, 0, 0, 0, h, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, -h],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, h],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]

_B_ROWS = [
    [-1, 0, -h, 0, -h, 0, h, 0, -_H2],
    [0, 1, 0, 0, 0, -h, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, -h],
    [0, 0, 0, 1, 0, 0, 0, h, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, -h],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, h],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1],
]

_J_ROWS = [[0, 0, 1], [0, 1, 0], [-1, 0, -h / 2]]
_JINV_ROWS = [[-h / 2, 0, -1], [0, 1, 0], [1, 0, 0]]

# antipode, printed row by row
_ST_ROWS = [
    ["d + (h/2)*c", "-beta - (h/2)*gamma", "-b - (h/2)*(a - d) + (h^2/4)*c"],
    ["delta", "e", "-alpha + (h/2)*delta"],
    ["-c", "gamma", "a - (h/2)*c"],
]


def _zero_like(value):
    if isinstance(value, AlgebraElement):
        return value.algebra.zero()
    return Poly()


def _is_zero(value):
    return value.is_zero() if isinstance(value, (Poly, AlgebraElement)) else value == 0


class GradedMatrix:
    """A matrix of Polys or algebra elements with a parity for each row and column index."""

    def __init__(self, rows, row_parity=None, col_parity=None):
        self.rows = [list(r) for r in rows]
        n, m = len(self.rows), len(self.rows[0])
        if any(len(r) != m for r in self.rows):
            raise ValueError("ragged matrix")
        self.row_parity = list(row_parity) if row_parity is not None else _default_parity(n)
        self.col_parity = list(col_parity) if col_parity is not None else _default_parity(m)
        if len(self.row_parity) != n or len(self.col_parity) != m:
            raise ValueError("index parity length does not match the matrix shape")

    @classmethod
    def from_poly_rows(cls, rows, **kw):
        return cls([[Poly.coerce(v) for v in r] for r in rows], **kw)

    @classmethod
    def identity(cls, n, parity=None):
        return cls([[Poly.const(1 if i == j else 0) for j in range(n)] for i in range(n)], parity, parity)

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    @property
    def dim(self):
        n, m = self.shape
        if n != m:
            raise ValueError("matrix is not square")
        return n

    @property
    def index_parity(self):
        return self.row_parity

    def entry(self, i, j):
        return self.rows[i][j]

    def scalar(self, i, j, k, l):
        """The entry ``M^{ij}_{kl}`` of a 9x9 matrix on pairs."""
        return self.rows[3 * i + j][3 * k + l]

    def __matmul__(self, other):
        return gmat_mul(self, other)

    def __sub__(self, other):
        return GradedMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.row_parity,
            self.col_parity,
        )

    def map(self, fn):
        return GradedMatrix([[fn(v) for v in r] for r in self.rows], self.row_parity, self.col_parity)

    def substitute(self, **kw):
        return self.map(lambda v: v.substitute(**kw))

    def is_zero(self):
        return all(_is_zero(v) for r in self.rows for v in r)

    def nonzero_entries(self):
        return [((i, j), v) for i, r in enumerate(self.rows) for j, v in enumerate(r) if not _is_zero(v)]

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    def __repr__(self):
        n, m = self.shape
        return f"<GradedMatrix {n}x{m}, {len(self.nonzero_entries())} nonzero entries>"


def _default_parity(n):
    if n == 3:
        return list(PAIR_PARITY)
    if n == 9:
        return [(PAIR_PARITY[i] + PAIR_PARITY[j]) % 2 for i in range(3) for j in range(3)]
    return [0] * n


def gmat_mul(M, N):
    """Plain matrix product; grading signs live in the identities themselves."""
    n, m = M.shape
    m2, p = N.shape
    if m != m2:
        raise ValueError(f"dimension mismatch: {n}x{m} times {m2}x{p}")
    rows = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a, b = M.rows[i][k], N.rows[k][j]
                if _is_zero(a) or _is_zero(b):
                    continue
                term = a * b
                acc = term if acc is None else acc + term
            if acc is None:
                acc = _zero_like(M.rows[i][0]) if isinstance(M.rows[i][0], AlgebraElement) else _zero_like(N.rows[0][j])
            row.append(acc)
        rows.append(row)
    return GradedMatrix(rows, M.row_parity, N.col_parity)


def supertranspose(M):
    """``(M^st)^i_j = (-1)^(i(i+j)) M^j_i`` with i the row parity of the result."""
    n, m = M.shape
    rp, cp = M.col_parity, M.row_parity
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            v = M.rows[j][i]
            row.append(-v if (rp[i] * (rp[i] + cp[j])) % 2 else v)
        rows.append(row)
    return GradedMatrix(rows, rp, cp)


def _solve_upper_triangular_inverse(M):
    # exact inverse of a triangular matrix with unit (rational) diagonal
    n = M.dim
    rows = M.rows
    for i in range(n):
        for j in range(i):
            if not rows[i][j].is_zero():
                raise ValueError("matrix is not upper triangular")
        if not rows[i][i].is_constant() or rows[i][i].is_zero():
            raise ValueError("diagonal entry is not a nonzero rational")
    inv = [[Poly() for _ in range(n)] for _ in range(n)]
    for col in range(n):
        for i in reversed(range(n)):
            acc = Poly.const(1 if i == col else 0)
            for k in range(i + 1, n):
                if not rows[i][k].is_zero():
                    acc = acc - rows[i][k] * inv[k][col]
            inv[i][col] = acc / rows[i][i].constant_value()
    return GradedMatrix(inv, M.row_parity, M.col_parity)


def r_matrix(hval=None):
    M = GradedMatrix.from_poly_rows(_R_ROWS)
    return M if hval is None else M.substitute(h=hval)


def b_matrix(hval=None):
    M = GradedMatrix.from_poly_rows(_B_ROWS)
    return M if hval is None else M.substitute(h=hval)


def _rcheck():
    R = r_matrix()
    rows = [[Poly() for _ in range(9)] for _ in range(9)]
    p = PAIR_PARITY
    for k, l, i, j in product(range(3), repeat=4):
        v = R.scalar(l, k, i, j)
        rows[3 * k + l][3 * i + j] = -v if p[i] * p[j] else v
    return GradedMatrix(rows)


def build_constant(name):
    """One of R, B, Binv, J, Jinv, Rcheck (Poly entries) or T, ST, tau (group entries)."""
    if name in ("T", "ST", "tau"):
        return group_matrix(name, group())
    return _numeric_constant(name)


@cache
def _numeric_constant(name):
    if name == "R":
        return r_matrix()
    if name == "B":
        return b_matrix()
    if name == "Binv":
        return _solve_upper_triangular_inverse(b_matrix())
    if name == "J":
        return GradedMatrix.from_poly_rows(_J_ROWS)
    if name == "Jinv":
        return GradedMatrix.from_poly_rows(_JINV_ROWS)
    if name == "Rcheck":
        return _rcheck()
    raise KeyError(f"unknown constant {name!r}")


@cache
def group_matrix(name, algebra):
    """T, its printed antipode S(T), or tau = J T J^-1, over an algebra with group letters."""
    from .expr import parse_in

    if name == "T":
        return GradedMatrix([[parse_in(s, algebra, MACROS) for s in row] for row in T_ENTRIES])
    if name == "ST":
        return GradedMatrix([[parse_in(s, algebra, MACROS) for s in row] for row in _ST_ROWS])
    if name == "tau":
        return build_constant("J") @ group_matrix("T", algebra) @ build_constant("Jinv")
    raise KeyError(f"unknown group matrix {name!r}")


def embed(M, positions):
    """A 9x9 matrix on pairs acting on slots ``positions`` of a triple tensor (27x27)."""
    a, b = positions
    rows = [[Poly() for _ in range(27)] for _ in range(27)]
    for out in product(range(3), repeat=3):
        for inn in product(range(3), repeat=3):
            rest = [s for s in range(3) if s not in positions][0]
            if out[rest] != inn[rest]:
                continue
            v = M.scalar(out[a], out[b], inn[a], inn[b])
            if v:
                rows[9 * out[0] + 3 * out[1] + out[2]][9 * inn[0] + 3 * inn[1] + inn[2]] = v
    return GradedMatrix(rows)


def _sign(e):
    return -1 if e % 2 else 1


def rtt_residuals(algebra=None):
    """All 81 components of the graded RTT relation, as a dict keyed by (k, l, i, j)."""
    algebra = algebra or group()
    R = build_constant("R")
    T = group_matrix("T", algebra)
    p = PAIR_PARITY
    out = {}
    for k, l, i, j in product(range(3), repeat=4):
        lhs = algebra.zero()
        rhs = algebra.zero()
        for x, y in product(range(3), repeat=2):
            r1 = R.scalar(k, l, x, y)
            if r1:
                lhs = lhs + _sign(p[y] * (p[x] + p[i])) * r1 * (T.entry(x, i) * T.entry(y, j))
            r2 = R.scalar(x, y, i, j)
            if r2:
                rhs = rhs + _sign(p[y] * (p[k] + p[x])) * r2 * (T.entry(l, y) * T.entry(k, x))
        out[(k, l, i, j)] = lhs - rhs
    return out


def rtt_b_residuals(which, algebra=None):
    """Components of the four exchange relations of t and tau with B (``which`` in 1..4)."""
    algebra = algebra or group()
    B = build_constant("B")
    Bi = build_constant("Binv")
    t = group_matrix("T", algebra).entry
    tau = group_matrix("tau", algebra).entry
    p = PAIR_PARITY
    out = {}
    for a, b, c, d in product(range(3), repeat=4):
        lhs = algebra.zero()
        rhs = algebra.zero()
        for i, j in product(range(3), repeat=2):
            if which == 1:
                v = B.scalar(i, j, c, d)
                if v:
                    lhs += _sign(p[b] + p[j] + p[i] * p[j] + p[b] * p[i]) * v * (t(a, i) * t(b, j))
                v = B.scalar(a, b, i, j)
                if v:
                    rhs += _sign(p[c] + p[i] + p[c] * p[d] + p[d] * p[i]) * v * (t(j, d) * t(i, c))
            elif which == 2:
                v = B.scalar(c, d, i, j)
                if v:
                    lhs += _sign(p[i] + p[a] + p[i] * p[j] + p[i] * p[b]) * v * (tau(a, i) * tau(b, j))
                v = B.scalar(i, j, a, b)
                if v:
                    rhs += _sign(p[d] + p[j] + p[d] * p[i] + p[c] * p[d]) * v * (tau(j, d) * tau(i, c))
            elif which == 3:
                v = B.scalar(j, d, c, i)
                if v:
                    lhs += _sign(p[i] + p[b] * p[i] + p[c] * p[i] + p[d] * p[j]) * v * (tau(a, i) * t(b, j))
                v = B.scalar(b, i, j, a)
                if v:
                    rhs += _sign(p[c] + p[i] + p[j] + p[i] * p[c]) * v * (t(j, c) * tau(i, d))
            elif which == 4:
                v = Bi.scalar(i, b, a, j)
                if v:
                    lhs += _sign(p[c] + p[i] + p[j] + p[c] * p[i]) * v * (t(j, c) * tau(i, d))
                v = Bi.scalar(d, j, i, c)
                if v:
                    rhs += _sign(p[i] + p[b] * p[i] + p[c] * p[i] + p[j] * p[d]) * v * (tau(a, i) * t(b, j))
            else:
                raise ValueError("which must be 1, 2, 3 or 4")
        out[(a, b, c, d)] = lhs - rhs
    return out


def _tag(*idx):
    return "".join(str(i + 1) for i in idx)


def check_matrix_identities(report=None):
    report = report or Report("matrices")
    p = PAIR_PARITY
    R, Rm = r_matrix(), r_matrix(-h)
    I9 = GradedMatrix.identity(9)
    I3 = GradedMatrix.identity(3)
    report.add("matrices.R-inverse", "R(h) R(-h) = 1", (R @ Rm - I9).nonzero_entries())

    B = build_constant("B")
    B12, B13, B23 = embed(B, (0, 1)), embed(B, (0, 2)), embed(B, (1, 2))
    report.add("matrices.B-yang-baxter", "B12 B13 B23 = B23 B13 B12", ((B12 @ B13 @ B23) - (B23 @ B13 @ B12)).nonzero_entries())

    Rc = build_constant("Rcheck")
    report.add("matrices.Rcheck-involution", "Rcheck^2 = 1", (Rc @ Rc - I9).nonzero_entries())
    Rc12, Rc23 = embed(Rc, (0, 1)), embed(Rc, (1, 2))
    report.add("matrices.Rcheck-braid", "Rcheck12 Rcheck23 Rcheck12 = Rcheck23 Rcheck12 Rcheck23", ((Rc12 @ Rc23 @ Rc12) - (Rc23 @ Rc12 @ Rc23)).nonzero_entries())

    Binv = build_constant("Binv")
    Bm = b_matrix(-h)
    report.add("matrices.B-inverse", "B Binv = 1", (B @ Binv - I9).nonzero_entries())
    for k, l, x, y in product(range(3), repeat=4):
        tag = _tag(k, l, x, y)
        r = R.scalar(k, l, x, y)
        via_inv = _sign(1 + p[k] + (1 + p[x]) * p[y]) * Binv.scalar(k, l, x, y)
        via_minus = _sign(1 + p[k] + p[y] + p[k] * p[l]) * Bm.scalar(k, l, x, y)
        report.add(f"matrices.R-from-Binv[{tag}]", "R^{kl}_{xy} = (-1)^(1+k+(1+x)y) (B^-1)^{kl}_{xy}", r - via_inv)
        report.add(f"matrices.R-from-B(-h)[{tag}]", "R^{kl}_{xy} = (-1)^(1+k+y+kl) B(-h)^{kl}_{xy}", r - via_minus)
        report.add(
            f"matrices.Binv-sign[{tag}]",
            "(B^-1)^{kl}_{xy} = (-1)^(kl+xy) B(-h)^{kl}_{xy}",
            Binv.scalar(k, l, x, y) - _sign(p[k] * p[l] + p[x] * p[y]) * Bm.scalar(k, l, x, y),
        )

    J, Jinv = build_constant("J"), build_constant("Jinv")
    for a, b in product(range(3), repeat=2):
        v = J.entry(a, b)
        report.add(f"matrices.J-parity[{_tag(a, b)}]", "(-1)^(a+b) J_ab = J_ab", _sign(p[a] + p[b]) * v - v)
    report.add("matrices.J-inverse", "J Jinv = 1", (J @ Jinv - I3).nonzero_entries())

    grp = group()
    T = group_matrix("T", grp)
    Tst = supertranspose(T)
    one = GradedMatrix([[grp.scalar(1 if i == j else 0) for j in range(3)] for i in range(3)])
    osym1 = Tst @ J @ T - J.map(grp.scalar)
    osym2 = T @ Jinv @ Tst - Jinv.map(grp.scalar)
    for a, b in product(range(3), repeat=2):
        report.add(f"supergroup.orthosymplectic-1[{_tag(a, b)}]", "T^st J T = J", osym1.entry(a, b))
        report.add(f"supergroup.orthosymplectic-2[{_tag(a, b)}]", "T J^-1 T^st = J^-1", osym2.entry(a, b))

    for key, res in rtt_residuals(grp).items():
        report.add(f"supergroup.RTT[{_tag(*key)}]", "graded RTT relation", res)

    S = group_matrix("ST", grp)
    S_formula = Jinv @ Tst @ J
    for a, b in product(range(3), repeat=2):
        report.add(f"supergroup.antipode-formula[{_tag(a, b)}]", "S(T) = J^-1 T^st J", (S - S_formula).entry(a, b))
    left, right = T @ S - one, S @ T - one
    for a, b in product(range(3), repeat=2):
        report.add(f"supergroup.antipode-left[{_tag(a, b)}]", "T S(T) = 1", left.entry(a, b))
        report.add(f"supergroup.antipode-right[{_tag(a, b)}]", "S(T) T = 1", right.entry(a, b))

    tau = group_matrix("tau", grp)
    tl, tr = tau @ Tst - one, Tst @ tau - one
    for a, b in product(range(3), repeat=2):
        report.add(f"supergroup.tau-left[{_tag(a, b)}]", "tau T^st = 1", tl.entry(a, b))
        report.add(f"supergroup.tau-right[{_tag(a, b)}]", "T^st tau = 1", tr.entry(a, b))

    # supertranspose properties
    Tstst = supertranspose(Tst)
    for a, b in product(range(3), repeat=2):
        report.add(
            f"supertranspose.double[{_tag(a, b)}]",
            "((A^st)^st)^i_j = (-1)^(i+j) A^i_j",
            Tstst.entry(a, b) - _sign(p[a] + p[b]) * T.entry(a, b),
        )
    report.add("supertranspose.identity", "1^st = 1", (supertranspose(I3) - I3).nonzero_entries())
    report.add("supertranspose.product", "(J Jinv')^st = Jinv'^st J^st", (supertranspose(J @ Jinv.substitute(h=2 * h)) - supertranspose(Jinv.substitute(h=2 * h)) @ supertranspose(J)).nonzero_entries())
    from .presentations import superspace, X_NAMES

    ss = superspace()
    X = GradedMatrix([[ss.gen(n)] for n in X_NAMES], col_parity=[1])
    Xst = supertranspose(X)
    expected = [-ss.gen("theta1"), ss.gen("x"), -ss.gen("theta2")]
    report.add("supertranspose.column", "X^st = (-theta1, x, -theta2)", [Xst.entry(0, i) - expected[i] for i in range(3)])
    phi = (Xst @ J.map(ss.scalar) @ X).entry(0, 0)
    from .expr import parse_in

    report.add("superspace.phi", "X^st J X = x^2 - 2 theta1 theta2", phi - parse_in("phi", ss, MACROS))
    return report


def check_rtt_b(report=None):
    report = report or Report("covariance")
    grp = group()
    for which in (1, 2, 3, 4):
        for key, res in rtt_b_residuals(which, grp).items():
            report.add(f"covariance.RTT{which}[{_tag(*key)}]", f"exchange relation {which} of t, tau with B", res)
    return report
