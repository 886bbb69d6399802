"""Exact linear algebra over Z and Q.

Every scalar in this package is either an arbitrary-precision integer or a
`fractions.Fraction`.  The real numbers are modelled by Q throughout: all
maps we verify have rational structure constants in the piecewise-linear
model, so each identity holds over R if and only if it holds over Q, and
over Q it can be checked exactly.  `Rational` is an alias for `Fraction`.

The module provides Smith normal form with unimodular transforms (and
their inverses), integer and rational linear solvers, and decision
procedures for subgroups of Q^n that mix a lattice part (integer spans)
with a vector-space part (rational spans).  Membership answers always come
with a witness or a certificate that re-verifies independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


# ---------------------------------------------------------------------------
# small vector helpers (entries int or Fraction)

def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(s, u):
    return [s * a for a in u]


def vec_dot(u, v):
    if len(u) != len(v):
        raise ValueError("dot product of vectors of different lengths")
    acc = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def vec_is_zero(u):
    return all(a == 0 for a in u)


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


class Matrix:
    """Dense matrix with an explicit shape, so 0 x n and m x 0 stay distinct.

    Entries are ints or Fractions; the normal-form routines require ints.
    Instances are immutable (data is a tuple of row tuples).
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        data = tuple(tuple(row) for row in data)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError("matrix data does not match shape %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows, *, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer width of an empty row list")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, *, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("cannot infer height of an empty column list")
            rows = len(columns[0])
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(rows, len(columns), data)

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("matrix shapes do not compose")
        out = []
        for i in range(self.rows):
            row = self.data[i]
            out.append([sum(row[t] * other.data[t][j] for t in range(self.cols))
                        for j in range(other.cols)])
        return Matrix(self.rows, other.cols, out)

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix width")
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return out

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def is_integral(self):
        return all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
                   for row in self.data for x in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return "Matrix(%d, %d, %r)" % (self.rows, self.cols, [list(r) for r in self.data])


def det_bareiss(m):
    """Exact determinant of a square integer matrix (fraction-free)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithForm:
    """u * m * v == d with u, v unimodular and d diagonal, d_1 | d_2 | ..."""

    u: Matrix
    d: Matrix
    v: Matrix
    u_inv: Matrix
    v_inv: Matrix

    @property
    def rank(self):
        return sum(1 for x in self.diagonal if x != 0)

    @property
    def diagonal(self):
        n = min(self.d.rows, self.d.cols)
        return [self.d.data[i][i] for i in range(n)]


def smith_form(m):
    """Full Smith decomposition of an integer matrix."""
    r, c = m.rows, m.cols
    a = [list(row) for row in m.data]
    for row in a:
        for x in row:
            if not isinstance(x, int):
                raise ValueError("smith_form requires integer entries")
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    uinv = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    vinv = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def row_swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for t in range(r):
            uinv[t][i], uinv[t][j] = uinv[t][j], uinv[t][i]

    def col_swap(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for t in range(r):
            uinv[t][i] = -uinv[t][i]

    def row_add(i, j, q):
        # row_i += q * row_j
        ai, aj = a[i], a[j]
        for t in range(c):
            ai[t] += q * aj[t]
        ui, uj = u[i], u[j]
        for t in range(r):
            ui[t] += q * uj[t]
        for t in range(r):
            uinv[t][j] -= q * uinv[t][i]

    def col_add(i, j, q):
        # col_i += q * col_j
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]
        vj, vi = vinv[j], vinv[i]
        for t in range(c):
            vj[t] -= q * vi[t]

    def row_gcd(i, j, col):
        # combine rows i and j so a[i][col] = gcd, a[j][col] = 0
        p, q0 = a[i][col], a[j][col]
        if q0 == 0:
            return
        if p == 0:
            row_swap(i, j)
            return
        if q0 % p == 0:
            # plain subtraction keeps the pivot row intact (avoids the
            # xgcd branch swapping it with a dirty row and cycling)
            row_add(j, i, -(q0 // p))
            return
        g, x, y = xgcd(p, q0)
        pp, qq = p // g, q0 // g
        for rows in (a, u):
            ri, rj = rows[i], rows[j]
            for t in range(len(ri)):
                s, w = ri[t], rj[t]
                ri[t] = x * s + y * w
                rj[t] = pp * w - qq * s
        for t in range(r):
            s, w = uinv[t][i], uinv[t][j]
            uinv[t][i] = pp * s + qq * w
            uinv[t][j] = x * w - y * s

    def col_gcd(i, j, row):
        # combine cols i and j so a[row][i] = gcd, a[row][j] = 0
        p, q0 = a[row][i], a[row][j]
        if q0 == 0:
            return
        if p == 0:
            col_swap(i, j)
            return
        if q0 % p == 0:
            col_add(j, i, -(q0 // p))
            return
        g, x, y = xgcd(p, q0)
        pp, qq = p // g, q0 // g
        for rows in (a, v):
            for rr in rows:
                s, w = rr[i], rr[j]
                rr[i] = x * s + y * w
                rr[j] = pp * w - qq * s
        ri, rj = vinv[i], vinv[j]
        for t in range(c):
            s, w = ri[t], rj[t]
            ri[t] = pp * s + qq * w
            rj[t] = x * w - y * s

    n = min(r, c)
    for t in range(n):
        # pick the nonzero entry of smallest magnitude as pivot
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    piv, best = (i, j), abs(x)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            for i in range(t + 1, r):
                if a[i][t] != 0:
                    row_gcd(t, i, t)
            if all(a[t][j] == 0 for j in range(t + 1, c)):
                break
            for j in range(t + 1, c):
                if a[t][j] != 0:
                    col_gcd(t, j, t)
            if all(a[i][t] == 0 for i in range(t + 1, r)):
                break

    for i in range(n):
        if a[i][i] < 0:
            row_neg(i)

    # enforce the divisibility chain d_1 | d_2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di == 0 and dj != 0:
                row_swap(i, i + 1)
                col_swap(i, i + 1)
                changed = True
            elif di != 0 and dj % di != 0:
                col_add(i, i + 1, 1)
                row_gcd(i, i + 1, i)
                q = a[i][i + 1] // a[i][i]
                col_add(i + 1, i, -q)
                if a[i][i] < 0:
                    row_neg(i)
                if a[i + 1][i + 1] < 0:
                    row_neg(i + 1)
                changed = True

    return SmithForm(
        u=Matrix(r, r, u),
        d=Matrix(r, c, a),
        v=Matrix(c, c, v),
        u_inv=Matrix(r, r, uinv),
        v_inv=Matrix(c, c, vinv),
    )


def snf(m):
    """Smith normal form: returns (u, d, v) with u*m*v == d diagonal."""
    f = smith_form(m)
    return f.u, f.d, f.v


def kernel_basis(m):
    """Z-basis of the integer kernel {x : m*x == 0}, as column vectors."""
    f = smith_form(m)
    n = min(m.rows, m.cols)
    out = []
    for j in range(m.cols):
        if j >= n or f.d.data[j][j] == 0:
            out.append(f.v.column(j))
    return out


def column_lattice_basis(m):
    """Z-basis of the lattice spanned by the columns of an integer matrix."""
    f = smith_form(m)
    n = min(m.rows, m.cols)
    out = []
    for j in range(n):
        dj = f.d.data[j][j]
        if dj != 0:
            out.append(vec_scale(dj, f.u_inv.column(j)))
    return out


def hnf_solve(a, b):
    """Solve a*x == b over the integers; returns x or None when unsolvable.

    The normal-form route is Smith reduction: a = u_inv d v_inv, so the
    system splits into one divisibility condition per invariant factor.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match")
    f = smith_form(a)
    w = f.u.mul_vec(b)
    n = min(a.rows, a.cols)
    y = [0] * a.cols
    for i in range(a.rows):
        d = f.d.data[i][i] if i < n else 0
        if d == 0:
            if w[i] != 0:
                return None
        else:
            if w[i] % d != 0:
                return None
            y[i] = w[i] // d
    return f.v.mul_vec(y)


# ---------------------------------------------------------------------------
# rational elimination

def _eliminate(a, b=None):
    """Row-reduce a copy of `a` (list of Fraction rows); returns
    (reduced rows, reduced rhs, pivot column list)."""
    rows = [[Fraction(x) for x in row] for row in a.data]
    rhs = [Fraction(x) for x in b] if b is not None else None
    ncols = a.cols
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, len(rows)):
            if rows[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        if rhs is not None:
            rhs[pr], rhs[pivot_row] = rhs[pivot_row], rhs[pr]
        inv = 1 / rows[pr][pc]
        rows[pr] = [x * inv for x in rows[pr]]
        if rhs is not None:
            rhs[pr] *= inv
        for i in range(len(rows)):
            if i != pr and rows[i][pc] != 0:
                f = rows[i][pc]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
                if rhs is not None:
                    rhs[i] -= f * rhs[pr]
        pivots.append(pc)
        pr += 1
        if pr == len(rows):
            break
    return rows, rhs, pivots


def rational_rank(a):
    _, _, pivots = _eliminate(a)
    return len(pivots)


def rational_solve(a, b):
    """Exact solution of a*x == b over Q, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic in the
    elimination order.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match")
    rows, rhs, pivots = _eliminate(a, b)
    for i in range(len(pivots), len(rows)):
        if rhs[i] != 0:
            return None
    x = [Fraction(0)] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = rhs[i] - sum(rows[i][j] * x[j] for j in range(pc + 1, a.cols)
                             if rows[i][j] != 0)
    # rows are fully reduced, so a single pass suffices; verify to be safe
    check = a.mul_vec(x)
    if any(Fraction(ci) != Fraction(bi) for ci, bi in zip(check, b)):
        # re-substitute for non-reduced corner cases (should not happen)
        return None
    return x


def rational_kernel(a):
    """Basis of the rational nullspace {x : a*x == 0}, as column vectors."""
    rows, _, pivots = _eliminate(a)
    free = [j for j in range(a.cols) if j not in pivots]
    basis = []
    for fj in free:
        x = [Fraction(0)] * a.cols
        x[fj] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -rows[i][fj]
        basis.append(x)
    return basis


# ---------------------------------------------------------------------------
# finitely generated abelian groups

@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank plus cyclic factors Z/d_1 + ... with d_1 | d_2 | ..., d_i >= 2."""

    rank: int
    torsion_factors: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        object.__setattr__(self, "torsion_factors", tuple(self.torsion_factors))
        prev = None
        for d in self.torsion_factors:
            if d < 2:
                raise ValueError("torsion factor %r is not >= 2" % (d,))
            if prev is not None and d % prev != 0:
                raise ValueError("torsion factors do not form a divisibility chain")
            prev = d

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion_factors

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z/%d" % d for d in self.torsion_factors)
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# mixed subgroups of Q^n

@dataclass(frozen=True)
class MixedSubgroup:
    """Subgroup of Q^n of the form  Z-span(lattice_gens) + Q-span(space_gens)."""

    ambient_dim: int
    lattice_gens: tuple = ()
    space_gens: tuple = ()

    def __post_init__(self):
        lat = []
        for g in self.lattice_gens:
            g = [int(x) for x in g]
            if len(g) != self.ambient_dim:
                raise ValueError("lattice generator of wrong length")
            lat.append(tuple(g))
        sp = []
        for g in self.space_gens:
            g = [Fraction(x) for x in g]
            if len(g) != self.ambient_dim:
                raise ValueError("space generator of wrong length")
            sp.append(tuple(g))
        object.__setattr__(self, "lattice_gens", tuple(lat))
        object.__setattr__(self, "space_gens", tuple(sp))


@dataclass(frozen=True)
class MixedWitness:
    """x == sum z_i * lattice_gens_i + sum q_j * space_gens_j, exactly."""

    lattice_coeffs: tuple
    space_coeffs: tuple


@dataclass(frozen=True)
class NonMembership:
    """Certificate that x is not in the subgroup.

    `functional` is an integer functional phi with phi(space gen) == 0 for
    every space generator and phi(lattice gen) in modulus*Z for every
    lattice generator; `value` = phi(x) is not in modulus*Z.  A modulus of
    zero means phi vanishes identically on the subgroup while phi(x) != 0.
    """

    functional: tuple
    modulus: int
    value: Fraction


class MixedSolver:
    """Reusable decision procedure for one MixedSubgroup.

    Builds the projection that kills the space part and the Smith form of
    the projected lattice once, then answers membership queries cheaply.
    """

    def __init__(self, subgroup):
        self.subgroup = subgroup
        n = subgroup.ambient_dim
        if subgroup.space_gens:
            space_mat = Matrix.from_rows(subgroup.space_gens, cols=n)
            raw = rational_kernel(space_mat)
            # clear denominators so the projected system is integral
            proj = []
            for phi in raw:
                mult = 1
                for x in phi:
                    mult = mult * x.denominator // _gcd_int(mult, x.denominator)
                proj.append([int(x * mult) for x in phi])
            self.proj = proj
            self._identity_proj = False
        else:
            self.proj = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
            self._identity_proj = True
        b = [[_int_dot(phi, g) for g in subgroup.lattice_gens] for phi in self.proj]
        self.bmat = Matrix(len(self.proj), len(subgroup.lattice_gens), b)
        self.smith = smith_form(self.bmat)
        self._space_mat = (Matrix.from_columns(subgroup.space_gens, rows=n)
                           if subgroup.space_gens else None)

    def membership(self, x):
        s = self.subgroup
        n = s.ambient_dim
        if len(x) != n:
            raise ValueError("vector length does not match ambient dimension")
        x = [Fraction(v) for v in x]
        if self._identity_proj:
            y = list(x)
        else:
            y = [vec_dot(phi, x) for phi in self.proj]
        f = self.smith
        w = f.u.mul_vec(y)
        nn = min(self.bmat.rows, self.bmat.cols)
        z = [0] * self.bmat.cols
        for i in range(self.bmat.rows):
            d = f.d.data[i][i] if i < nn else 0
            if d == 0:
                if w[i] != 0:
                    return self._certificate(i, 0, w[i])
            else:
                if w[i].denominator != 1 or w[i] % d != 0:
                    return self._certificate(i, d, w[i])
                z[i] = int(w[i]) // d
        zz = f.v.mul_vec(z)
        residue = list(x)
        for coeff, gen in zip(zz, s.lattice_gens):
            if coeff:
                residue = [r - coeff * g for r, g in zip(residue, gen)]
        if s.space_gens:
            q = rational_solve(self._space_mat, residue)
            if q is None:
                raise ArithmeticError("projection residue left the space span")
        else:
            q = []
            if not vec_is_zero(residue):
                raise ArithmeticError("nonzero residue with no space part")
        return MixedWitness(tuple(zz), tuple(Fraction(t) for t in q))

    def _certificate(self, i, modulus, value):
        phi = [0] * self.subgroup.ambient_dim
        for t, row_phi in enumerate(self.proj):
            coeff = self.smith.u.data[i][t]
            if coeff:
                for j in range(len(phi)):
                    phi[j] += coeff * row_phi[j]
        return NonMembership(tuple(phi), modulus, Fraction(value))


def _gcd_int(a, b):
    g, _, _ = xgcd(a, b)
    return g if g else 1


def _int_dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mixed_membership(x, subgroup):
    """Decide x in subgroup; returns a MixedWitness or a NonMembership."""
    return MixedSolver(subgroup).membership(x)


def verify_witness(x, subgroup, witness):
    """Re-check a membership witness by direct expansion."""
    n = subgroup.ambient_dim
    acc = [Fraction(0)] * n
    for z, g in zip(witness.lattice_coeffs, subgroup.lattice_gens):
        acc = [a + z * gi for a, gi in zip(acc, g)]
    for q, g in zip(witness.space_coeffs, subgroup.space_gens):
        acc = [a + q * gi for a, gi in zip(acc, g)]
    return all(Fraction(xi) == ai for xi, ai in zip(x, acc))


def verify_non_membership(x, subgroup, cert):
    """Re-check a non-membership certificate by direct evaluation."""
    phi = cert.functional
    for g in subgroup.space_gens:
        if vec_dot(phi, g) != 0:
            return False
    for g in subgroup.lattice_gens:
        val = vec_dot(phi, g)
        if cert.modulus == 0:
            if val != 0:
                return False
        else:
            if val.denominator != 1 or val % cert.modulus != 0:
                return False
    val = vec_dot(phi, [Fraction(v) for v in x])
    if cert.modulus == 0:
        return val != 0
    return val.denominator != 1 or val % cert.modulus != 0


def quotient_group(z_group, b_group):
    """Invariant factors of Z/B for two pure lattices B <= Z inside Q^n."""
    if z_group.space_gens or b_group.space_gens:
        raise ValueError("quotient_group requires pure lattice subgroups")
    if z_group.ambient_dim != b_group.ambient_dim:
        raise ValueError("ambient dimensions differ")
    solver = MixedSolver(z_group)
    for g in b_group.lattice_gens:
        res = solver.membership(list(g))
        if isinstance(res, NonMembership):
            raise ValueError("denominator subgroup is not contained in the numerator")
    if not z_group.lattice_gens:
        return FgAbelianGroup(0)
    basis = column_lattice_basis(
        Matrix.from_columns(z_group.lattice_gens, rows=z_group.ambient_dim))
    if not basis:
        return FgAbelianGroup(0)
    basis_mat = Matrix.from_columns(basis, rows=z_group.ambient_dim)
    coords = []
    for g in b_group.lattice_gens:
        sol = rational_solve(basis_mat, [Fraction(v) for v in g])
        if sol is None or any(s.denominator != 1 for s in sol):
            raise ArithmeticError("lattice member without integral coordinates")
        coords.append([int(s) for s in sol])
    if not coords:
        return FgAbelianGroup(len(basis))
    rel = Matrix.from_columns(coords, rows=len(basis))
    f = smith_form(rel)
    diag = [d for d in f.diagonal if d != 0]
    return FgAbelianGroup(len(basis) - len(diag),
                          tuple(d for d in diag if d >= 2))
