"""The differential cochain complex and its character evaluation.

A level-q differential cochain of degree k is a triple: an integral
cochain (the underlying characteristic data), a rational cochain one
degree lower (the potential whose coboundary measures the failure of the
form to be integral), and, in degrees k >= q, a PL form (the curvature).
The differential mixes the simplicial coboundary with integration:

    dhat(c, T, w) = (delta c, int(w) - j(c) - delta T, d w)      k >= q
    dhat(c, T)    = (delta c, -j(c) - delta T, 0)                k = q - 1
    dhat(c, T)    = (delta c, -j(c) - delta T)                   k < q - 1

Cocycles at level q = degree k represent differential characters: the
potential restricted to (k-1)-cycles, taken mod Z, only depends on the
cocycle's class.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import MixedSolver, MixedSubgroup, MixedWitness
from .plforms import WhitneyForm, d as d_form, derham_cochain
from .simplicial import Chain, Cochain, Ring


class DiffCochain:
    """Element of the level-q differential cochain group in degree k.

    Fields: `integral` is the Z-cochain of degree k, `potential` the
    Q-cochain of degree k-1, and `curvature` the degree-k form (present
    exactly when k >= q).
    """

    __slots__ = ("complex", "level", "degree", "integral", "potential",
                 "curvature")

    def __init__(self, complex, level, degree, integral, potential,
                 curvature=None):
        if integral.complex is not complex or potential.complex is not complex:
            raise ValueError("components live on a different complex")
        if integral.ring is not Ring.Z or integral.degree != degree:
            raise ValueError("integral part must be a Z-cochain of degree %d"
                             % degree)
        if potential.ring is not Ring.Q or potential.degree != degree - 1:
            raise ValueError("potential must be a Q-cochain of degree %d"
                             % (degree - 1))
        if degree >= level:
            if curvature is None:
                raise ValueError("degree %d >= level %d requires a curvature form"
                                 % (degree, level))
            if curvature.complex is not complex or curvature.degree != degree:
                raise ValueError("curvature must be a degree-%d form" % degree)
        elif curvature is not None:
            raise ValueError("no curvature slot below the level")
        self.complex = complex
        self.level = level
        self.degree = degree
        self.integral = integral
        self.potential = potential
        self.curvature = curvature

    @classmethod
    def zero(cls, complex, level, degree):
        curv = WhitneyForm.zero(complex, degree) if degree >= level else None
        return cls(complex, level, degree,
                   Cochain.zero(complex, degree, Ring.Z),
                   Cochain.zero(complex, degree - 1, Ring.Q),
                   curv)

    def is_zero(self):
        return (self.integral.is_zero() and self.potential.is_zero()
                and (self.curvature is None or self.curvature.is_zero()))

    def __add__(self, other):
        self._compat(other)
        curv = None
        if self.curvature is not None:
            curv = self.curvature + other.curvature
        return DiffCochain(self.complex, self.level, self.degree,
                           self.integral + other.integral,
                           self.potential + other.potential, curv)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        curv = -self.curvature if self.curvature is not None else None
        return DiffCochain(self.complex, self.level, self.degree,
                           -self.integral, -self.potential, curv)

    def scale(self, n):
        curv = self.curvature.scale(n) if self.curvature is not None else None
        return DiffCochain(self.complex, self.level, self.degree,
                           self.integral.scale(int(n)),
                           self.potential.scale(Fraction(n)), curv)

    def _compat(self, other):
        if (self.complex is not other.complex or self.level != other.level
                or self.degree != other.degree):
            raise ValueError("differential cochains are not compatible")

    def __eq__(self, other):
        return (isinstance(other, DiffCochain)
                and self.complex is other.complex
                and self.level == other.level and self.degree == other.degree
                and self.integral == other.integral
                and self.potential == other.potential
                and self.curvature == other.curvature)

    def __repr__(self):
        return ("DiffCochain(q=%d, k=%d, c=%r, T=%r, w=%r)"
                % (self.level, self.degree, list(self.integral.values),
                   [str(v) for v in self.potential.values],
                   None if self.curvature is None
                   else [str(v) for v in self.curvature.coeffs]))


def dhat(x):
    """The differential, in all three degree regimes; dhat(dhat(x)) == 0."""
    cx, q, k = x.complex, x.level, x.degree
    dc = x.integral.coboundary()
    mid = -x.integral.as_q() - x.potential.coboundary()
    if k >= q:
        mid = mid + derham_cochain(x.curvature)
        return DiffCochain(cx, q, k + 1, dc, mid, d_form(x.curvature))
    if k == q - 1:
        return DiffCochain(cx, q, k + 1, dc, mid, WhitneyForm.zero(cx, k + 1))
    return DiffCochain(cx, q, k + 1, dc, mid, None)


def is_cocycle(x):
    return dhat(x).is_zero()


class CoboundarySolver:
    """Decides membership in the coboundary subgroup of the level-k complex
    at degree k, with reusable reduction data.

    A coboundary dhat(c', T') has curvature zero and its (integral,
    potential) pair lies in the mixed subgroup generated over Z by
    (delta e_i, -e_i) for integral basis cochains e_i and over Q by
    (0, -delta e_j) for rational basis cochains one degree lower.
    """

    def __init__(self, complex, degree):
        self.complex = complex
        self.degree = degree
        nk = complex.n_simplices(degree)
        nkm1 = complex.n_simplices(degree - 1)
        nkm2 = complex.n_simplices(degree - 2)
        delta_km1 = complex.coboundary_matrix(degree - 1)
        delta_km2 = complex.coboundary_matrix(degree - 2)
        lattice = []
        for i in range(nkm1):
            col = delta_km1.column(i)
            vec = list(col) + [0] * nkm1
            vec[nk + i] = -1
            lattice.append(vec)
        space = []
        for j in range(nkm2):
            col = delta_km2.column(j)
            space.append([0] * nk + [-v for v in col])
        self.subgroup = MixedSubgroup(nk + nkm1, lattice, space)
        self._solver = MixedSolver(self.subgroup)

    def solve(self, x):
        """Witness y with dhat(y) == x, or None."""
        if x.complex is not self.complex or x.degree != self.degree:
            raise ValueError("solver built for a different complex or degree")
        if x.level != x.degree:
            raise ValueError("coboundary test lives at level q = degree k")
        if x.curvature is not None and not x.curvature.is_zero():
            return None
        vec = [Fraction(v) for v in x.integral.values]
        vec += [Fraction(v) for v in x.potential.values]
        res = self._solver.membership(vec)
        if not isinstance(res, MixedWitness):
            return None
        cx = self.complex
        cprime = Cochain(cx, self.degree - 1, Ring.Z, res.lattice_coeffs)
        tprime = Cochain(cx, self.degree - 2, Ring.Q, res.space_coeffs)
        y = DiffCochain(cx, self.degree, self.degree - 1, cprime, tprime, None)
        if dhat(y) != x:
            raise ArithmeticError("coboundary witness failed to re-verify")
        return y


def is_coboundary(x):
    """Witness y with dhat(y) == x, or None.  One-shot convenience around
    CoboundarySolver; build the solver directly when testing many elements."""
    return CoboundarySolver(x.complex, x.degree).solve(x)


def evaluate_character(x, z):
    """The differential character of a cocycle: potential mod Z on cycles.

    Shifting x by any coboundary dhat(c', T') changes the potential by
    -j(c') - delta T', whose value on a cycle is an integer, so the result
    only depends on the class of x.
    """
    if not isinstance(z, Chain):
        raise TypeError("evaluate_character expects a Chain")
    if x.level != x.degree:
        raise ValueError("characters live at level q = degree k")
    if z.degree != x.degree - 1:
        raise ValueError("character of degree %d evaluates on %d-cycles"
                         % (x.degree, x.degree - 1))
    if not z.is_cycle():
        raise ValueError("evaluation chain is not a cycle")
    if not is_cocycle(x):
        raise ValueError("character evaluation needs a cocycle")
    val = x.potential.evaluate(z)
    return val - (val.numerator // val.denominator)


class DiffClass:
    """A differential cohomology class, held by a verified cocycle."""

    __slots__ = ("representative",)

    def __init__(self, representative):
        if not is_cocycle(representative):
            raise ValueError("class representative must be a cocycle")
        if representative.level != representative.degree:
            raise ValueError("classes live at level q = degree k")
        self.representative = representative

    @property
    def complex(self):
        return self.representative.complex

    @property
    def degree(self):
        return self.representative.degree

    def character(self, z):
        return evaluate_character(self.representative, z)

    def __repr__(self):
        return "DiffClass(%r)" % (self.representative,)


# ---------------------------------------------------------------------------
# file format: sections c, T, omega

def format_diff_cochain(x):
    from .plforms import format_whitney_form
    from .simplicial import format_cochain
    parts = ["level %d" % x.level, "section c",
             format_cochain(x.integral).rstrip("\n"),
             "section T", format_cochain(x.potential).rstrip("\n")]
    if x.curvature is not None:
        parts += ["section omega",
                  format_whitney_form(x.curvature).rstrip("\n")]
    return "\n".join(parts) + "\n"


def load_diff_cochain(text, complex):
    from .plforms import load_whitney_form
    from .simplicial import ComplexParseError, parse_cochain_lines
    level = None
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#")[0].strip()
        if not stripped:
            continue
        toks = stripped.split()
        if toks[0] == "level":
            if len(toks) != 2 or not toks[1].lstrip("-").isdigit():
                raise ComplexParseError(lineno, 1, "level takes one integer")
            level = int(toks[1])
            continue
        if toks[0] == "section":
            if len(toks) != 2 or toks[1] not in ("c", "T", "omega"):
                raise ComplexParseError(lineno, 1,
                                        "section must be c, T or omega")
            current = toks[1]
            sections[current] = []
            continue
        if current is None:
            raise ComplexParseError(lineno, 1, "content outside any section")
        sections[current].append((lineno, raw))
    if level is None:
        raise ComplexParseError(1, 1, "missing level line")
    if "c" not in sections or "T" not in sections:
        raise ComplexParseError(1, 1, "sections c and T are required")
    c = parse_cochain_lines(sections["c"], complex, expect_ring=Ring.Z)
    t = parse_cochain_lines(sections["T"], complex, expect_ring=Ring.Q)
    curvature = None
    if "omega" in sections:
        body = "\n".join(raw for _, raw in sections["omega"])
        curvature = load_whitney_form(body, complex)
    return DiffCochain(complex, level, c.degree, c, t, curvature)
