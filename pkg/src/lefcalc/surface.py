"""
Compact oriented surfaces with boundary, homology classes of curves on them,
and the homological action of signed Dehn twists.

A surface of genus g with b >= 1 boundary components is modelled as a disk
with 2g + b - 1 bands.  Its first homology has the ordered basis

    a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}

where the d_j are classes of boundary components (they pair to zero with
everything).  Surfaces grown by `add_page_handle` append new basis vectors
at the end, so after a boundary-joining handle the stored intersection form
is no longer in block order; it is always kept explicitly on the Surface.
"""

from dataclasses import dataclass, field

from .errors import InputError, SurfaceMismatch
from . import intmat


def _canonical_form(genus, boundary_count):
    n = 2 * genus + max(boundary_count - 1, 0)
    J = intmat.zeros(n, n)
    for i in range(genus):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return intmat.freeze(J)


def _rank(J):
    from fractions import Fraction
    A = [[Fraction(x) for x in row] for row in J]
    rank = 0
    rows, cols = len(A), (len(A[0]) if A else 0)
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rows):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Surface:
    """Genus/boundary record together with the intersection form on H_1.

    `form` defaults to the block-standard symplectic form in the canonical
    basis; pass it explicitly only for surfaces built by handle additions.
    """

    genus: int
    boundary_count: int
    form: tuple = field(default=None, compare=True)

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise InputError("genus and boundary_count must be nonnegative")
        if self.form is None:
            object.__setattr__(self, "form", _canonical_form(self.genus, self.boundary_count))
        else:
            J = intmat.freeze(self.form)
            object.__setattr__(self, "form", J)
            n = self.h1_rank
            if len(J) != n or any(len(row) != n for row in J):
                raise InputError(f"intersection form must be {n}x{n}")
            if any(J[i][j] != -J[j][i] for i in range(n) for j in range(n)):
                raise InputError("intersection form must be antisymmetric")
            if _rank(J) != 2 * self.genus:
                raise InputError("intersection form rank must equal 2*genus")

    @property
    def h1_rank(self):
        return 2 * self.genus + max(self.boundary_count - 1, 0)

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary_count

    @property
    def is_canonical(self):
        return self.form == _canonical_form(self.genus, self.boundary_count)

    def boundary_basis(self):
        """Basis indices of boundary classes (rows of the form that vanish)."""
        return [i for i, row in enumerate(self.form) if not any(row)]

    def basis_vector(self, i):
        coeffs = [0] * self.h1_rank
        coeffs[i] = 1
        return CurveClass(self, tuple(coeffs))

    def zero(self):
        return CurveClass(self, (0,) * self.h1_rank)

    def __repr__(self):
        tag = "" if self.is_canonical else ", custom form"
        return f"Surface(genus={self.genus}, boundary_count={self.boundary_count}{tag})"


@dataclass(frozen=True)
class CurveClass:
    """Integer homology class standing in for a simple closed curve."""

    surface: Surface
    coeffs: tuple
    embedded_hint: bool = False

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.surface.h1_rank:
            raise InputError(
                f"class has {len(coeffs)} coefficients, surface has rank {self.surface.h1_rank}")

    def _check(self, other):
        if other.surface != self.surface:
            raise SurfaceMismatch("curve classes live on different surfaces")

    def __add__(self, other):
        self._check(other)
        return CurveClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CurveClass(self.surface, tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return CurveClass(self.surface, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)


@dataclass(frozen=True)
class SignedTwist:
    """Right-handed (sign +1) or left-handed (sign -1) Dehn twist."""

    curve: CurveClass
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError("twist sign must be +1 or -1")

    def inverse(self):
        return SignedTwist(self.curve, -self.sign)


@dataclass(frozen=True)
class SeifertForm:
    """Bilinear form L on H_1 of a page with L - L^T equal to the intersection form."""

    surface: Surface
    matrix: tuple

    def __post_init__(self):
        L = intmat.freeze(self.matrix)
        object.__setattr__(self, "matrix", L)
        J = self.surface.form
        n = self.surface.h1_rank
        if len(L) != n or any(len(row) != n for row in L):
            raise InputError(f"Seifert matrix must be {n}x{n}")
        if any(L[i][j] - L[j][i] != J[i][j] for i in range(n) for j in range(n)):
            raise InputError("Seifert matrix violates L - L^T = J")

    @classmethod
    def default(cls, surface):
        """Strict upper-triangular part of the intersection form."""
        J = surface.form
        n = surface.h1_rank
        return cls(surface, tuple(tuple(J[i][j] if j > i else 0 for j in range(n))
                                  for i in range(n)))

    def __call__(self, x, y):
        if x.surface != self.surface or y.surface != self.surface:
            raise SurfaceMismatch("class not on the Seifert form's surface")
        return intmat.bilinear(x.coeffs, self.matrix, y.coeffs)


def intersection_number(x, y):
    """Algebraic intersection x^T J y."""
    x._check(y)
    return intmat.bilinear(x.coeffs, x.surface.form, y.coeffs)


def twist_action(t, x):
    """Image of `x` under the twist: x + sign * <c, x> * c.

    With <a_1, b_1> = 1 a positive twist about a_1 sends b_1 to b_1 + a_1.
    """
    k = t.sign * intersection_number(t.curve, x)
    if k == 0:
        return x
    return x + k * t.curve


def twist_matrix(t):
    """Matrix of `twist_action(t, .)` acting on coefficient column vectors."""
    c = t.curve.coeffs
    J = t.curve.surface.form
    n = len(c)
    cJ = [sum(c[k] * J[k][j] for k in range(n)) for j in range(n)]
    return [[int(i == j) + t.sign * c[i] * cJ[j] for j in range(n)] for i in range(n)]


def seifert_framing(L, c):
    """Page framing L(c, c) of `c` relative to the reference framing."""
    return L(c, c)


def add_page_handle(s, join=None):
    """Attach one band to the surface; the new basis vector goes last.

    By default both feet land on the same boundary component, which splits
    it: (g, b) -> (g, b + 1) and the new class pairs to zero with everything.
    With `join=i`, where basis vector i is a boundary class, the band instead
    connects that boundary component to the last one: (g, b) -> (g + 1, b - 1)
    and the new class has intersection +1 with basis vector i.
    """
    if s.boundary_count < 1:
        raise InputError("cannot attach a band to a closed surface")
    n = s.h1_rank
    J = [list(row) + [0] for row in s.form] + [[0] * (n + 1)]
    if join is None:
        return Surface(s.genus, s.boundary_count + 1, J)
    if join not in s.boundary_basis():
        raise InputError(f"basis vector {join} is not a boundary class")
    J[join][n] = 1
    J[n][join] = -1
    return Surface(s.genus + 1, s.boundary_count - 1, J)


def torus_sum(s):
    """Connected sum with a torus: two bands, the second joined to the first."""
    s1 = add_page_handle(s)
    return add_page_handle(s1, join=s1.h1_rank - 1)


def embed(x, surface):
    """Zero-extend a class onto a surface grown from its own by handle additions."""
    old, new = x.surface, surface
    n = old.h1_rank
    if new.h1_rank < n or any(new.form[i][j] != old.form[i][j]
                              for i in range(n) for j in range(n)):
        raise SurfaceMismatch("target surface does not extend the class's surface")
    return CurveClass(new, x.coeffs + (0,) * (new.h1_rank - n), x.embedded_hint)


def extend_seifert(L, surface):
    """Extend a Seifert form to a surface grown by handle additions.

    New rows are zero and new columns copy the intersection form above the
    diagonal, which for a same-boundary band is a zero row and column.
    """
    n = L.surface.h1_rank
    N = surface.h1_rank
    J = surface.form
    M = [list(row) + [J[i][j] for j in range(n, N)] for i, row in enumerate(L.matrix)]
    for i in range(n, N):
        M.append([J[i][j] if j > i else 0 for j in range(N)])
    return SeifertForm(surface, M)
