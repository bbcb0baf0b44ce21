"""
Exact integer linear algebra over handle data.

Everything here works with Python ints and `fractions.Fraction`; there is no
floating point anywhere.  A 4-dimensional handlebody is described by
`KirbyData`: the number of 1-handles, the homology classes of the 2-handle
attaching circles in the boundary of the 1-handlebody, and the linking
matrix.  For the boundary 3-manifold the 1-handles are traded for 0-framed
unknots, so H_1 of the boundary is presented by the symmetric matrix

    [[0, A^T],
     [A, Q  ]]

on generators (1-handle meridians, 2-handle meridians).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ChernClassNonzero, InputError, NotInImage
from . import intmat


@dataclass(frozen=True)
class KirbyData:
    n1: int
    attach: tuple
    linking: tuple
    n3: int = 0
    n4: int = 0

    def __post_init__(self):
        Q = intmat.freeze(self.linking)
        A = intmat.freeze(self.attach)
        object.__setattr__(self, "linking", Q)
        object.__setattr__(self, "attach", A)
        k = len(Q)
        if any(len(row) != k for row in Q):
            raise InputError("linking matrix must be square")
        if any(Q[i][j] != Q[j][i] for i in range(k) for j in range(k)):
            raise InputError("linking matrix must be symmetric")
        if len(A) != k:
            raise InputError("attach needs one row per 2-handle")
        if any(len(row) != self.n1 for row in A):
            raise InputError(f"attach rows must have length n1={self.n1}")
        if min(self.n1, self.n3, self.n4) < 0:
            raise InputError("handle counts must be nonnegative")

    @property
    def n2(self):
        return len(self.linking)

    def presentation(self):
        n1, k = self.n1, self.n2
        P = intmat.zeros(n1 + k, n1 + k)
        for i in range(k):
            for j in range(n1):
                P[j][n1 + i] = P[n1 + i][j] = self.attach[i][j]
            for j in range(k):
                P[n1 + i][n1 + j] = self.linking[i][j]
        return P


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ...; elements list torsion coordinates first."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d <= 1 for d in self.torsion):
            raise InputError("invariant factors must exceed 1")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise InputError("invariant factors must form a divisibility chain")

    @property
    def ngens(self):
        return len(self.torsion) + self.free_rank

    def reduce(self, v):
        v = list(v)
        for i, d in enumerate(self.torsion):
            v[i] %= d
        return tuple(v)

    def is_trivial(self):
        return self.ngens == 0

    @property
    def has_two_torsion(self):
        return any(d % 2 == 0 for d in self.torsion)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class BoundaryClassImage:
    index: int
    vector: tuple


@dataclass(frozen=True)
class BoundaryH1:
    """H_1 of the boundary with the projection from presentation generators."""

    group: AbelianGroup
    presentation: tuple
    images: tuple
    projection: tuple = field(repr=False)

    def __iter__(self):
        return iter((self.group, self.presentation, self.images))

    def element(self, v):
        """Group element represented by the generator combination `v`."""
        return self.group.reduce(intmat.matvec(self.projection, v))


def smith_normal_form(M, ncols=None):
    """Return (U, D, V) with U M V = D, U and V unimodular and D in Smith form.

    The diagonal of D is nonnegative and each nonzero entry divides the next;
    zeros come last.
    """
    m, n = intmat.shape(M, ncols)
    D = intmat.copy(M)
    U = intmat.identity(m)
    V = intmat.identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                return U, D, V
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(D[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def _diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(M, ncols=None):
    """Z-basis (list of vectors) of {x : M x = 0}."""
    m, n = intmat.shape(M, ncols)
    _, D, V = smith_normal_form(M, ncols=n)
    rank = sum(1 for d in _diagonal(D) if d)
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]


def solve_integer(M, b, ncols=None):
    """One integer solution x of M x = b, or NotInImage."""
    m, n = intmat.shape(M, ncols)
    U, D, V = smith_normal_form(M, ncols=n)
    c = intmat.matvec(U, b)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                raise NotInImage("system has no integer solution")
        elif c[i] % d:
            raise NotInImage("system has no integer solution")
        else:
            y[i] = c[i] // d
    return intmat.matvec(V, y)


def solve_rational(M, b):
    """One rational solution of M x = b (free variables set to 0), or NotInImage."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(M, b)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if any(A[i][n] != 0 for i in range(r, m)):
        raise NotInImage("system has no rational solution")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = A[i][n]
    return x


def inertia(G):
    """(positive, negative, zero) counts of a symmetric rational matrix."""
    A = [[Fraction(x) for x in row] for row in G]
    pos = neg = 0
    while A:
        n = len(A)
        i = next((i for i in range(n) if A[i][i] != 0), None)
        if i is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if A[i][j] != 0), None)
            if pair is None:
                return pos, neg, n
            i, j = pair
            # basis change e_i -> e_i + e_j makes the (i, i) entry 2 A[i][j]
            for r in range(n):
                A[r][i] += A[r][j]
            for c in range(n):
                A[i][c] += A[j][c]
        p = A[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(n) if r != i]
        A = [[A[r][c] - A[r][i] * A[i][c] / p for c in rest] for r in rest]
    return pos, neg, 0


def euler_characteristic(k):
    return 1 - k.n1 + k.n2 - k.n3 + k.n4


def second_homology_basis(k):
    """Integer basis of H_2 = {x : sum_i x_i * attach_i = 0} as columns."""
    if k.n1 == 0:
        return intmat.identity(k.n2)
    basis = integer_kernel(intmat.transpose(k.attach, ncols=k.n1), ncols=k.n2)
    return intmat.transpose(basis, ncols=k.n2) if basis else [[] for _ in range(k.n2)]


def _restricted_form(k):
    B = second_homology_basis(k)
    nb = len(B[0]) if B else 0
    Bt = intmat.transpose(B, ncols=nb)
    return B, intmat.matmul(intmat.matmul(Bt, k.linking, inner=k.n2), B, inner=k.n2)


def signature(k):
    """Signature of the linking form restricted to H_2."""
    _, G = _restricted_form(k)
    pos, neg, _ = inertia(G)
    return pos - neg


def h1_total(k):
    """H_1 of the 4-manifold: Z^n1 modulo the attaching classes."""
    if k.n1 == 0:
        return AbelianGroup(0)
    _, D, _ = smith_normal_form(k.attach, ncols=k.n1) if k.n2 else (None, [], None)
    diag = _diagonal(D) if k.n2 else []
    torsion = tuple(d for d in diag if d > 1)
    rank = sum(1 for d in diag if d)
    return AbelianGroup(k.n1 - rank, torsion)


def h1_boundary(k):
    """H_1 of the boundary, the presentation matrix, and the 2-handle meridian classes."""
    P = k.presentation()
    N = len(P)
    U, D, _ = smith_normal_form(P, ncols=N)
    diag = [D[i][i] for i in range(N)]
    keep = [i for i in range(N) if diag[i] != 1]
    group = AbelianGroup(sum(1 for i in keep if diag[i] == 0),
                         tuple(diag[i] for i in keep if diag[i] > 1))
    projection = tuple(tuple(U[i]) for i in keep)
    result = BoundaryH1(group, intmat.freeze(P), (), projection)
    images = tuple(
        BoundaryClassImage(i, result.element([int(g == k.n1 + i) for g in range(N)]))
        for i in range(k.n2))
    return BoundaryH1(group, intmat.freeze(P), images, projection)


def meridian_combination(k, r, h1=None):
    """Element sum_i r_i c_i of H_1 of the boundary."""
    h1 = h1 or h1_boundary(k)
    return h1.element([0] * k.n1 + list(r))


def c_squared(k, r):
    """Square of the relative class dual to sum_i r_i C_i (C_i the cocores).

    Requires sum_i r_i c_i = 0 in H_1 of the boundary.  Solves the restricted
    linking form against r over the rationals and returns r^T x.
    """
    r = [int(x) for x in r]
    if len(r) != k.n2:
        raise InputError("need one rotation number per 2-handle")
    if not any(r):
        return Fraction(0)
    if any(meridian_combination(k, r)):
        raise ChernClassNonzero("sum r_i c_i is nonzero in H_1 of the boundary")
    B, G = _restricted_form(k)
    nb = len(G)
    rhs = [sum(B[i][j] * r[i] for i in range(k.n2)) for j in range(nb)]
    z = solve_rational(G, rhs) if nb else []
    if not nb and any(rhs):
        raise NotInImage("r is not in the image of the linking form")
    return sum((Fraction(a) * b for a, b in zip(rhs, z)), Fraction(0))
