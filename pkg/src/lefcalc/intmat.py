"""
Small exact integer matrix helpers.

Matrices are lists of lists (or tuples of tuples) of Python ints; every
function returns fresh lists and never mutates its arguments.
"""


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy(M):
    return [list(row) for row in M]


def freeze(M):
    return tuple(tuple(int(x) for x in row) for row in M)


def shape(M, ncols=None):
    """Row and column counts; `ncols` disambiguates matrices with no rows."""
    m = len(M)
    if m:
        return m, len(M[0])
    return 0, (ncols or 0)


def transpose(M, ncols=None):
    m, n = shape(M, ncols)
    return [[M[i][j] for i in range(m)] for j in range(n)]


def matmul(A, B, inner=None):
    m = len(A)
    n = len(A[0]) if m else (inner if inner is not None else len(B))
    p = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(p)]
            for i in range(m)]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def bilinear(x, M, y):
    """x^T M y."""
    return sum(x[i] * M[i][j] * y[j]
               for i in range(len(x)) if x[i]
               for j in range(len(y)) if y[j])


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_diagonal(M):
    return all(M[i][j] == 0 for i in range(len(M)) for j in range(len(M[i])) if i != j)
