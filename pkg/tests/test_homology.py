from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lefcalc import (AbelianGroup, ChernClassNonzero, InputError, KirbyData,
                     NotInImage, c_squared, h1_boundary, h1_total, signature,
                     smith_normal_form)
from lefcalc.homology import (euler_characteristic, inertia, integer_kernel,
                              solve_integer, solve_rational)
from lefcalc import intmat

from _support import (determinantal_divisors, invariant_factors,
                      oracle_c_squared, oracle_signature, seeded,
                      total_invariants)


def check_snf(M, ncols=None):
    m, n = intmat.shape(M, ncols)
    U, D, V = smith_normal_form(M, ncols)
    assert intmat.matmul(intmat.matmul(U, M, inner=m), V, inner=n) == D
    assert abs(intmat.det(U)) == 1 and abs(intmat.det(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return nz


def test_snf_examples():
    assert check_snf(intmat.identity(3)) == [1, 1, 1]
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    U, D, V = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]] and U == intmat.identity(2) and V == intmat.identity(2)
    assert check_snf([[4, 6], [6, 9], [2, 3]]) == [1]
    assert check_snf([], ncols=3) == []


matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=m, max_size=m)))


@settings(max_examples=120, deadline=None)
@given(M=matrices)
def test_snf_against_determinantal_divisors(M):
    assert check_snf(M) == determinantal_divisors(M)


def test_snf_against_sympy_large():
    rng = seeded(21)
    for _ in range(60):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        assert check_snf(M) == invariant_factors(M)


@settings(max_examples=80, deadline=None)
@given(M=matrices)
def test_integer_kernel(M):
    n = len(M[0])
    K = integer_kernel(M)
    for v in K:
        assert intmat.matvec(M, v) == [0] * len(M)
    assert len(K) == n - len(invariant_factors(M))


def test_solve_integer_and_rational():
    M = [[2, 0], [0, 3]]
    assert intmat.matvec(M, solve_integer(M, [4, 9])) == [4, 9]
    with pytest.raises(NotInImage):
        solve_integer(M, [1, 0])
    x = solve_rational(M, [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]
    with pytest.raises(NotInImage):
        solve_rational([[1, 1], [1, 1]], [0, 1])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inertia_against_eigenvalues(A):
    n = len(A)
    G = [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]
    pos, neg, zero = inertia(G)
    k = KirbyData(0, [()] * n, G)
    assert pos + neg + zero == n
    assert pos - neg == oracle_signature(k)


def test_euler_characteristic_examples():
    assert euler_characteristic(KirbyData(0, (), ())) == 1
    assert euler_characteristic(KirbyData(1, [[1]], [[-1]])) == 1
    assert euler_characteristic(KirbyData(0, (), (), 0, 1)) == 2


def test_signature_examples():
    assert signature(KirbyData(0, (), ())) == 0
    assert signature(KirbyData(0, [()], [[-1]])) == -1
    assert signature(KirbyData(1, [[1]], [[-1]])) == 0
    assert signature(KirbyData(0, [(), ()], [[0, 1], [1, 0]])) == 0
    assert signature(KirbyData(0, [(), ()], [[1, 0], [0, 1]])) == 2


def test_h1_boundary_examples():
    g, P, images = h1_boundary(KirbyData(0, (), ()))
    assert g.is_trivial() and images == ()
    g, P, images = h1_boundary(KirbyData(0, [()], [[0]]))
    assert (g.free_rank, g.torsion) == (1, ())
    assert images[0].vector in ((1,), (-1,))
    g, _, _ = h1_boundary(KirbyData(1, [[1]], [[-1]]))
    assert g.is_trivial()
    g, _, images = h1_boundary(KirbyData(0, [()], [[5]]))
    assert g.torsion == (5,)
    assert images[0].vector[0] % 5 != 0


def test_h1_total():
    assert str(h1_total(KirbyData(2, [[2, 0]], [[0]]))) == "Z/2 + Z"
    assert h1_total(KirbyData(0, (), ())).is_trivial()


def test_random_handle_data_against_oracles():
    rng = seeded(22)
    for _ in range(120):
        n1, n2 = rng.randint(0, 3), rng.randint(0, 4)
        A = [[rng.randint(-2, 2) for _ in range(n1)] for _ in range(n2)]
        Q = [[0] * n2 for _ in range(n2)]
        for i in range(n2):
            for j in range(i, n2):
                Q[i][j] = Q[j][i] = rng.randint(-3, 3)
        k = KirbyData(n1, A, Q)
        ht, hb = h1_total(k), h1_boundary(k).group
        mine = (euler_characteristic(k), signature(k), (ht.free_rank, ht.torsion),
                (hb.free_rank, hb.torsion))
        assert mine == total_invariants(k)
        r = [rng.randint(-3, 3) for _ in range(n2)]
        try:
            c2 = c_squared(k, r)
        except ChernClassNonzero:
            assert any(h1_boundary(k).element([0] * n1 + r))
        else:
            assert c2 == oracle_c_squared(k, r)


def test_c_squared_examples():
    assert c_squared(KirbyData(0, [()], [[-1]]), [0]) == 0
    assert c_squared(KirbyData(0, [()], [[-1]]), [2]) == -4
    assert c_squared(KirbyData(0, [()], [[3]]), [3]) == 3
    with pytest.raises(ChernClassNonzero):
        c_squared(KirbyData(0, [()], [[0]]), [1])
    with pytest.raises(InputError):
        c_squared(KirbyData(0, [()], [[0]]), [1, 2])


def test_abelian_group_validation():
    assert str(AbelianGroup(2, (2, 4))) == "Z/2 + Z/4 + Z^2"
    assert AbelianGroup(0, (6,)).reduce((7,)) == (1,)
    with pytest.raises(InputError):
        AbelianGroup(0, (2, 3))
    with pytest.raises(InputError):
        AbelianGroup(0, (1,))


def test_kirby_validation():
    with pytest.raises(InputError):
        KirbyData(0, [(), ()], [[0, 1], [2, 0]])
    with pytest.raises(InputError):
        KirbyData(1, [()], [[0]])
