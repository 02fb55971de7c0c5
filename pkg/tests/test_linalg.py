import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from solvcoh import linalg
from solvcoh.linalg import IntegerLattice, ScalarMatrix, int_matmul, lattice_contains, smith_normal_form
from solvcoh.scalar import Scalar

small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    entries = [[Scalar(draw(small), draw(st.sampled_from([0, 0, 0, 1, -1]))) for _ in range(c)] for _ in range(r)]
    return ScalarMatrix.from_dense(entries, cols=c)


def test_examples():
    assert linalg.rank(ScalarMatrix.identity(2)) == 2
    assert linalg.rank(ScalarMatrix.zeros(3, 4)) == 0
    # Heisenberg boundary: x1 -> 0, x2 -> 0, x3 -> -x1^x2 (rows x1^x2, x1^x3, x2^x3)
    heis = ScalarMatrix.from_dense([[0, 0, -1], [0, 0, 0], [0, 0, 0]])
    assert linalg.rank(heis) == 1
    ker = linalg.kernel_basis(heis)
    assert ker == [(Scalar(1), Scalar(0), Scalar(0)), (Scalar(0), Scalar(1), Scalar(0))]
    assert linalg.kernel_basis(ScalarMatrix.identity(2)) == []
    assert len(linalg.kernel_basis(ScalarMatrix.zeros(1, 3))) == 3


def test_membership():
    span = [(Scalar(1), Scalar(0), Scalar(2)), (Scalar(0), Scalar(1), Scalar(1))]
    assert linalg.membership((Scalar(0),) * 3, span) == (Scalar(0), Scalar(0))
    assert linalg.membership(span[0], span) == (Scalar(1), Scalar(0))
    assert linalg.membership((Scalar(0), Scalar(0), Scalar(1)), span) is None
    with pytest.raises(ValueError):
        linalg.membership((Scalar(1),), span)


@given(matrices())
def test_rank_nullity(m):
    assert linalg.rank(m) + len(linalg.kernel_basis(m)) == m.cols
    for v in linalg.kernel_basis(m):
        assert not any(m.apply(v))


@settings(max_examples=60)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation_and_transpose(m, rnd):
    dense = m.to_dense()
    rows = list(range(m.rows))
    cols = list(range(m.cols))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    permuted = ScalarMatrix.from_dense([[dense[i][j] for j in cols] for i in rows], cols=m.cols)
    r = linalg.rank(m)
    assert linalg.rank(permuted) == r
    assert linalg.rank(m.transpose()) == r
    assert linalg.rank_fraction_free(m) == r


@given(matrices())
def test_against_sympy(m):
    dense = [[x.re + sympy.I * x.im for x in row] for row in m.to_dense()]
    ref = sympy.Matrix(m.rows, m.cols, [sympy.nsimplify(v) for row in dense for v in row]).rank() if m.rows and m.cols else 0
    assert linalg.rank(m) == ref


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve(m, b):
    rhs = tuple(Scalar(x) for x in b[: m.rows])
    x = linalg.solve(m, rhs)
    if x is None:
        aug = ScalarMatrix.from_dense([list(r) + [v] for r, v in zip(m.to_dense(), rhs)], cols=m.cols + 1)
        assert linalg.rank(aug) > linalg.rank(m)
    else:
        assert m.apply(x) == rhs


def test_cross_check_mode_counts():
    before = linalg.cross_check_count
    linalg.rank(ScalarMatrix.identity(3))
    assert linalg.cross_check_count == before + 1


# --------------------------------------------------------------------------
# integer normal forms

def test_snf_examples():
    U, D, V = smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]
    assert smith_normal_form([[1, 0], [0, 1]])[1] == [[1, 0], [0, 1]]
    assert smith_normal_form([[0, 0], [0, 0]])[1] == [[0, 0], [0, 0]]


def _det(m):
    return int(sympy.Matrix(m).det())


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_properties(r, c, data):
    a = [[data.draw(st.integers(-6, 6)) for _ in range(c)] for _ in range(r)]
    U, D, V = smith_normal_form(a)
    assert int_matmul(int_matmul(U, a), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y % x == 0) if x else y == 0
    # invariant factors agree with sympy's
    from sympy.matrices.normalforms import smith_normal_form as sym_snf

    ref = sym_snf(sympy.Matrix(a), domain=sympy.ZZ)
    ref_diag = sorted(abs(int(ref[i, i])) for i in range(min(r, c)))
    assert sorted(diag) == ref_diag


def test_lattice_examples():
    L = IntegerLattice(2, [(2, 0)])
    assert lattice_contains(L, (0, 0))
    assert not lattice_contains(L, (1, 0))
    assert lattice_contains(IntegerLattice(2, [(2, 0), (0, 3)]), (4, -3))
    with pytest.raises(ValueError):
        lattice_contains(L, (1, 0, 0))


@settings(max_examples=40)
@given(st.integers(1, 3), st.data())
def test_lattice_brute_force(rank, data):
    k = data.draw(st.integers(0, 2))
    gens = [tuple(data.draw(st.integers(-3, 3)) for _ in range(rank)) for _ in range(k)]
    L = IntegerLattice(rank, gens)
    reachable = set()
    for coeffs in itertools.product(range(-5, 6), repeat=k):
        reachable.add(tuple(sum(c * g[t] for c, g in zip(coeffs, gens)) for t in range(rank)))
    for v in itertools.product(range(-3, 4), repeat=rank):
        if v in reachable:
            assert L.contains(v)
    random.seed(rank * 7 + k)
    for v in reachable:
        assert L.contains(v)
        # cosets: v + w and w share a key
        assert L.reduce_key(v) == L.reduce_key((0,) * rank)
