import random
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import hermite_normal_form

from trigen import linalg


def test_det_and_inverse_against_sympy():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(n)] for _ in range(n)]
        m = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                           for v in row] for row in rows])
        assert linalg.det(rows) == Fraction(str(m.det()))
        inv = linalg.inverse(rows)
        if m.det() == 0:
            assert inv is None
        else:
            prod = m * sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                                      for v in row] for row in inv])
            assert prod == sympy.eye(n)


def test_solve_columns_consistency():
    cols = [[1, 0, 2], [0, 1, 1]]
    target = [3, 4, 10]
    x = linalg.solve_columns(cols, target)
    assert x == [Fraction(3), Fraction(4)]
    assert linalg.solve_columns(cols, [0, 0, 1]) is None


def test_column_hnf_unimodular_and_matches_sympy():
    rng = random.Random(5)
    for _ in range(20):
        nrows = rng.randint(1, 3)
        ncols = rng.randint(1, 4)
        cols = [[rng.randint(-9, 9) for _ in range(nrows)]
                for _ in range(ncols)]
        h, u, pivots = linalg.column_hnf(cols)
        # U unimodular
        umat = sympy.Matrix([[u[j][i] for j in range(ncols)]
                             for i in range(ncols)])
        assert abs(umat.det()) == 1
        # A*U = [H | 0]
        amat = sympy.Matrix([[cols[j][i] for j in range(ncols)]
                             for i in range(nrows)])
        prod = amat * umat
        for k in range(len(h)):
            for i in range(nrows):
                assert prod[i, k] == h[k][i]
        for k in range(len(h), ncols):
            for i in range(nrows):
                assert prod[i, k] == 0
        # Same column lattice as sympy's HNF (of the transpose dance)
        if any(any(c) for c in cols):
            ours = sympy.Matrix([[h[k][i] for k in range(len(h))]
                                 for i in range(nrows)])
            theirs = hermite_normal_form(amat)  # column-style HNF
            assert ours.rank() == theirs.rank()
            # lattices agree iff each generates the other's columns
            for j in range(theirs.cols):
                assert linalg.lattice_solve(h, list(theirs.col(j))) is not None
            for k in range(len(h)):
                their_cols = [list(theirs.col(j)) for j in range(theirs.cols)]
                assert linalg.lattice_solve(their_cols, h[k]) is not None


def test_lattice_solve_roundtrip():
    cols = [[1, 0], [3, 2]]
    x = linalg.lattice_solve(cols, [0, 2])
    assert x is not None
    assert [x[0] * 1 + x[1] * 3, x[0] * 0 + x[1] * 2] == [0, 2]
    assert linalg.lattice_solve(cols, [0, 1]) is None


def test_lattice_index_multiplier():
    # lattice Z(1,0) + Z(3,2): index 2 sublattice of Z^2
    assert linalg.lattice_index_multiplier([[1, 0], [3, 2]], 2) == 2
    assert linalg.lattice_index_multiplier([[1, 0], [0, 1]], 2) == 1
    assert linalg.lattice_index_multiplier([[1, 0]], 2) is None
    assert linalg.lattice_index_multiplier([[2, 0], [0, 3]], 2) == 6
