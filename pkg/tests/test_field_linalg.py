from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from partialhopf.field import GF, QQ, Field, Fp
from partialhopf.linalg import SpanCoordinates, invert, nullspace, rank, rref, solve, span_basis
from partialhopf.tensor import es

small = st.integers(-4, 4)


def matrices(rows, cols, field=QQ):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(field.array)


def brute_rank(m):
    # oracle: largest nonvanishing minor, cofactor determinants over Fractions
    def det(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] * det([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a)))
    import itertools
    rows, cols = m.shape
    for k in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                if det([[m[i, j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
def test_fp_inverse(p):
    f = GF(p)
    for v in range(1, p):
        assert f(v) * (f.one / f(v)) == f.one


def test_fp_rejects_mixing():
    with pytest.raises(ValueError):
        Fp(1, 3) + Fp(1, 5)
    with pytest.raises(ValueError):
        Field(4)


@pytest.mark.parametrize("text,expected", [("3/2", Fraction(3, 2)), ("-1", Fraction(-1)), ("0", Fraction(0))])
def test_parse_format_roundtrip(text, expected):
    assert QQ.parse(text) == expected
    assert QQ.parse(QQ.format(expected)) == expected


def test_fraction_reduces_mod_p():
    assert GF(7)(Fraction(1, 2)) == GF(7)(4)
    with pytest.raises(ZeroDivisionError):
        GF(7)(Fraction(1, 7))


@pytest.mark.parametrize("flag,p", [("q", 0), ("fp:7", 7), ("FP:3", 3)])
def test_field_flag(flag, p):
    assert Field.from_flag(flag).p == p


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_rank_against_minors(m):
    assert rank(m) == brute_rank(m)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3))
def test_invert(m):
    inv = invert(m, QQ)
    if brute_rank(m) < 3:
        assert inv is None
    else:
        assert np.array_equal(m.dot(inv), QQ.eye(3))


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_consistent(a, x):
    b = a.dot(QQ.array(x))
    sol = solve(a, b, QQ)
    assert sol is not None and np.array_equal(a.dot(sol), b)
    for v in nullspace(a, QQ):
        assert not any(a.dot(v))


@settings(max_examples=30, deadline=None)
@given(matrices(3, 4), st.lists(small, min_size=3, max_size=3))
def test_span_coordinates(rows, coeffs):
    basis = span_basis(list(rows), 4, QQ)
    sc = SpanCoordinates(basis, QQ)
    v = QQ.array(coeffs).dot(rows)
    c = sc.coords(v)
    assert c is not None and np.array_equal(np.asarray(c, dtype=object).dot(basis), v)


def test_rref_pivots():
    r, piv = rref(QQ.array([[2, 4], [1, 2]]), QQ)
    assert piv == [0] and r[0, 1] == 2


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), matrices(3, 3), st.sampled_from([0, 5]))
def test_fast_einsum_matches_object_einsum(a, b, p):
    f = GF(p) if p else QQ
    a, b = f.array(a), f.array(b)
    if not p:
        a = a * Fraction(1, 3)
    want = np.einsum("ij,jk->ik", a, b)
    got = es("ij,jk->ik", a, b)
    assert np.array_equal(got, want)
    assert all(isinstance(x, type(want.flat[0])) for x in got.flat)


def test_fast_einsum_falls_back_on_overflow():
    big = QQ.array([[10 ** 12, 1], [1, 10 ** 12]])
    assert np.array_equal(es("ij,jk->ik", big, big), big.dot(big))


def test_scalar_output():
    v = QQ.array([1, 2, 3])
    assert es("i,i->", v, v) == 14
