import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from partialhopf.catalog import group_algebra, h4_dual_named, sweedler_h4
from partialhopf.field import GF, QQ
from partialhopf.hopf import (AntipodeError, antipode_inverse, antipode_power, change_basis, check_hopf_morphism,
                              check_structure, dual_hopf, end_algebra, iterated_coproduct, op_cop,
                              solve_antipode, tensor_algebra)

from conftest import HOPF_NAMES, entry


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_catalog_hopf_axioms(name):
    rep = check_structure(entry(name), "hopf")
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_dual_is_hopf(name):
    assert check_structure(dual_hopf(entry(name)), "hopf").ok


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_double_dual_is_identity(name):
    h = entry(name)
    hh = dual_hopf(dual_hopf(h))
    assert check_hopf_morphism(h.field.eye(h.dim), h, hh).ok


def test_h4_relations():
    h = sweedler_h4()
    one, c, x, cx = (h.e(i) for i in range(4))
    assert np.array_equal(h.mul(x, c), -cx)
    assert np.array_equal(h.mul(c, c), one)
    assert not any(h.mul(x, x))
    assert list(h.counit) == [1, 1, 0, 0]


def test_h4_antipode_order():
    h = sweedler_h4()
    assert not np.array_equal(antipode_power(h, 2), h.field.eye(4))
    assert np.array_equal(antipode_power(h, 4), h.field.eye(4))
    assert np.array_equal(antipode_power(h, -1).dot(h.antipode), h.field.eye(4))


def test_h4_needs_odd_characteristic():
    with pytest.raises(ValueError):
        sweedler_h4(GF(2))


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_solved_antipode_matches(name):
    h = entry(name)
    assert np.array_equal(solve_antipode(h.algebra, h.coalgebra), h.antipode)


def test_missing_antipode_detected():
    # the bialgebra k[x] with x group-like has no antipode
    f = QQ
    mult = f.zeros((2, 2, 2))
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = mult[1, 1, 1] = f.one
    comult = f.zeros((2, 2, 2))
    comult[0, 0, 0] = comult[1, 1, 1] = f.one
    from partialhopf.hopf import AlgebraData, CoalgebraData
    with pytest.raises(AntipodeError):
        solve_antipode(AlgebraData(f, mult, f.array([1, 0])), CoalgebraData(f, comult, f.array([1, 1])))


@pytest.mark.parametrize("n,p", [(1, 0), (2, 0), (3, 7), (4, 5), (5, 11)])
def test_group_algebras(n, p):
    h = group_algebra(n, GF(p) if p else QQ)
    assert check_structure(h).ok
    assert np.array_equal(antipode_power(h, 2), h.field.eye(n))


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_op_cop_is_hopf(name):
    assert check_structure(op_cop(entry(name))).ok


def test_iterated_coproduct_coassociative():
    h = sweedler_h4()
    d3 = iterated_coproduct(h, 3)
    alt = np.einsum("ipm,mqr->ipqr", h.comult, h.comult)
    assert np.array_equal(d3, alt)


def test_end_and_tensor_algebras():
    e = end_algebra(3, QQ)
    assert check_structure(e, "algebra").ok
    assert check_structure(tensor_algebra(e, group_algebra(2).algebra), "algebra").ok


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_change_basis_preserves_axioms(entries):
    h = sweedler_h4()
    c = QQ.array(entries).reshape(4, 4) + QQ.eye(4) * 7      # diagonally dominant, invertible
    assert check_structure(change_basis(h, c)).ok


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3).filter(bool))
def test_corrupted_constant_is_caught(i, j, k, delta):
    h = sweedler_h4()
    mult = h.mult.copy()
    mult[i, j, k] = mult[i, j, k] + delta
    from partialhopf.hopf import AlgebraData, HopfData
    bad = HopfData(AlgebraData(h.field, mult, h.unit, h.names), h.coalgebra, h.antipode)
    rep = check_structure(bad)
    assert not rep.ok
    assert all(c.counterexample is not None for c in rep.failures())


def test_antipode_inverse_required():
    h = sweedler_h4()
    from partialhopf.hopf import HopfData
    bad = HopfData(h.algebra, h.coalgebra, h.field.zeros((4, 4)))
    with pytest.raises(AntipodeError):
        antipode_inverse(bad)
