import numpy as np
import pytest

from partialhopf.hopf import check_structure
from partialhopf.smash import ambient_product, build_twisted_smash, build_underline_smash, projection_rank

from conftest import GLOBAL_NAMES, PARTIAL_NAMES, entry, partial, underline


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_underline_is_unital_associative(name):
    s = underline(name)
    assert s.report.ok, s.report.summary()
    assert s.unit is not None


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_dimension_matches_projection_rank(name):
    assert underline(name).dim == projection_rank(partial(name))


@pytest.mark.parametrize("name", GLOBAL_NAMES)
def test_global_underline_is_full(name):
    d = partial(name)
    assert underline(name).dim == d.A.dim * d.H.dim


@pytest.mark.parametrize("name", GLOBAL_NAMES)
def test_twisted_smash_associative(name):
    t = build_twisted_smash(entry(name))
    assert check_structure(t.algebra(), "algebra").ok


def test_kx_zero_product():
    d = partial("kx-in-h4")
    amb = ambient_product(d)
    n = d.H.dim
    x_t = np.kron(d.A.e(1), d.H.e(1))
    x_p = np.kron(d.A.e(1), d.H.e(2))
    assert not any(amb.multiply(x_t, x_p))


def test_projection_fixes_unit():
    for name in PARTIAL_NAMES:
        amb = ambient_product(partial(name))
        assert np.array_equal(amb.project(amb.unit), amb.unit)
