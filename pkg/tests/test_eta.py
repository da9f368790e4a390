import pytest
from hypothesis import given, strategies as st

from crystab import eta
from crystab.characters import RamifiedCharacter
from crystab.padic import DomainError, PadicConfig


@pytest.mark.parametrize("p,r", [(3, 4), (3, 7), (5, 8), (5, 13), (7, 12)])
def test_eta_identities(p, r):
    fam = eta.build_eta(p, r, M=6)
    bad = [(n, d) for n, ok, d in eta.verify_eta_identities(fam) if not ok]
    assert not bad


def test_eta_needs_large_r():
    with pytest.raises(DomainError):
        eta.build_eta(5, 7)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_vandermonde(m, u, v):
    assert eta.van_det(m, u, v) == eta.van_det_direct(m, u, v)


@given(st.sampled_from([3, 5, 7]), st.data())
def test_coefficient_closed_form(p, data):
    u = data.draw(st.integers(0, 3 * p))
    s = data.draw(st.integers(1, p - 1))
    rk = data.draw(st.integers(0, p - 2))
    assert eta.coeff_closed(u, s, rk, p) == eta.coeff_direct(u, s, rk, p)


@pytest.mark.parametrize("p", [5, 7])
def test_nice_systems(p):
    bad = [(s.case, s.nu, s.w, s.rk) for s in eta.nice_sweep(p) if not s.ok]
    assert not bad


def test_matrix_criterion_agrees():
    agree, total, _ = eta.matrix_criterion_agreement(5, 200, seed=11)
    assert agree == total


def test_c_constant_leading_terms():
    chi = RamifiedCharacter(PadicConfig(5, 3, 8), 0, 1)
    assert all(ok for _, ok in eta.c_constant_report(chi, xis=[1, 2]))


def test_teichmuller_difference():
    assert all(ok for _, ok in eta.teich_delta_identity(7, 3))
