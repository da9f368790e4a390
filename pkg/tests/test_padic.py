from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystab.padic import (DomainError, PadicConfig, PadicElem, PrecisionError, sqrt,
                           teichmuller)

CFG = PadicConfig(3, 2, 8)
CFGQ = PadicConfig(3, 2, 8, quad=True)

coeff = st.integers(-10 ** 6, 10 ** 6)


def elems(cfg):
    return st.builds(lambda a, v: PadicElem.from_coeffs(cfg, a, v=v),
                     st.lists(coeff, min_size=1, max_size=cfg.e), st.integers(-2, 2))


def units(cfg):
    return elems(cfg).filter(lambda x: not x.is_zero_to_precision and x.vp() == 0)


@given(elems(CFG), elems(CFG), elems(CFG))
def test_ring_laws(x, y, z):
    assert ((x + y) + z).agrees_with(x + (y + z))
    assert (x * (y + z)).agrees_with(x * y + x * z)
    assert (x * y).agrees_with(y * x)


@given(elems(CFG), elems(CFG))
def test_valuation_is_multiplicative(x, y):
    if x.is_zero_to_precision or y.is_zero_to_precision:
        return
    try:
        wx, wy, wxy = x.w(), y.w(), (x * y).w()
    except PrecisionError:
        return
    assert wxy == wx + wy


@given(elems(CFG), elems(CFG))
def test_ultrametric(x, y):
    s = x + y
    if x.is_zero_to_precision or y.is_zero_to_precision or s.is_zero_to_precision:
        return
    assert s.w() >= min(x.w(), y.w())
    if x.w() != y.w():
        assert s.w() == min(x.w(), y.w())


@given(units(CFG))
def test_inverse(x):
    assert (x * x.inverse()).agrees_with(CFG.one())


@given(units(CFGQ))
def test_sqrt_squares_back(x):
    try:
        y = sqrt(x * x)
    except (DomainError, PrecisionError):
        pytest.skip("no certified root")
    assert (y * y).agrees_with(x * x)


def test_uniformizer_valuations():
    for p, n in ((3, 2), (5, 2), (3, 3)):
        cfg = PadicConfig(p, n, 6, quad=True)
        assert cfg.varpi().w() == Fraction(1, p)
        assert cfg.sqrt_varpi().w() == Fraction(1, 2 * p)
        assert cfg(p).w() == cfg.w_scale


@pytest.mark.parametrize("p", [3, 5, 7])
def test_teichmuller(p):
    cfg = PadicConfig(p, 2, 6)
    for xi in range(1, p):
        t = teichmuller(xi, cfg)
        assert (t ** (p - 1)).agrees_with(cfg.one())
        assert t.residue() == xi


def test_precision_is_certified_or_raised():
    x = (CFG.one() + 3 ** 8) - 1  # absolute precision p^8
    assert x.is_zero_to_precision
    with pytest.raises(PrecisionError):
        x.w()
    with pytest.raises(PrecisionError):
        x.is_w_at_least(100)
    assert x.is_w_at_least(1)


def test_residue_of_non_integral_raises():
    with pytest.raises(DomainError):
        CFG(Fraction(1, 3)).residue()


def test_env_precision(monkeypatch):
    monkeypatch.setenv("CRYSTAB_PRECISION", "7")
    assert PadicConfig(3, 2).M == 7
    monkeypatch.setenv("CRYSTAB_PRECISION", "zero")
    with pytest.raises(DomainError):
        PadicConfig(3, 2)
