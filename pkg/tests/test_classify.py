from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystab import classify as cl
from crystab.characters import RamifiedCharacter
from crystab.padic import DomainError, PadicConfig, sqrt

CFG = PadicConfig(5, 2, 16, quad=True)
CHI = RamifiedCharacter(CFG, 0, 1)
S = CFG.sqrt_varpi()
A_CENTRE = sqrt(CHI.zeta_prime(CFG) - 1)

fq = st.builds(lambda x, y: cl.FqElem(7, x, y), st.integers(0, 6), st.integers(0, 6))


@given(fq, fq, fq)
def test_fq_field_laws(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + y - y == x
    if not x.is_zero():
        assert (x * x.inverse() - cl.FqElem(7, 1)).is_zero()


@given(fq, st.integers(1, 5))
def test_nth_roots(value, m):
    roots, field = cl.nth_roots(value, m)
    assert all(z ** m == value for z in roots)
    if field == "F_p^2":
        assert not any(cl.FqElem(7, x) ** m == value for x in range(7))


@given(st.integers(0, 6))
def test_lambda_pair(m):
    mu = cl.FqElem(7, m)
    (l1, l2), _ = cl.lambda_pair(mu)
    assert l1 * l2 == cl.FqElem(7, 1) and l1 + l2 == mu


@pytest.mark.parametrize("p", [3, 5, 7])
def test_banach_correspondence_respects_isomorphism(p):
    labels = [cl.Irreducible(p, h, l) for h in range(1, p) for l in range(p - 1)]
    for x in labels:
        for y in labels:
            same = x.key() == y.key()
            assert same == (cl.to_banach(x).key() == cl.to_banach(y).key())


@pytest.mark.parametrize("p", [5, 7])
def test_irreducible_twist_isomorphism(p):
    for h in range(2, p):
        for l in range(p - 1):
            a = cl.Irreducible(p, h, l)
            b = cl.Irreducible(p, p + 1 - h, l + h - 1)
            assert a.key() == b.key()


def test_slopes():
    assert cl.slope_and_nu(A_CENTRE) == (Fraction(1, 2), 1, True)
    assert cl.slope_and_nu(S ** 15) == (Fraction(3, 2), 2, True)
    assert cl.slope_and_nu(CFG(5))[2] is False
    assert cl.slope_and_nu(CFG(25))[2] is False
    assert cl.slope_problem(Fraction(0), 5) == "slope must be positive"
    assert cl.slope_problem(Fraction(1), 5) == "slope is an integer"
    assert cl.slope_problem(Fraction(5, 2), 5) == "slope is not below (p-1)/2"


def test_regions():
    assert cl.region_member(A_CENTRE, 1, CHI)
    assert cl.region_member(-A_CENTRE, 1, CHI)
    assert cl.region_member(S ** 5, 1, CHI)  # varpi^p is close to zeta' - 1 when c = 1
    assert not cl.region_member(S ** 5 * 2, 1, CHI)
    assert not cl.region_member(A_CENTRE, 2, CHI)
    assert cl.region_member(sqrt(CHI.zeta_prime(CFG) - 1 + S ** 15), 1, CHI)


def test_region_needs_quarter_shift():
    # a^2 = 2 (zeta' - 1) has slope 1/2 but sits outside D_1; needs p = 7 for the root
    cfg = PadicConfig(7, 2, 16, quad=True)
    chi = RamifiedCharacter(cfg, 0, 1)
    a = sqrt(2 * (chi.zeta_prime(cfg) - 1))
    assert a.w() == Fraction(1, 2)
    assert not cl.region_member(a, 1, chi)
    res = cl.classify_galois(3, a, chi)
    assert res.determined and isinstance(res.label, cl.Irreducible)


def test_centre_reducible_mu_zero():
    res = cl.classify_galois(11, A_CENTRE, CHI)
    assert res.determined
    lab = res.label
    assert isinstance(lab, cl.Reducible) and lab.mu.mu.is_zero() and lab.l % 4 == 1
    ban = cl.to_banach(res).label
    assert isinstance(ban, cl.BRed) and ban.l % 4 == 1


def test_off_component_irreducible():
    res = cl.classify_galois(13, A_CENTRE, CHI)
    assert res.determined and str(res.label) == "ind(w2^2) (x) w^3"
    assert str(cl.to_banach(res).label) == "(ind sigma_1 / T) (x) w^3"


@pytest.mark.parametrize("k,expected", [(3, "ind(w2^2) (x) w^0"), (4, "ind(w2^3) (x) w^2")])
def test_two_component_shortcut(k, expected):
    res = cl.classify_galois(k, S ** 15, CHI)
    assert res.shortcut is not None and str(res.shortcut) == expected
    assert res.determined and res.label.key() == res.shortcut.key()


def test_undetermined_components_keep_candidates():
    res = cl.classify_galois(6, S ** 15, CHI)
    assert not res.determined and len(res.candidates) == 2


def test_domain_errors():
    with pytest.raises(DomainError):
        cl.classify_galois(4, CFG(5), CHI)
    with pytest.raises(DomainError):
        cl.classify_galois(1, A_CENTRE, CHI)


@pytest.mark.parametrize("p", [5, 7])
def test_consistency_sweep(p):
    bad = [name for name, ok in cl.consistency_sweep(p) if not ok]
    assert not bad


def test_branch_flip_negates_mu():
    a = sqrt(CHI.zeta_prime(CFG) - 1 + S ** 15 * 2)
    r1, r2 = cl.classify_galois(3, a, CHI), cl.classify_galois(3, -a, CHI)
    assert not r1.label.mu.mu.is_zero()
    assert r2.label.mu.mu == -r1.label.mu.mu


def test_weak_admissibility():
    assert cl.weak_admissibility(cl.FilteredModuleSpec(4, Fraction(1, 2)))
    assert cl.weak_admissibility(cl.FilteredModuleSpec(4, Fraction(3)))
    assert not cl.weak_admissibility(cl.FilteredModuleSpec(4, Fraction(7, 2)))
    assert not cl.weak_admissibility(cl.FilteredModuleSpec(4, Fraction(-1)))
    assert not cl.weak_admissibility(cl.FilteredModuleSpec(4, Fraction(0))).positive


def test_eigenform_slope_check():
    assert cl.eigenform_slope_check(1, 3, A_CENTRE, CHI, 2).verdict == "consistent with reducible"
    assert cl.eigenform_slope_check(1, 4, A_CENTRE, CHI, 2).verdict == \
        "locally irreducible forced"
    assert cl.eigenform_slope_check(7, 4, CFG(5), CHI, 2).verdict == \
        "not covered (slope is an integer)"
    with pytest.raises(DomainError):
        cl.eigenform_slope_check(1, 3, A_CENTRE, CHI, 1)
    with pytest.raises(DomainError):
        cl.eigenform_slope_check(10, 3, A_CENTRE, CHI, 2)
