from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystab.characters import RamifiedCharacter, coset_reps, delta_sums, mat_inv, mat_mul
from crystab.padic import DomainError, PadicConfig

CFG = PadicConfig(5, 2, 6)


def unit_ints(p):
    return st.integers(1, 10 ** 6).filter(lambda x: x % p)


@given(unit_ints(5), unit_ints(5), st.integers(0, 3), st.sampled_from([1, 2, 3, 4]))
def test_character_is_multiplicative(x, y, kappa, c):
    chi = RamifiedCharacter(CFG, kappa, c)
    assert chi(x * y).agrees_with(chi(x) * chi(y))
    assert (chi(x) * chi.eval_inv(x)).agrees_with(CFG.one())


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_zeta_prime_order(c):
    chi = RamifiedCharacter(CFG, 0, c)
    z = chi.zeta_prime()
    assert (z ** 5).agrees_with(CFG.one())
    assert not (z - 1).is_zero_to_precision
    assert (z - 1).w() == 1


def test_tame_part():
    chi = RamifiedCharacter(CFG, 2, 1)
    for x in range(1, 5):
        assert chi(x).residue() == pow(x, 2, 5)


def test_conductor_must_be_exact():
    with pytest.raises(DomainError):
        RamifiedCharacter(CFG, 0, 5)


def test_coset_representatives():
    reps = coset_reps(3, 2)
    assert len(reps) == 3
    assert reps[1][2] == 3 and reps[2][2] == 1


@pytest.mark.parametrize("k", [2, 4, 7])
def test_delta_sums(k):
    chi = RamifiedCharacter(CFG, 1, 2)
    a = CFG.varpi() ** 2 * 3
    sums = delta_sums(k, a, chi)
    assert sums[0].agrees_with(a * Fraction(5) ** (2 - k))
    assert all(s.is_zero_to_precision for s in sums[1:])
