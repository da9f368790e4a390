import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystab import cind
from crystab.characters import RamifiedCharacter, mat, mat_mul
from crystab.padic import PadicConfig

P = 5


def rational_matrices(p):
    ent = st.builds(Fraction, st.integers(-40, 40), st.sampled_from([1, 1, p, p * p, 2, 3]))
    return st.tuples(ent, ent, ent, ent).filter(lambda g: g[0] * g[3] - g[1] * g[2] != 0)


@given(rational_matrices(P))
def test_canonical_decomposition(g):
    for sub in (cind.KZ, cind.InZ):
        key, h = cind.canonicalize(g, sub, P, 2)
        assert mat_mul(cind.section(key, P), h) == g
        ok = cind.is_in_KZ(h, P) if sub == cind.KZ else cind.is_in_InZ(h, P, 2)
        assert ok


@given(rational_matrices(P), rational_matrices(P), st.lists(st.integers(0, P - 1), min_size=4,
                                                             max_size=4))
def test_action_and_hecke_commute(g1, g2, v):
    kz = cind.FpSym(P, 3, cind.KZ, det_power=1)
    f = cind.CindElement.bracket(kz, g2, v)
    assert cind.act_cind(g1, f).equals(cind.CindElement.bracket(kz, mat_mul(g1, g2), v))
    assert cind.hecke_T_sigma(cind.act_cind(g1, f)).equals(
        cind.act_cind(g1, cind.hecke_T_sigma(f)))


def test_tree_neighbours():
    one = cind.CindElement.bracket(cind.FpSym(P, 0, cind.KZ), mat(1, 0, 0, 1), [1])
    t1 = cind.hecke_T_sigma(one)
    assert sorted(cind.tree_depth(k, P) for k in t1.support()) == [1] * (P + 1)


def test_hecke_script_commutes_padic():
    cfg = PadicConfig(3, 2, 5)
    chi = RamifiedCharacter(cfg, 1, 1)
    mod = cind.PadicSym(chi, 4)
    rng = random.Random(3)
    for _ in range(3):
        g1 = mat(rng.randrange(1, 9), 3, rng.randrange(9) * 3, 1)
        f = cind.CindElement.bracket(mod, mat(1, 1, 0, 3), [rng.randrange(9) for _ in range(5)])
        diff = cind.hecke_T_script(cind.act_cind(g1, f)) - cind.act_cind(g1, cind.hecke_T_script(f))
        assert diff.is_zero()


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3)])
def test_coset_decomposition(p, n):
    ok, sizes, total = cind.coset_decomposition_check(p, n)
    assert ok and sum(sizes) == total


@pytest.mark.parametrize("r,kappa,nu", [(8, 1, 1), (9, 0, 1), (10, 1, 2), (11, 0, 2)])
def test_representatives(r, kappa, nu):
    assert cind.representative_check(5, r, kappa, nu) == (True, True)
