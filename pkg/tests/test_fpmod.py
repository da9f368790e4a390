import pytest
from hypothesis import given, strategies as st

from crystab.fpmod import (SymPoly, build_W_quotient, build_filtration, minus_rep, plus_rep,
                           sym_matrix)

P = 5


def gl2(p):
    return st.tuples(*[st.integers(0, p - 1)] * 4).filter(
        lambda g: (g[0] * g[3] - g[1] * g[2]) % p)


def _mul(g, h, p):
    a, b, c, d = g
    e, f, x, y = h
    return ((a * e + b * x) % p, (a * f + b * y) % p, (c * e + d * x) % p, (c * f + d * y) % p)


@given(gl2(P), gl2(P), st.lists(st.integers(0, P - 1), min_size=5, max_size=5))
def test_sym_is_a_representation(g, h, coeffs):
    v = SymPoly(4, coeffs, P)
    # left action: h first, then g
    assert v.act(h).act(g) == v.act(_mul(g, h, P))


@given(gl2(P), gl2(P))
def test_sym_matrix_multiplicative(g, h):
    A = sym_matrix(3, g, P)
    B = sym_matrix(3, h, P)
    C = sym_matrix(3, _mul(g, h, P), P)
    n = len(A)
    # row-vector convention: (gh).v = v T_h T_g
    BA = tuple(tuple(sum(B[i][k] * A[k][j] for k in range(n)) % P for j in range(n)) for i in range(n))
    assert C == BA


@given(st.integers(-100, 100), st.sampled_from([3, 5, 7, 11]))
def test_representatives(h, p):
    assert 1 <= plus_rep(h, p) <= p - 1 and (plus_rep(h, p) - h) % (p - 1) == 0
    assert 0 <= minus_rep(h, p) <= p - 2 and (minus_rep(h, p) - h) % (p - 1) == 0


@pytest.mark.parametrize("t", range(2))
def test_filtration_small(t):
    mod = build_filtration(3, 2, t)
    dims = [len(s) for s in mod.filtration]
    assert dims == [4 * i for i in range(4)]


@pytest.mark.parametrize("r,kappa", [(8, 0), (9, 1), (10, 3)])
def test_W_has_dimension_p_minus_1(r, kappa):
    U, quotient = build_W_quotient(r, kappa, 5)
    assert len(quotient) == 4
