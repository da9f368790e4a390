import pytest
from hypothesis import given, strategies as st

from crystab.expr import (BinOp, Neg, Num, ParseError, Pow, Sqrt, Sym, Teich, evaluate, parse,
                          to_text)
from crystab.padic import PadicConfig

leaves = st.one_of(st.builds(Num, st.integers(0, 10 ** 4)),
                   st.builds(Sym, st.sampled_from(["p", "W", "S", "Z"])),
                   st.builds(Teich, st.integers(-9, 9)))


def extend(children):
    return st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Neg, children),
        st.builds(Sqrt, children),
        st.builds(Pow, children, st.integers(-5, 5)),
    )


def depth(node):
    kids = [getattr(node, f) for f in ("arg", "left", "right", "base") if hasattr(node, f)]
    return 1 + max((depth(k) for k in kids), default=0)


trees = st.recursive(leaves, extend, max_leaves=20).filter(lambda t: depth(t) <= 7)


@given(trees)
def test_round_trip(tree):
    assert parse(to_text(tree)) == tree


@pytest.mark.parametrize("text,pos", [("3 +* 2", 3), ("sqrt(Z-1", 8), ("T(x)", 2), ("2 $ 3", 2),
                                      ("p^W", 2), ("foo", 0), ("(1 + 2", 6), ("1 2", 2)])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert "^" in str(info.value)


def test_precedence():
    assert parse("1 + 2 * 3") == BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))
    assert parse("-p^2") == Neg(Pow(Sym("p"), 2))
    assert parse("W^(-1)") == Pow(Sym("W"), -1)


def test_evaluation():
    cfg = PadicConfig(5, 2, 6, quad=True)
    assert evaluate(parse("p"), cfg).w() == 4
    assert evaluate(parse("S^2 - W"), cfg).is_zero_to_precision
    assert evaluate(parse("sqrt(W)^2 / W"), cfg).agrees_with(cfg.one())
    assert evaluate(parse("T(2)^4"), cfg).agrees_with(cfg.one())
