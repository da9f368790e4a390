"""Eigenvalue expressions: integers, p, W (uniformizer), S (its square root),
Z (eps_p(1+p)), T(j) (Teichmuller lift), sqrt(e), + - * / and integer powers."""

from dataclasses import dataclass

from .padic import DomainError, sqrt, teichmuller


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"parse error at position {pos}: {message}\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # one of p, W, S, Z


@dataclass(frozen=True)
class Teich:
    j: int


@dataclass(frozen=True)
class Sqrt:
    arg: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


SYMBOLS = ("p", "W", "S", "Z")


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            word = text[i:j]
            if word not in SYMBOLS + ("T", "sqrt"):
                raise ParseError(f"unknown name {word!r}", text, i)
            toks.append(("name", word, i))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in "*/":
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            node = Pow(node, self.exponent())
        return node

    def exponent(self):
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            k = self.exponent()
            self.take(")")
            return k
        if tok[0] == "-":
            self.take()
            return -self.exponent()
        if tok[0] == "int":
            return self.take()[1]
        raise ParseError("exponents must be integers", self.text, tok[2])

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            return Num(self.take()[1])
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            name = self.take()[1]
            if name in SYMBOLS:
                return Sym(name)
            self.take("(")
            if name == "T":
                sign = -1 if self.peek()[0] == "-" else 1
                if sign < 0:
                    self.take()
                j = self.take("int")[1] * sign
                self.take(")")
                return Teich(j)
            node = Sqrt(self.expr())
            self.take(")")
            return node
        what = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", self.text, tok[2])


def parse(text):
    parser = _Parser(text)
    node = parser.expr()
    parser.take("end")
    return node


def to_text(node):
    """Printed form; parse(to_text(t)) == t."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Teich):
        return f"T({node.j})"
    if isinstance(node, Sqrt):
        return f"sqrt({to_text(node.arg)})"
    if isinstance(node, Neg):
        return f"(-{to_text(node.arg)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Pow):
        exp = str(node.exp) if node.exp >= 0 else f"({node.exp})"
        base = to_text(node.base)
        if isinstance(node.base, Pow):
            base = f"({base})"
        return f"{base}^{exp}"
    raise TypeError(f"not an expression node: {node!r}")


def needs_quad(node):
    """Whether evaluation may need the square root of the uniformizer."""
    if isinstance(node, Sym):
        return node.name == "S"
    if isinstance(node, Sqrt):
        return True
    if isinstance(node, Neg):
        return needs_quad(node.arg)
    if isinstance(node, Pow):
        return needs_quad(node.base)
    if isinstance(node, BinOp):
        return needs_quad(node.left) or needs_quad(node.right)
    return False


def evaluate(node, cfg, chi=None):
    if isinstance(node, Num):
        return cfg(node.value)
    if isinstance(node, Sym):
        if node.name == "p":
            return cfg(cfg.p)
        if node.name == "W":
            return cfg.varpi()
        if node.name == "S":
            return cfg.sqrt_varpi()
        if chi is None:
            raise DomainError("Z needs a character")
        return chi.zeta_prime(cfg)
    if isinstance(node, Teich):
        return teichmuller(node.j % cfg.p, cfg)
    if isinstance(node, Sqrt):
        return sqrt(evaluate(node.arg, cfg, chi))
    if isinstance(node, Neg):
        return -evaluate(node.arg, cfg, chi)
    if isinstance(node, Pow):
        return evaluate(node.base, cfg, chi) ** node.exp
    if isinstance(node, BinOp):
        x, y = evaluate(node.left, cfg, chi), evaluate(node.right, cfg, chi)
        if node.op == "+":
            return x + y
        if node.op == "-":
            return x - y
        if node.op == "*":
            return x * y
        if y.is_exact_zero:
            raise DomainError("division by zero")
        return x / y
    raise TypeError(f"not an expression node: {node!r}")
