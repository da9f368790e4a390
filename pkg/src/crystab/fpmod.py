"""Finite F_p-representations of GL_2: symmetric powers, homogeneous function
spaces I_h, the induced module from I(n)Z to KZ with its filtration, and the
quotient of Sym^r by the submodule U.

F_pbar is modelled by F_p throughout.  Group elements are integer 4-tuples
(a, b, c, d) for the matrix (a b; c d).
"""

from functools import lru_cache
from math import comb

from .padic import DomainError, teichmuller_int


class ConsistencyError(AssertionError):
    """An internal consistency check failed."""


def plus_rep(h, p):
    """The representative of h mod p-1 in 1..p-1."""
    r = h % (p - 1)
    return r if r else p - 1


def minus_rep(h, p):
    """The representative of h mod p-1 in 0..p-2."""
    return h % (p - 1)


def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            # a primitive root mod p that is not one mod p^2 generates (Z/p^n)^x
            return g if pow(g, p - 1, p * p) != 1 else g + p
    return 1 if p == 2 else None


def _prime_factors(m):
    out, q = [], 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# linear algebra over F_p


class Subspace:
    """A subspace of F_p^dim kept in reduced row echelon form."""

    def __init__(self, p, dim, vectors=()):
        self.p = p
        self.dim = dim
        self.rows = {}  # pivot column -> row with 1 at the pivot
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        p = self.p
        v = [x % p for x in v]
        for col, row in self.rows.items():
            c = v[col]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = (v[j] - c * x) % p
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, v):
        """Insert v; return True when the dimension grows."""
        p = self.p
        v = self.reduce(v)
        col = next((j for j, x in enumerate(v) if x), None)
        if col is None:
            return False
        inv = pow(v[col], -1, p)
        v = [x * inv % p for x in v]
        for c, row in self.rows.items():
            if row[col]:
                f = row[col]
                self.rows[c] = [(x - f * y) % p for x, y in zip(row, v)]
        self.rows[col] = v
        return True

    def basis(self):
        return [self.rows[c] for c in sorted(self.rows)]

    def copy(self):
        out = Subspace(self.p, self.dim)
        out.rows = {c: list(r) for c, r in self.rows.items()}
        return out


def close_under(space, ops):
    """Smallest subspace containing `space` and stable under the linear maps `ops`."""
    queue = list(space.basis())
    while queue:
        v = queue.pop()
        for op in ops:
            w = op(v)
            if space.add(w):
                queue.append(w)
    return space


def rank_mod(rows, p):
    return len(Subspace(p, len(rows[0]) if rows else 0, rows))


# ---------------------------------------------------------------------------
# symmetric powers


@lru_cache(maxsize=4096)
def sym_matrix(r, g, mod=None):
    """Matrix T with (g.v)_i = sum_j v_j T[j][i] for v(x,y) -> v(ax+cy, bx+dy).

    Index j is the coefficient of x^(r-j) y^j.  Entries are integers, reduced
    mod `mod` when given."""
    a, b, c, d = g
    # powers of the linear forms ax+cy and bx+dy in the (x^(m-i) y^i) basis
    def powers(u, w):
        out = [[1]]
        for _ in range(r):
            prev = out[-1]
            nxt = [0] * (len(prev) + 1)
            for i, x in enumerate(prev):
                nxt[i] += u * x
                nxt[i + 1] += w * x
            if mod:
                nxt = [x % mod for x in nxt]
            out.append(nxt)
        return out

    P = powers(a, c)
    Q = powers(b, d)
    T = []
    for j in range(r + 1):
        A = P[r - j]
        B = Q[j]
        row = [0] * (r + 1)
        for i1, x in enumerate(A):
            if x:
                for i2, y in enumerate(B):
                    if y:
                        row[i1 + i2] += x * y
        if mod:
            row = [x % mod for x in row]
        T.append(tuple(row))
    return tuple(T)


def apply_sym(g, coeffs, mod=None):
    """Act on a coefficient vector (any ring supporting + and * by int)."""
    r = len(coeffs) - 1
    g = tuple(int(x) for x in g)
    T = sym_matrix(r, g, mod)
    out = [0] * (r + 1)
    for j, cj in enumerate(coeffs):
        if isinstance(cj, int) and cj == 0:
            continue
        for i, t in enumerate(T[j]):
            if t:
                out[i] = out[i] + cj * t
    if mod:
        out = [x % mod for x in out]
    return out


class SymPoly:
    """Homogeneous polynomial of degree r over Z/mod (mod = p for F_p, p^M for
    truncated Z_p, None for exact integers).

    Twist data: the action of g is multiplied by det(g)^det_power and, when
    tau_kappa is set, by the reduction of eps_p(g_11) = g_11^kappa (F_p only)."""

    __slots__ = ("r", "coeffs", "mod", "det_power", "tau_kappa")

    def __init__(self, r, coeffs, mod=None, det_power=0, tau_kappa=None):
        if len(coeffs) != r + 1:
            raise DomainError("coefficient vector must have length r+1")
        self.r = r
        self.mod = mod
        self.coeffs = tuple(c % mod for c in coeffs) if mod else tuple(coeffs)
        self.det_power = det_power
        self.tau_kappa = tau_kappa

    @classmethod
    def monomial(cls, r, j, mod=None, **kw):
        """x^(r-j) y^j."""
        v = [0] * (r + 1)
        v[j] = 1
        return cls(r, v, mod, **kw)

    @classmethod
    def zero(cls, r, mod=None, **kw):
        return cls(r, [0] * (r + 1), mod, **kw)

    def _like(self, coeffs):
        return SymPoly(self.r, coeffs, self.mod, self.det_power, self.tau_kappa)

    def __add__(self, other):
        return self._like([x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self._like([x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._like([-x for x in self.coeffs])

    def scale(self, s):
        return self._like([s * x for x in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.r == other.r
                and self.mod == other.mod and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.r, self.mod, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def reduce(self, mod):
        return SymPoly(self.r, self.coeffs, mod, self.det_power, self.tau_kappa)

    def act(self, g):
        out = apply_sym(g, self.coeffs, self.mod)
        s = 1
        a, b, c, d = (int(x) for x in g)
        if self.det_power:
            if not self.mod:
                raise DomainError("determinant twists need a modulus")
            s = pow(a * d - b * c, self.det_power, self.mod)
        if self.tau_kappa is not None:
            s = s * pow(a, self.tau_kappa, self.mod)
        if s != 1:
            out = [s * x for x in out]
        return self._like(out)

    def evaluate(self, x, y):
        r = self.r
        tot = sum(c * x ** (r - j) * y ** j for j, c in enumerate(self.coeffs))
        return tot % self.mod if self.mod else tot

    def __repr__(self):
        terms = [f"{c}*x^{self.r - j}*y^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"SymPoly(r={self.r}, {' + '.join(terms) or '0'})"


# ---------------------------------------------------------------------------
# homogeneous functions on F_p^2 minus the origin


def p1_reps(p):
    """Representatives of P^1(F_p): (1, c) for c in F_p, then (0, 1)."""
    return [(1, c) for c in range(p)] + [(0, 1)]


class IModule:
    """A degree-h homogeneous function F_p^2 \\ 0 -> F_p, stored by its values
    on the points (1, c) and (0, 1).  det_power records the twist I_h(m)."""

    __slots__ = ("p", "h", "values", "det_power")

    def __init__(self, p, h, values, det_power=0):
        if len(values) != p + 1:
            raise DomainError("an element of I_h has p+1 free values")
        self.p = p
        self.h = h % (p - 1)
        self.values = tuple(v % p for v in values)
        self.det_power = det_power

    @classmethod
    def delta(cls, p, h, point, det_power=0):
        """delta_[u,v]: supported on the line through `point`, value lambda^h at lambda*point."""
        u, v = point[0] % p, point[1] % p
        vals = [0] * (p + 1)
        if u:
            # (u, v) = u * (1, v/u), so delta(1, v/u) = u^-h
            idx = v * pow(u, -1, p) % p
            vals[idx] = pow(pow(u, -1, p), h % (p - 1), p)
        else:
            vals[p] = pow(pow(v, -1, p), h % (p - 1), p)
        return cls(p, h, vals, det_power)

    @classmethod
    def from_poly(cls, poly, p, det_power=0):
        vals = [poly.evaluate(x, y) % p for x, y in p1_reps(p)]
        return cls(p, poly.r, vals, det_power)

    @classmethod
    def basis(cls, p, h, det_power=0):
        out = []
        for i in range(p + 1):
            vals = [0] * (p + 1)
            vals[i] = 1
            out.append(cls(p, h, vals, det_power))
        return out

    def __call__(self, x, y):
        p = self.p
        x, y = x % p, y % p
        if x:
            return pow(x, self.h, p) * self.values[y * pow(x, -1, p) % p] % p
        if y:
            return pow(y, self.h, p) * self.values[p] % p
        return 0

    def points(self):
        p = self.p
        return [(x, y) for x in range(p) for y in range(p) if x or y]

    def _like(self, values):
        return IModule(self.p, self.h, values, self.det_power)

    def __add__(self, other):
        return self._like([a + b for a, b in zip(self.values, other.values)])

    def scale(self, s):
        return self._like([s * a for a in self.values])

    def __eq__(self, other):
        return (isinstance(other, IModule) and self.p == other.p and self.h == other.h
                and self.values == other.values)

    def __hash__(self):
        return hash((self.p, self.h, self.values))

    def is_zero(self):
        return not any(self.values)

    def act(self, g):
        """(g f)(x, y) = f((x, y) g), times det(g)^det_power."""
        p = self.p
        a, b, c, d = (int(x) % p for x in g)
        s = pow(a * d - b * c, self.det_power % (p - 1), p)
        vals = [s * self(x * a + y * c, x * b + y * d) for x, y in p1_reps(p)]
        return self._like(vals)


def i_module_quotient_map(f):
    """f in I_h maps to sum_{(u,v) != 0} f(u,v) (vX - uY)^d in Sym^d, d = <-h>_-.

    The target is twisted by det^h (returned in det_power)."""
    p = f.p
    d = minus_rep(-f.h, p)
    out = [0] * (d + 1)
    for u, v in f.points():
        val = f(u, v)
        if not val:
            continue
        # (vX - uY)^d = sum_j C(d, j) v^(d-j) (-u)^j X^(d-j) Y^j
        for j in range(d + 1):
            out[j] += val * comb(d, j) * pow(v, d - j, p) * pow(-u, j, p)
    return SymPoly(d, out, p, det_power=f.h + f.det_power)


# ---------------------------------------------------------------------------
# the induced module F_p[KZ] (x)_{F_p[I(n)Z]} chi_t


class InducedModule:
    """Basis: cosets g I(n) of GL_2(Z/p^n), keyed by the first column in P^1(Z/p^n).

    Keys ('c', c) for [1:c] with section (1 0; c 1) and ('d', d) for [dp:1]
    with section (dp -1; 1 0).  An upper triangular b acts on the generator
    of chi_t by d^t with d its lower right entry; diag(p,p) acts trivially."""

    def __init__(self, p, n, t):
        self.p, self.n, self.t = p, n, t % (p - 1)
        self.pn = p ** n
        self.keys = [("c", c) for c in range(self.pn)] + [("d", d) for d in range(p ** (n - 1))]
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.dim = len(self.keys)
        self._tables = {}
        self.filtration = None

    def key_of_column(self, a, c):
        p, pn = self.p, self.pn
        a, c = a % pn, c % pn
        if a % p:
            return ("c", c * pow(a, -1, pn) % pn)
        if c % p == 0:
            raise DomainError("column is not primitive")
        return ("d", (a * pow(c, -1, pn) % pn) // p)

    def section(self, key):
        kind, x = key
        if kind == "c":
            return (1, 0, x, 1)
        return (x * self.p % self.pn, -1 % self.pn, 1, 0)

    def _mul(self, g, h):
        pn = self.pn
        a, b, c, d = g
        e, f, x, y = h
        return ((a * e + b * x) % pn, (a * f + b * y) % pn,
                (c * e + d * x) % pn, (c * f + d * y) % pn)

    def _inv(self, g):
        pn = self.pn
        a, b, c, d = g
        di = pow((a * d - b * c) % pn, -1, pn)
        return (d * di % pn, -b * di % pn, -c * di % pn, a * di % pn)

    def table(self, g):
        """g as a monomial matrix: list of (target index, scalar) per basis index."""
        g = tuple(int(x) % self.pn for x in g)
        if g in self._tables:
            return self._tables[g]
        p = self.p
        out = []
        for key in self.keys:
            h = self._mul(g, self.section(key))
            key2 = self.key_of_column(h[0], h[2])
            b = self._mul(self._inv(self.section(key2)), h)
            if b[2] % self.pn:
                raise ConsistencyError("coset decomposition failed")
            out.append((self.index[key2], pow(b[3] % p, self.t, p) if self.t else 1))
        self._tables[g] = out
        return out

    def act(self, g, vec):
        p = self.p
        out = [0] * self.dim
        for i, (j, s) in enumerate(self.table(g)):
            if vec[i]:
                out[j] = (out[j] + s * vec[i]) % p
        return out

    def generators(self):
        """A generating set of GL_2(Z/p^n) (diag(p,p) acts trivially)."""
        g = primitive_root(self.p)
        return [(1, 1, 0, 1), (1, 0, 1, 1), (g, 0, 0, 1)]

    def e_vector(self, f, digits):
        """e_{f, i_1, ..., i_{n-1}} in the basis of cosets."""
        p, n, pn = self.p, self.n, self.pn
        M = n
        teich = [teichmuller_int(x, p, M) for x in range(p)]
        vec = [0] * self.dim
        tails = _digit_tuples(p, n - 1)
        for xs in tails:
            w = 1
            for xj, ij in zip(xs, digits):
                w = w * (pow(xj, ij, p) if ij else 1) % p
            if not w:
                continue
            low = sum(teich[xj] * p ** (j + 1) for j, xj in enumerate(xs))
            for xi in range(p):
                val = f(-xi, 1)
                if val:
                    key = ("c", (teich[xi] + low) % pn)
                    i = self.index[key]
                    vec[i] = (vec[i] + w * val) % p
            val = f(-1, 0)
            if val:
                key = ("d", (-low // p) % (p ** (n - 1)))
                i = self.index[key]
                vec[i] = (vec[i] + w * val) % p
        return vec


def _digit_tuples(p, length):
    out = [()]
    for _ in range(length):
        out = [t + (x,) for t in out for x in range(p)]
    return out


def base_p_digits(i, p, length):
    out = []
    for _ in range(length):
        out.append(i % p)
        i //= p
    return tuple(out)


def build_filtration(p, n, t, check=True):
    """The chain M_0 ⊂ M_1 ⊂ ... ⊂ M_{p^(n-1)} of the induced module.

    M_{i+1} is spanned by the e_{f, digits(i')} for i' <= i and f in I_{t-2i'}.
    Returns the module with `filtration` set to the list of subspaces."""
    mod = InducedModule(p, n, t)
    chain = [Subspace(p, mod.dim)]
    cur = Subspace(p, mod.dim)
    top = p ** (n - 1)
    for i in range(top):
        digits = base_p_digits(i, p, n - 1)
        for f in IModule.basis(p, t - 2 * i, det_power=i):
            cur.add(mod.e_vector(f, digits))
        chain.append(cur.copy())
    mod.filtration = chain
    if check:
        check_filtration(mod)
    return mod


def check_filtration(mod):
    """Raise ConsistencyError unless the chain has the expected shape, is
    stable under the generators and the quotient maps are equivariant."""
    p, n, t = mod.p, mod.n, mod.t
    chain = mod.filtration
    if len(chain[0]):
        raise ConsistencyError("M_0 is not zero")
    for i in range(1, len(chain)):
        if len(chain[i]) - len(chain[i - 1]) != p + 1:
            raise ConsistencyError(f"step {i} has codimension {len(chain[i]) - len(chain[i - 1])}")
    if len(chain[-1]) != mod.dim:
        raise ConsistencyError("the chain does not exhaust the module")
    gens = mod.generators()
    for i, sub in enumerate(chain):
        for g in gens:
            for v in sub.basis():
                if not sub.contains(mod.act(g, v)):
                    raise ConsistencyError(f"M_{i} is not stable under {g}")
    for i in range(len(chain) - 1):
        digits = base_p_digits(i, p, n - 1)
        lower = chain[i]
        for f in IModule.basis(p, t - 2 * i, det_power=i):
            ef = mod.e_vector(f, digits)
            for g in gens:
                lhs = mod.act(g, ef)
                rhs = mod.e_vector(f.act(g), digits)
                diff = [(x - y) % p for x, y in zip(lhs, rhs)]
                if not lower.contains(diff):
                    raise ConsistencyError(f"quotient map {i} is not equivariant for {g}")
    return True


# ---------------------------------------------------------------------------
# the series of Sym^r under I(n)Z and the quotient by U


def sigma_r_factors(r, kappa, p):
    """Characters of the graded pieces of Sym^r (top piece y^r first), as
    (s, m) meaning chi_s(m): diag(u, v) acts by v^s (uv)^m.  Each one is
    checked against the action of diagonal matrices with the tau twist."""
    out = []
    g = primitive_root(p)
    for j in range(r + 1):
        s, m = r - kappa - 2 * j, kappa + j
        mono = SymPoly.monomial(r, r - j, p, tau_kappa=kappa)  # x^j y^(r-j)
        for u, v in ((g, 1), (1, g), (g, g)):
            img = mono.act((u, 0, 0, v))
            expected = pow(v, s % (p - 1), p) * pow(u * v, m % (p - 1), p) % p
            if img.coeffs != mono.scale(expected).coeffs:
                raise ConsistencyError(f"graded piece {j} is not chi_{s}({m})")
        out.append((s, m))
    return out


def u_generators(r, p, top=True):
    """x^r and (x y^p - x^p y) x^(r-p-1-i) y^i over F_p for 0 <= i <= r-p-1,
    plus i = r-p (the polynomial y^(r-p+1)(y^(p-1) - x^(p-1))) when `top`."""
    if r < p + 1:
        raise DomainError("need r >= p+1")
    gens = [SymPoly.monomial(r, 0, p)]
    for i in range(r - p + (1 if top else 0)):
        v = [0] * (r + 1)
        # x^(r-p-i) y^(p+i) - x^(r-1-i) y^(i+1)
        v[p + i] += 1
        v[i + 1] -= 1
        gens.append(SymPoly(r, v, p))
    return gens


def build_W_quotient(r, kappa, p, top=True):
    """Returns (U as a Subspace of F_p^(r+1), basis monomials of Sym^r / U).

    U is closed under the generators of I(n)Z acting on Sym^r mod p."""
    if r < 2 * p - 2:
        raise DomainError("r must be at least 2p-2")
    g = primitive_root(p)
    ops = []
    for mat in ((1, 1, 0, 1), (g, 0, 0, 1), (1, 0, 0, g)):
        ops.append(lambda v, mat=mat: list(SymPoly(r, v, p, tau_kappa=kappa).act(mat).coeffs))
    U = Subspace(p, r + 1, [list(x.coeffs) for x in u_generators(r, p, top)])
    close_under(U, ops)
    quotient = [j for j in range(r + 1) if j not in U.rows]
    return U, quotient
