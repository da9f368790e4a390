"""Compactly induced representations over I(n)Z and KZ, coset keys, the group
action and the Hecke operators.

An element [g]_H[w] is supported on H g^-1 and sends g^-1 to w.  Since
[g h]_H[w] = [g]_H[h w] for h in H, elements are stored as maps from the left
coset g H (a CosetKey with a fixed section s) to the vector attached to [s].
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .characters import (in_InZ, mat, mat_det, mat_inv, mat_mul, rational_mod,
                         vp_rational)
from .fpmod import ConsistencyError, apply_sym, primitive_root, sym_matrix
from .padic import DomainError, PadicElem, teichmuller_int

KZ = "KZ"
InZ = "InZ"


# ---------------------------------------------------------------------------
# coset keys


@dataclass(frozen=True)
class CosetKey:
    """Left coset g H.  (m, beta) names the tree vertex g KZ through the section
    (p^m beta; 0 1) with beta a canonical representative of Q_p / p^m Z_p.  For
    H = I(n)Z, point is the P^1(Z/p^n) point of the K-part: ('c', c) for [1:c]
    with section (1 0; c 1), ('d', d) for [dp:1] with section (dp -1; 1 0)."""
    m: int
    beta: Fraction
    point: tuple = None

    def __str__(self):
        pt = "" if self.point is None else f" {self.point[0]}{self.point[1]}"
        return f"({self.m},{self.beta}){pt}"


def _vp(x, p):
    return None if x == 0 else vp_rational(x, p)


def canonical_mod(b, m, p):
    """Canonical representative of b in Q_p / p^m Z_p, as a rational with base-p
    digits 0..p-1 in positions below m."""
    b = Fraction(b)
    if b == 0:
        return Fraction(0)
    e = vp_rational(b, p)
    if e >= m:
        return Fraction(0)
    unit = b / Fraction(p) ** e
    return Fraction(rational_mod(unit, p ** (m - e))) * Fraction(p) ** e


def is_in_KZ(g, p):
    vals = [_vp(x, p) for x in g]
    s = min(v for v in vals if v is not None)
    k = tuple(x / Fraction(p) ** s for x in g)
    return vp_rational(mat_det(k), p) == 0


def is_in_InZ(g, p, n):
    return in_InZ(g, p, n) is not None


def tree_section(m, beta, p):
    return mat(Fraction(p) ** m, beta, 0, 1)


def tree_decompose(g, p):
    """g = s h with s = (p^m beta; 0 1) and h in KZ."""
    g = tuple(Fraction(x) for x in g)
    a, b, c, d = g
    if mat_det(g) == 0:
        raise DomainError("singular matrix")
    # clear the lower left entry by a column operation in K
    if c != 0 and (d == 0 or vp_rational(c, p) < vp_rational(d, p)):
        a, b, c, d = b, a, d, c
    if c != 0:
        q = c / d
        a, c = a - b * q, Fraction(0)
    # now (a b; 0 d): normalize columns by units and reduce b
    va, vd = vp_rational(a, p), vp_rational(d, p)
    b = b * Fraction(p) ** vd / d
    m = va - vd
    beta = canonical_mod(b / Fraction(p) ** vd, m, p)
    s = tree_section(m, beta, p)
    h = mat_mul(mat_inv(s), g)
    if not is_in_KZ(h, p):
        raise ConsistencyError("tree decomposition left KZ")
    return (m, beta), s, h


def point_of_column(a, c, p, n):
    pn = p ** n
    a, c = rational_mod(a, pn), rational_mod(c, pn)
    if a % p:
        return ("c", c * pow(a, -1, pn) % pn)
    if c % p == 0:
        raise DomainError("column is not primitive")
    return ("d", (a * pow(c, -1, pn) % pn) // p)


def point_section(point, p):
    kind, x = point
    if kind == "c":
        return mat(1, 0, x, 1)
    return mat(x * p, -1, 1, 0)


def section(key, p):
    s = tree_section(key.m, key.beta, p)
    if key.point is not None:
        s = mat_mul(s, point_section(key.point, p))
    return s


def canonicalize(g, subgroup, p, n=None):
    """(key, h) with g = section(key) h and h in the subgroup."""
    (m, beta), s, h = tree_decompose(g, p)
    if subgroup == KZ:
        return CosetKey(m, beta), h
    if subgroup != InZ:
        raise DomainError(f"unknown subgroup {subgroup}")
    vals = [_vp(x, p) for x in h]
    j = min(v for v in vals if v is not None)
    k = tuple(x / Fraction(p) ** j for x in h)
    point = point_of_column(k[0], k[2], p, n)
    i = mat_mul(mat_inv(point_section(point, p)), k)
    h2 = tuple(x * Fraction(p) ** j for x in i)
    if not is_in_InZ(h2, p, n):
        raise ConsistencyError("I(n)Z decomposition failed")
    return CosetKey(m, beta, point), h2


def _int_matrix(g, mod):
    return tuple(rational_mod(x, mod) for x in g)


def _split_scalar(h, p):
    vals = [_vp(x, p) for x in h]
    j = min(v for v in vals if v is not None)
    return j, tuple(x / Fraction(p) ** j for x in h)


# ---------------------------------------------------------------------------
# coefficient modules


class PadicSym:
    """Sym^r over the truncated p-adic ring twisted by tau (the module induced
    from I(n)Z).  Vectors are tuples of PadicElem."""

    subgroup = InZ

    def __init__(self, chi, r):
        self.chi = chi
        self.cfg = chi.cfg
        self.r = r
        self.p = self.cfg.p
        self.n = self.cfg.n

    def zero(self):
        return tuple(self.cfg.zero() for _ in range(self.r + 1))

    def vector(self, coeffs):
        return tuple(PadicElem.coerce(self.cfg, c) for c in coeffs)

    def is_zero(self, v):
        return all(x.is_zero_to_precision for x in v)

    def add(self, v, w):
        return tuple(x + y for x, y in zip(v, w))

    def scale(self, s, v):
        return tuple(x * s for x in v)

    def monoid_act(self, g, v):
        """Sym action of an integral matrix (no tau): v(ax+cy, bx+dy)."""
        # exact rational matrix entries: no truncation error enters here
        T = sym_matrix(self.r, tuple(Fraction(x) for x in g))
        out = [self.cfg.zero()] * (self.r + 1)
        for j, cj in enumerate(v):
            if cj.is_exact_zero:
                continue
            for i, t in enumerate(T[j]):
                if t:
                    out[i] = out[i] + cj * t
        return tuple(out)

    def act(self, h, v):
        j, i = _split_scalar(h, self.p)
        out = self.monoid_act(i, v)
        t = self.chi.eval(i[0])
        out = tuple(x * t for x in out)
        if j:
            out = tuple(x.scale_p(j * self.r) for x in out)
        return out

    def fmt(self, v):
        return " ".join(repr(x) for x in v)


class FpSym:
    """Sym^r over F_p.  Over I(n)Z the twist is g_11^kappa (the reduction of
    tau with the |det|^((k-2)/2) factor making p act trivially); over KZ it is
    det^det_power.  Vectors are tuples of ints mod p."""

    def __init__(self, p, r, subgroup, kappa=0, det_power=0, n=None):
        self.p, self.r, self.subgroup = p, r, subgroup
        self.kappa, self.det_power, self.n = kappa, det_power, n

    def zero(self):
        return (0,) * (self.r + 1)

    def vector(self, coeffs):
        return tuple(int(c) % self.p for c in coeffs)

    def is_zero(self, v):
        return not any(v)

    def add(self, v, w):
        return tuple((x + y) % self.p for x, y in zip(v, w))

    def scale(self, s, v):
        s = rational_mod(s, self.p)
        return tuple(s * x % self.p for x in v)

    def monoid_act(self, g, v):
        return tuple(apply_sym(_int_matrix(g, self.p), list(v), self.p))

    def act(self, h, v):
        p = self.p
        _, k = _split_scalar(h, p)
        kk = _int_matrix(k, p)
        out = self.monoid_act(k, v)
        s = 1
        if self.subgroup == InZ and self.kappa:
            s = pow(kk[0], self.kappa, p)
        if self.subgroup == KZ and self.det_power:
            s = pow((kk[0] * kk[3] - kk[1] * kk[2]) % p, self.det_power, p)
        return tuple(s * x % p for x in out)

    def fmt(self, v):
        return " ".join(str(x) for x in v)


# ---------------------------------------------------------------------------
# elements


class CindElement:
    """A finite sum of [s]_H[v] over canonical sections s."""

    def __init__(self, module, terms=None):
        self.module = module
        self.terms = {}
        for key, v in (terms or {}).items():
            self._add_term(key, v)

    @property
    def subgroup(self):
        return self.module.subgroup

    @property
    def p(self):
        return self.module.p

    def _n(self):
        return getattr(self.module, "n", None)

    def _add_term(self, key, v):
        mod = self.module
        if key in self.terms:
            v = mod.add(self.terms[key], v)
        if mod.is_zero(v):
            self.terms.pop(key, None)
        else:
            self.terms[key] = v

    @classmethod
    def bracket(cls, module, g, v):
        """[g]_H[v]."""
        key, h = canonicalize(g, module.subgroup, module.p, getattr(module, "n", None))
        return cls(module, {key: module.act(h, module.vector(v))})

    def copy(self):
        return CindElement(self.module, dict(self.terms))

    def __add__(self, other):
        out = self.copy()
        for key, v in other.terms.items():
            out._add_term(key, v)
        return out

    def scale(self, s):
        out = CindElement(self.module)
        for key, v in self.terms.items():
            out._add_term(key, self.module.scale(s, v))
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not self.terms

    def equals(self, other):
        return (self - other).is_zero()

    def support(self):
        return sorted(self.terms, key=_key_order)

    def max_depth(self):
        return max((tree_depth(k, self.p) for k in self.terms), default=0)

    def dump(self):
        """One line per support term: key | vector coefficients."""
        return "\n".join(f"{k} | {self.module.fmt(self.terms[k])}" for k in self.support())

    def reduce_to_fp(self, kappa):
        """Coefficientwise reduction of a p-adic element over I(n)Z to F_p,
        certifying w >= 0 for every entry."""
        mod = self.module
        if not isinstance(mod, PadicSym):
            raise DomainError("only p-adic elements can be reduced")
        target = FpSym(mod.p, mod.r, InZ, kappa=kappa, n=mod.n)
        out = CindElement(target)
        for key, v in self.terms.items():
            for x in v:
                if not x.is_w_at_least(0):
                    raise DomainError("entry is not integral")
            out._add_term(key, tuple(x.residue() for x in v))
        return out


def _key_order(k):
    return (k.m, k.beta, k.point or ("", 0))


def tree_depth(key, p):
    """Distance from the base vertex: v(det) - 2 min v(entries) of the section."""
    vals = [key.m, 0]
    if key.beta != 0:
        vals.append(vp_rational(key.beta, p))
    return key.m - 2 * min(vals)


def act_cind(g, f):
    """g . sum [s][v] = sum [g s][v], recanonicalized."""
    mod = f.module
    p, n = mod.p, getattr(mod, "n", None)
    g = tuple(Fraction(x) for x in g)
    out = CindElement(mod)
    for key, v in f.terms.items():
        k2, h = canonicalize(mat_mul(g, section(key, p)), mod.subgroup, p, n)
        out._add_term(k2, mod.act(h, v))
    return out


def hecke_T_script(f):
    """sum over mu of [gamma (p [mu]; 0 1)][(1 -[mu]; 0 p) v] for each term [gamma][v]."""
    mod = f.module
    if not isinstance(mod, PadicSym):
        raise DomainError("the I(n)Z Hecke operator acts on p-adic coefficients")
    p, n, M = mod.p, mod.n, mod.cfg.M
    out = CindElement(mod)
    for key, v in f.terms.items():
        s = section(key, p)
        for mu in range(p):
            t = teichmuller_int(mu, p, M)
            w = mod.monoid_act((1, -t, 0, p), v)
            k2, h = canonicalize(mat_mul(s, mat(p, t, 0, 1)), InZ, p, n)
            out._add_term(k2, mod.act(h, w))
    return out


def hecke_T_sigma(f):
    """T = T+ + T- on ind_KZ^G sigma_t: the p+1 terms [g (p [l]; 0 1)][v(x, -l x)]
    and [g (1 0; 0 p)][v(0, y)]."""
    mod = f.module
    if not isinstance(mod, FpSym) or mod.subgroup != KZ:
        raise DomainError("T acts on F_p coefficients induced from KZ")
    p = mod.p
    out = CindElement(mod)
    for key, v in f.terms.items():
        s = section(key, p)
        for lam in range(p):
            w = mod.monoid_act((1, -lam, 0, 0), v)
            k2, h = canonicalize(mat_mul(s, mat(p, lam, 0, 1)), KZ, p)
            out._add_term(k2, mod.act(h, w))
        w = mod.monoid_act((0, 0, 0, 1), v)
        k2, h = canonicalize(mat_mul(s, mat(1, 0, 0, p)), KZ, p)
        out._add_term(k2, mod.act(h, w))
    return out


# ---------------------------------------------------------------------------
# finite group checks


def gl2_mod(p, n):
    """All of GL_2(Z/p^n) as integer 4-tuples."""
    pn = p ** n
    for a, b, c, d in product(range(pn), repeat=4):
        if (a * d - b * c) % p:
            yield (a, b, c, d)


def _mulmod(g, h, pn):
    a, b, c, d = g
    e, f, x, y = h
    return ((a * e + b * x) % pn, (a * f + b * y) % pn, (c * e + d * x) % pn, (c * f + d * y) % pn)


def borel_generators(p, n):
    """Generators of the upper triangular group mod p^n (the image of I(n) and of B)."""
    g = primitive_root(p)
    return [(g, 0, 0, 1), (1, 0, 0, g), (1, 1, 0, 1)]


def double_coset(x, p, n):
    """B x B in GL_2(Z/p^n) by closure under left and right generators."""
    pn = p ** n
    gens = borel_generators(p, n)
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for g in gens:
            for z in (_mulmod(g, y, pn), _mulmod(y, g, pn)):
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return seen


def coset_decomposition_check(p, n):
    """K = disjoint union over j of I(n) x_j B, exhaustively mod p^n.

    Returns (ok, sizes, total): the n+1 double cosets are pairwise disjoint and
    their union is all of GL_2(Z/p^n)."""
    pn = p ** n
    reps = [(1, 0, 0, 1)] + [(1, 0, p ** s % pn, 1) for s in range(n - 1, -1, -1)]
    cosets = [double_coset(x, p, n) for x in reps]
    sizes = [len(c) for c in cosets]
    union = set()
    disjoint = True
    for c in cosets:
        if union & c:
            disjoint = False
        union |= c
    total = sum(1 for _ in gl2_mod(p, n))
    return disjoint and len(union) == total, sizes, total


def coset_partition_check(p, n, sample=None, seed=0):
    """Keys of I(n)Z-cosets on GL_2(Z/p^n): the number of classes, their sizes,
    and invariance of the key under right multiplication by generators of I(n).

    With `sample` set, only that many random elements are keyed (class sizes are
    then sample counts)."""
    classes = {}
    gens = borel_generators(p, n)
    invariant = True
    elems = gl2_mod(p, n)
    if sample is not None:
        import random
        rng = random.Random(seed)
        pn = p ** n
        elems = []
        while len(elems) < sample:
            g = tuple(rng.randrange(pn) for _ in range(4))
            if (g[0] * g[3] - g[1] * g[2]) % p:
                elems.append(g)
    for g in elems:
        key, _ = canonicalize(g, InZ, p, n)
        classes[key] = classes.get(key, 0) + 1
        for b in gens:
            k2, _ = canonicalize(mat_mul(mat(*g), mat(*b)), InZ, p, n)
            if k2 != key:
                invariant = False
    return len(classes), sorted(set(classes.values())), invariant


def T_script_base_case(chi, r, coeffs, M=None):
    """T-script of sum_xi c_xi [(1 0; xi p^(n-1) 1)][eta] with sum c_xi = 0.
    Returns (element, every coefficient has v_p >= 2)."""
    from .eta import build_eta
    cfg = chi.cfg
    p, n = cfg.p, cfg.n
    if sum(coeffs) % p ** cfg.M:
        raise DomainError("the coefficients must sum to zero")
    mod = PadicSym(chi, r)
    eta = build_eta(p, r, M=cfg.M).eta.coeffs
    f = CindElement(mod)
    for xi, c in enumerate(coeffs):
        if c:
            f = f + CindElement.bracket(mod, mat(1, 0, xi * p ** (n - 1), 1), eta).scale(c)
    out = hecke_T_script(f)
    bound = 2 * cfg.w_scale
    ok = all(x.is_w_at_least(bound) for v in out.terms.values() for x in v)
    return out, ok


def representative_check(p, r, kappa, nu, n=2, M=4):
    """Compare T([1][X^(p-2)]) and T([1][Y^(p-2)]) on ind_KZ sigma_(p-2), pushed
    through [g][X^(p-2)] -> -[g][eta_nu] and [g][Y^(p-2)] -> -[g w][eta_nu],
    with the stated representatives in ind_(I(n)Z) Sigma_r over F_p.  Equality is
    tested coset by coset modulo U + span(x^(r-s) y^s : s < nu), the kernel of
    the projection onto the factor generated by eta_nu."""
    from .eta import build_eta
    from .fpmod import plus_rep
    if plus_rep(r + kappa, p) != 2 * nu - 1:
        raise DomainError("the representatives need <r+kappa>_+ = 2 nu - 1")
    t = p - 2
    kz = FpSym(p, t, KZ)
    inz = FpSym(p, r, InZ, kappa=kappa, n=n)
    eta_nu = [c % p for c in build_eta(p, r, M=M).etas[nu].coeffs]
    w = mat(0, -1, 1, 0)

    def push(elem):
        """Image of an element whose vectors are multiples of X^t or Y^t."""
        out = CindElement(inz)
        for key, v in elem.terms.items():
            s = section(key, p)
            if any(v[1:t]):
                raise ConsistencyError("vector outside the span of X^t and Y^t")
            if v[0]:
                out = out + CindElement.bracket(inz, s, eta_nu).scale(-v[0])
            if v[t]:
                out = out + CindElement.bracket(inz, mat_mul(s, w), eta_nu).scale(-v[t])
        return out

    one = mat(1, 0, 0, 1)
    X = CindElement.bracket(kz, one, [1] + [0] * t)
    Y = CindElement.bracket(kz, one, [0] * t + [1])
    lhs_x = push(hecke_T_sigma(X))
    rhs_x = CindElement(inz)
    for mu in range(p):
        rhs_x = rhs_x + CindElement.bracket(inz, mat(p, teichmuller_int(mu, p, M), 0, 1), eta_nu).scale(-1)
    lhs_y = push(hecke_T_sigma(Y))
    rhs_y = CindElement.bracket(inz, mat(0, 1, -p, 0), eta_nu)
    for mu in range(1, p):
        tm = teichmuller_int(mu, p, M)
        rhs_y = rhs_y + CindElement.bracket(inz, mat(p, tm, 0, 1), eta_nu).scale(pow(mu, p - 2, p))
    from .fpmod import build_W_quotient
    U, _ = build_W_quotient(r, kappa, p)
    lower = U.copy()
    for s_ in range(nu):
        v = [0] * (r + 1)
        v[s_] = 1
        lower.add(v)

    def agree(a, b):
        diff = a - b
        return all(not any(lower.reduce(list(v))) for v in diff.terms.values())

    return agree(lhs_x, rhs_x), agree(lhs_y, rhs_y)
