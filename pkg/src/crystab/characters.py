"""The ramified character eps_p, the inducing character tau and the delta function.

Group elements are 2x2 matrices with rational entries, stored as tuples
(a, b, c, d) of Fractions.  Teichmuller representatives inside matrices are
their integer truncations modulo p^M.
"""

from fractions import Fraction
from functools import lru_cache

from .padic import (DomainError, PadicConfig, PadicElem, teichmuller_int, vp_int,
                    vp_rational)


# ---------------------------------------------------------------------------
# 2x2 matrices over Q


def mat(a, b, c, d):
    return (Fraction(a), Fraction(b), Fraction(c), Fraction(d))


IDENTITY = mat(1, 0, 0, 1)


def mat_mul(g, h):
    a, b, c, d = g
    e, f, x, y = h
    return (a * e + b * x, a * f + b * y, c * e + d * x, c * f + d * y)


def mat_det(g):
    return g[0] * g[3] - g[1] * g[2]


def mat_inv(g):
    det = mat_det(g)
    if det == 0:
        raise DomainError("singular matrix")
    a, b, c, d = g
    return (d / det, -b / det, -c / det, a / det)


def mat_scale(g, s):
    s = Fraction(s)
    return tuple(s * x for x in g)


def entry_valuation(x, p):
    """v_p of a rational entry; None for zero."""
    if x == 0:
        return None
    return vp_rational(x, p)


def unit_part(x, p):
    x = Fraction(x)
    return x / Fraction(p) ** vp_rational(x, p)


def rational_mod(x, mod):
    """A p-integral rational reduced to an integer modulo `mod`."""
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, mod) % mod


# ---------------------------------------------------------------------------
# discrete logarithm on 1 + pZ_p


def dlog_series(y, p, n):
    """t mod p^{n-1} with y = (1+p)^t mod p^n, via the p-adic logarithm."""
    y = Fraction(y)
    if y == 1:
        return 0
    if vp_rational(y - 1, p) < 1:
        raise DomainError("dlog expects an element of 1 + pZ_p")
    target = n + 1

    def log(z):
        x = z - 1
        total = Fraction(0)
        k = 1
        power = x
        while True:
            total += Fraction((-1) ** (k + 1)) * power / k
            k += 1
            power *= x
            # remaining terms have valuation >= k - log_p(k) > target
            if k - _floor_log(k, p) > target + 1:
                break
        return total

    ratio = log(y) / log(Fraction(1 + p))
    mod = p ** (n - 1)
    return rational_mod(ratio, mod)


def _floor_log(k, p):
    r = 0
    while k >= p:
        k //= p
        r += 1
    return r


@lru_cache(maxsize=None)
def _dlog_table(p, n):
    mod = p ** n
    table = {}
    x = 1
    for t in range(p ** (n - 1)):
        table[x] = t
        x = x * (1 + p) % mod
    return table


def dlog_bruteforce(y, p, n):
    mod = p ** n
    key = rational_mod(y, mod)
    try:
        return _dlog_table(p, n)[key]
    except KeyError:
        raise DomainError("dlog expects an element of 1 + pZ_p")


def dlog(y, p, n):
    if p ** (n - 1) <= 10 ** 4:
        return dlog_bruteforce(y, p, n)
    return dlog_series(y, p, n)


# ---------------------------------------------------------------------------


class RamifiedCharacter:
    """eps_p of conductor p^n: tame exponent kappa, wild twist c with
    eps_p(1+p) = zeta_{p^{n-1}}^c.  Extended to Q_p^x by eps_p(p) = 1."""

    def __init__(self, cfg, kappa, c):
        p = cfg.p
        if c % p == 0:
            raise DomainError("the wild twist c must be prime to p (conductor exactly p^n)")
        self.cfg = cfg
        self.kappa = kappa % (p - 1)
        self.c = c % (p ** (cfg.n - 1))

    def __repr__(self):
        return f"RamifiedCharacter(p={self.cfg.p}, n={self.cfg.n}, kappa={self.kappa}, c={self.c})"

    def with_cfg(self, cfg):
        return RamifiedCharacter(cfg, self.kappa, self.c)

    def _parts(self, x):
        """(teichmuller residue, zeta exponent) for a rational unit x."""
        cfg = self.cfg
        p, n = cfg.p, cfg.n
        x = Fraction(x)
        if x == 0 or vp_rational(x, p) != 0:
            raise DomainError("eps_p is evaluated on units of Z_p")
        xbar = rational_mod(x, p)
        mod = p ** n
        tl = teichmuller_int(xbar, p, n + 1)
        y = rational_mod(x, mod) * pow(tl, -1, mod) % mod
        t = dlog(y, p, n)
        return xbar, (p * self.c * t) % cfg.pn

    def eval_parts(self, x):
        """eps_p(x) as (integer tame factor mod p^M, exponent k of zeta_{p^n})."""
        cfg = self.cfg
        xbar, k = self._parts(x)
        tame = pow(teichmuller_int(xbar, cfg.p, cfg.M), self.kappa, cfg.pM)
        return tame, k

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x, cfg=None):
        """eps_p on a nonzero rational (p-powers map to 1)."""
        cfg = cfg or self.cfg
        x = _rational(x)
        x = unit_part(x, cfg.p)
        tame, k = self.eval_parts(x)
        return PadicElem.zeta_power(cfg, k) * tame

    def eval_inv(self, x, cfg=None):
        cfg = cfg or self.cfg
        x = _rational(x)
        x = unit_part(x, cfg.p)
        tame, k = self.eval_parts(x)
        inv_tame = pow(tame, -1, cfg.pM)
        return PadicElem.zeta_power(cfg, -k) * inv_tame

    def zeta_prime(self, cfg=None):
        """eps_p(1+p), a primitive p^{n-1}-th root of unity."""
        return self.eval(1 + self.cfg.p, cfg)

    def zeta_minus(self, cfg=None):
        """eps_p^{-1}(1-p)."""
        return self.eval_inv(1 - self.cfg.p, cfg)


def _rational(x):
    if isinstance(x, PadicElem):
        return x.as_rational()
    return Fraction(x)


def eval_eps(chi, x):
    return chi.eval(x)


def in_InZ(g, p, n):
    """Decompose g = p^s * k with k in I(n); return (s, k) or None."""
    vals = [entry_valuation(x, p) for x in g]
    s = min(v for v in vals if v is not None)
    k = mat_scale(g, Fraction(1, p) ** s)
    for x in k:
        if x != 0 and vp_rational(x, p) < 0:
            return None
    if vp_rational(mat_det(k), p) != 0:
        return None
    if k[2] != 0 and vp_rational(k[2], p) < n:
        return None
    return s, k


def eval_tau(chi, g):
    """tau on I(n)Z: eps_p of the upper-left entry of the I(n) part."""
    cfg = chi.cfg
    dec = in_InZ(g, cfg.p, cfg.n)
    if dec is None:
        raise DomainError("element is not in I(n)Z")
    return chi.eval(dec[1][0])


def in_BIn(g, p, n):
    """Membership in B(Q_p) I(n) via the bottom row."""
    c, d = g[2], g[3]
    if d == 0:
        return False
    if c == 0:
        return True
    return vp_rational(c, p) - vp_rational(d, p) >= n


def iwasawa_BIn(g, p, n):
    """g = b u with b upper triangular and u = (1 0; c/d 1) in I(n); returns (b, u)."""
    if not in_BIn(g, p, n):
        raise DomainError("element is not in B I(n)")
    a, b, c, d = g
    q = c / d
    u = mat(1, 0, q, 1)
    bb = (a - b * q, b, Fraction(0), d)
    return bb, u


def delta(g, k, a, chi):
    """delta(g) = |det b|^{-1/2} rho(b) tau(u) for g = b u, and 0 off B I(n).

    The half-integral absolute values cancel, leaving
    eps_p(x) (a p^{1-k})^{v(x)} (a^{-1})^{v(z)} p^{v(z)} for b = (x y; 0 z)."""
    cfg = chi.cfg
    p, n = cfg.p, cfg.n
    a = PadicElem.coerce(cfg, a)
    if not in_BIn(g, p, n):
        return cfg.zero()
    b, _ = iwasawa_BIn(g, p, n)
    x, z = b[0], b[3]
    vx = vp_rational(x, p)
    vz = vp_rational(z, p)
    out = chi.eval(x)
    if vx:
        out = out * (a * Fraction(p) ** (1 - k)) ** vx
    if vz:
        out = out * a ** (-vz)
        out = out.scale_p(vz)
    return out


def coset_reps(p, n):
    """x_1, ..., x_{n+1}: identity, then (1 0; p^s 1) for s = n-1 down to 0."""
    reps = [IDENTITY]
    for s in range(n - 1, -1, -1):
        reps.append(mat(1, 0, p ** s, 1))
    return reps


def teich_matrix_entry(mu, cfg):
    return teichmuller_int(mu, cfg.p, cfg.M)


def delta_sums(k, a, chi):
    """sum over mu of delta(x_i^{-1} (p [mu]; 0 1)) for i = 1 .. n+1."""
    cfg = chi.cfg
    p, n = cfg.p, cfg.n
    out = []
    for x in coset_reps(p, n):
        xinv = mat_inv(x)
        total = cfg.zero()
        for mu in range(p):
            g = mat_mul(xinv, mat(p, teich_matrix_entry(mu, cfg), 0, 1))
            total = total + delta(g, k, a, chi)
        out.append(total)
    return out
