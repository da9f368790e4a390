"""Truncated arithmetic in Q_p(zeta_{p^n}) and its quadratic extension by sqrt(zeta - 1).

Elements are stored as p^v * (A(zeta) + B(zeta) * u) where A, B are integer
vectors in the basis zeta^0 .. zeta^{e-1}, u^2 = zeta - 1, and the coefficients
are known modulo p^m.  The vector is kept normalized: unless m == 0 some
coefficient is prime to p.  m == 0 means "zero up to p^v".
"""

import os
from fractions import Fraction
from functools import lru_cache


class PrecisionError(ArithmeticError):
    """Raised when an answer cannot be certified at the working precision."""


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


DEFAULT_PRECISION = 16


def default_precision():
    raw = os.environ.get("CRYSTAB_PRECISION")
    if raw is None or raw.strip() == "":
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"CRYSTAB_PRECISION must be an integer, got {raw!r}")
    if value < 1:
        raise DomainError("CRYSTAB_PRECISION must be at least 1")
    return value


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def vp_int(x, p):
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp_rational(x, p):
    x = Fraction(x)
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


class PadicConfig:
    """Parameters of the tower: prime p, conductor exponent n, precision M, and
    whether the square root of the uniformizer is adjoined."""

    __slots__ = ("p", "n", "M", "quad", "e", "N", "pn", "pM", "_hash")

    def __init__(self, p, n, M=None, quad=False):
        if M is None:
            M = default_precision()
        if not (isinstance(p, int) and p > 2 and is_prime(p)):
            raise DomainError(f"p must be an odd prime, got {p}")
        if not (isinstance(n, int) and n >= 2):
            raise DomainError(f"n must be an integer >= 2, got {n}")
        if not (isinstance(M, int) and M >= 1):
            raise DomainError(f"precision must be >= 1, got {M}")
        self.p = p
        self.n = n
        self.M = M
        self.quad = bool(quad)
        self.N = p ** (n - 1)
        self.e = self.N * (p - 1)
        self.pn = p ** n
        self.pM = p ** M
        self._hash = hash((p, n, M, self.quad))

    def __eq__(self, other):
        return (isinstance(other, PadicConfig) and self.p == other.p and self.n == other.n
                and self.M == other.M and self.quad == other.quad)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PadicConfig(p={self.p}, n={self.n}, M={self.M}, quad={self.quad})"

    @property
    def ram_index(self):
        """Ramification index of the top field over Q_p."""
        return 2 * self.e if self.quad else self.e

    @property
    def w_scale(self):
        """Factor turning v_p into the renormalized valuation w."""
        return self.p ** (self.n - 2) * (self.p - 1)

    def with_precision(self, M):
        return PadicConfig(self.p, self.n, M, self.quad)

    def with_quad(self, quad=True):
        return PadicConfig(self.p, self.n, self.M, quad)

    # convenient constructors
    def __call__(self, x):
        return PadicElem.coerce(self, x)

    def zero(self):
        return PadicElem(self, None, 0, None, None)

    def one(self):
        return PadicElem.from_rational(self, 1)

    def zeta(self, k=1):
        """zeta_{p^n}^k."""
        return PadicElem.zeta_power(self, k)

    def varpi(self):
        """The uniformizer zeta - 1 of K_n."""
        return self.zeta(1) - 1

    def sqrt_varpi(self):
        if not self.quad:
            raise DomainError("sqrt(varpi) needs the quadratic extension (quad=True)")
        b = [0] * self.e
        b[0] = 1
        return PadicElem._make(self, 0, self.M, [0] * self.e, b)


# ---------------------------------------------------------------------------
# coefficient-vector kernels


def _reduce_cyclotomic(vec, cfg):
    """Reduce a vector indexed by exponents mod p^n to length e modulo Phi_{p^n}."""
    N, p, e = cfg.N, cfg.p, cfg.e
    top = vec[e:e + N]
    if not any(top):
        return vec[:e]
    out = vec[:e]
    for j in range(p - 1):
        base = j * N
        for i, t in enumerate(top):
            if t:
                out[base + i] -= t
    return out


def _polymul(a, b, cfg, mod):
    """Product of two length-e vectors of residues mod `mod`, reduced in K_n."""
    e = cfg.e
    a = [x % mod for x in a]
    b = [x % mod for x in b]
    nz_b = [(i, x) for i, x in enumerate(b) if x]
    if len(nz_b) <= 2:
        res = [0] * cfg.pn
        pn = cfg.pn
        for j, y in nz_b:
            for i, x in enumerate(a):
                if x:
                    res[(i + j) % pn] += x * y
        return [c % mod for c in _reduce_cyclotomic(res, cfg)]
    slot_bits = 2 * (mod - 1).bit_length() + e.bit_length() + 1
    nbytes = (slot_bits + 7) // 8
    pa = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in a), "little")
    pb = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in b), "little")
    prod = (pa * pb).to_bytes(nbytes * 2 * e, "little")
    pn = cfg.pn
    res = [0] * pn
    for i in range(2 * e - 1):
        c = int.from_bytes(prod[i * nbytes:(i + 1) * nbytes], "little")
        if c:
            res[i % pn] += c
    return [c % mod for c in _reduce_cyclotomic(res, cfg)]


def _taylor_first_unit(coeffs, p):
    """Index of the first coefficient of A(1+X) not divisible by p, or None.

    Over F_p the cyclotomic relation becomes X^e = 0, so this is the
    varpi-adic valuation of A when some coefficient of A is a unit."""
    a = [c % p for c in coeffs]
    while a and a[-1] == 0:
        a.pop()
    j = 0
    while a:
        s = sum(a) % p
        if s:
            return j
        # divide A(x) - A(1) = A(x) by (x - 1)
        q = [0] * (len(a) - 1)
        acc = 0
        for i in range(len(a) - 1, 0, -1):
            acc = (acc + a[i]) % p
            q[i - 1] = acc
        a = q
        while a and a[-1] == 0:
            a.pop()
        j += 1
    return None


def _content(vec, p, limit):
    """Smallest p-adic valuation among entries, capped at `limit`."""
    best = limit
    for c in vec:
        if c:
            v = 0
            while v < best and c % p == 0:
                c //= p
                v += 1
            if v < best:
                best = v
                if best == 0:
                    return 0
    return best


def _vec_valuation_varpi(vec, cfg, m):
    """varpi-adic valuation of an integer vector known mod p^m, or None if it
    is zero to that precision."""
    t = _content(vec, cfg.p, m)
    if t >= m:
        return None
    if t:
        pt = cfg.p ** t
        vec = [c // pt for c in vec]
    j = _taylor_first_unit(vec, cfg.p)
    return cfg.e * t + j


@lru_cache(maxsize=None)
def _teich_int(xi, p, M):
    mod = p ** M
    x = xi % p
    if x == 0:
        return 0
    while True:
        y = pow(x, p, mod)
        if y == x:
            return x
        x = y


def teichmuller_int(xi, p, M):
    """Teichmuller lift of xi mod p as an integer in [0, p^M)."""
    return _teich_int(xi % p, p, M)


class PadicElem:
    __slots__ = ("cfg", "v", "m", "a", "b")

    def __init__(self, cfg, v, m, a, b):
        self.cfg = cfg
        self.v = v
        self.m = m
        self.a = a
        self.b = b

    # -- construction -----------------------------------------------------

    @staticmethod
    def _make(cfg, v, m, a, b):
        """Normalize raw data into an element."""
        p = cfg.p
        if m <= 0:
            return PadicElem(cfg, v + m, 0, None, None)
        mod = p ** m
        a = [c % mod for c in a]
        if b is not None:
            b = [c % mod for c in b]
            if not any(b):
                b = None
        t = _content(a, p, m)
        if b is not None and t:
            t = min(t, _content(b, p, m))
        if t >= m:
            return PadicElem(cfg, v + m, 0, None, None)
        if t:
            pt = p ** t
            a = [c // pt for c in a]
            if b is not None:
                b = [c // pt for c in b]
        return PadicElem(cfg, v + t, m - t, tuple(a), None if b is None else tuple(b))

    @classmethod
    def from_rational(cls, cfg, x, prec=None):
        x = Fraction(x)
        if x == 0:
            return cfg.zero()
        m = cfg.M if prec is None else prec
        p = cfg.p
        num, den = x.numerator, x.denominator
        v = 0
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        mod = p ** m
        unit = num * pow(den, -1, mod) % mod
        a = [0] * cfg.e
        a[0] = unit
        return cls._make(cfg, v, m, a, None)

    @classmethod
    def zeta_power(cls, cfg, k):
        vec = [0] * cfg.pn
        vec[k % cfg.pn] = 1
        return cls._make(cfg, 0, cfg.M, _reduce_cyclotomic(vec, cfg), None)

    @classmethod
    def from_coeffs(cls, cfg, a, b=None, v=0, m=None):
        """Build p^v * (sum a_i zeta^i + u * sum b_i zeta^i) with coefficients mod p^m."""
        m = cfg.M if m is None else m
        a = list(a) + [0] * (cfg.pn - len(a))
        a = _reduce_cyclotomic(_fold(a, cfg.pn), cfg)
        if b is not None:
            if not cfg.quad:
                raise DomainError("u-coefficients need quad=True")
            b = list(b) + [0] * (cfg.pn - len(b))
            b = _reduce_cyclotomic(_fold(b, cfg.pn), cfg)
        return cls._make(cfg, v, m, a, b)

    @classmethod
    def coerce(cls, cfg, x):
        if isinstance(x, PadicElem):
            if x.cfg != cfg:
                if x.cfg.p == cfg.p and x.cfg.n == cfg.n:
                    return x.change_cfg(cfg)
                raise DomainError("elements from different towers")
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(cfg, x)
        raise TypeError(f"cannot coerce {type(x).__name__} into a p-adic element")

    def cap(self, abs_prec):
        """The same element known only modulo p^abs_prec."""
        if self.v is None:
            return PadicElem(self.cfg, abs_prec, 0, None, None)
        if self.v + self.m <= abs_prec:
            return self
        if self.m == 0 or abs_prec <= self.v:
            return PadicElem(self.cfg, min(self.v, abs_prec), 0, None, None)
        return PadicElem._make(self.cfg, self.v, abs_prec - self.v, list(self.a),
                               None if self.b is None else list(self.b))

    def change_cfg(self, cfg):
        """Move into another precision / quad setting of the same tower."""
        if self.b is not None and not cfg.quad:
            raise DomainError("element involves sqrt(varpi) but target has quad=False")
        if self.v is None:
            return cfg.zero()
        m = min(self.m, cfg.M)
        if self.m == 0:
            return PadicElem(cfg, self.v, 0, None, None)
        return PadicElem._make(cfg, self.v, m, list(self.a), None if self.b is None else list(self.b))

    # -- predicates -------------------------------------------------------

    @property
    def is_exact_zero(self):
        return self.v is None

    @property
    def is_zero_to_precision(self):
        return self.v is None or self.m == 0

    @property
    def abs_precision(self):
        """Absolute precision as a power of p (None for exact zero)."""
        if self.v is None:
            return None
        return self.v + self.m

    def in_base_field(self):
        return self.b is None

    def _vecs(self):
        e = self.cfg.e
        a = list(self.a) if self.a is not None else [0] * e
        b = list(self.b) if self.b is not None else None
        return a, b

    # -- arithmetic -------------------------------------------------------

    def _other(self, y):
        if isinstance(y, PadicElem):
            if y.cfg is self.cfg or y.cfg == self.cfg:
                return y
            return PadicElem.coerce(self.cfg, y)
        if isinstance(y, (int, Fraction)):
            return PadicElem.from_rational(self.cfg, y)
        return NotImplemented

    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        if self.v is None:
            return y
        if y.v is None:
            return self
        cfg = self.cfg
        p = cfg.p
        v0 = min(self.v, y.v)
        N = min(self.v + self.m, y.v + y.m)
        if N <= v0:
            return PadicElem(cfg, N, 0, None, None)
        a1, b1 = self._vecs()
        a2, b2 = y._vecs()
        s1 = p ** (self.v - v0)
        s2 = p ** (y.v - v0)
        a = [s1 * x + s2 * z for x, z in zip(a1, a2)]
        if b1 is None and b2 is None:
            b = None
        else:
            e = cfg.e
            b1 = b1 or [0] * e
            b2 = b2 or [0] * e
            b = [s1 * x + s2 * z for x, z in zip(b1, b2)]
        return PadicElem._make(cfg, v0, N - v0, a, b)

    __radd__ = __add__

    def __neg__(self):
        if self.v is None or self.m == 0:
            return self
        a, b = self._vecs()
        return PadicElem._make(self.cfg, self.v, self.m, [-x for x in a],
                               None if b is None else [-x for x in b])

    def __sub__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self + (-y)

    def __rsub__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return y + (-self)

    def __mul__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        cfg = self.cfg
        if self.v is None or y.v is None:
            return cfg.zero()
        v = self.v + y.v
        m = min(self.m, y.m)
        if m == 0:
            return PadicElem(cfg, v, 0, None, None)
        mod = cfg.p ** m
        a1, b1 = self._vecs()
        a2, b2 = y._vecs()
        a = _polymul(a1, a2, cfg, mod)
        b = None
        if b1 is not None and b2 is not None:
            bb = _polymul(b1, b2, cfg, mod)
            a = _add_vec(a, _mul_varpi(bb, cfg))
        if b1 is not None:
            b = _polymul(b1, a2, cfg, mod)
        if b2 is not None:
            t = _polymul(a1, b2, cfg, mod)
            b = t if b is None else _add_vec(b, t)
        return PadicElem._make(cfg, v, m, a, b)

    __rmul__ = __mul__

    def scale_p(self, k):
        """Multiply by p^k (exact shift)."""
        if self.v is None:
            return self
        return PadicElem(self.cfg, self.v + k, self.m, self.a, self.b)

    def __truediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self * y.inverse()

    def __rtruediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return y * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer exponents are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result = PadicElem.from_rational(self.cfg, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self):
        cfg = self.cfg
        if self.v is None or self.m == 0:
            raise PrecisionError("division by an element indistinguishable from 0")
        unit, shift = self._unit_inverse_data()
        return unit.scale_p(shift - self.v)

    def _unit_inverse_data(self):
        """Return (X, s) with X * p^s equal to the inverse of the normalized vector."""
        cfg = self.cfg
        core = PadicElem(cfg, 0, self.m, self.a, self.b)
        j = core.v_unif_core()
        if j == 0:
            return _unit_inverse(core), 0
        # multiply by a power of the uniformizer to land on p * unit
        if cfg.quad:
            comp = cfg.sqrt_varpi() ** (2 * cfg.e - j)
        else:
            comp = cfg.varpi() ** (cfg.e - j)
        d = core * comp
        # d has valuation exactly one power of p
        if d.v != 1:
            raise PrecisionError("could not certify the valuation of a divisor")
        unit = PadicElem(cfg, 0, d.m, d.a, d.b)
        return comp * _unit_inverse(unit), -1

    # -- valuations -------------------------------------------------------

    def v_unif_core(self):
        """Uniformizer valuation of the normalized vector (ignoring p^v)."""
        cfg = self.cfg
        if self.m == 0:
            raise PrecisionError("element is zero to working precision")
        ja = _vec_valuation_varpi(list(self.a), cfg, self.m)
        if not cfg.quad:
            return ja
        jb = None if self.b is None else _vec_valuation_varpi(list(self.b), cfg, self.m)
        cands = []
        if ja is not None:
            cands.append(2 * ja)
        if jb is not None:
            cands.append(2 * jb + 1)
        return min(cands)

    def valuations(self):
        """(v_p, v_unif, w) as exact rationals; None entries stand for +infinity."""
        return valuations(self)

    def vp(self):
        return valuations(self)[0]

    def w(self):
        return valuations(self)[2]

    def v_unif(self):
        return valuations(self)[1]

    def residue(self):
        return reduce_mod_m(self)

    def w_lower_bound(self):
        """A certified lower bound for w (exact when the element is not zero to precision)."""
        if self.v is None:
            return None
        if self.m == 0:
            return Fraction(self.v * self.cfg.w_scale)
        return self.w()

    def is_w_at_least(self, bound):
        """Certify w(self) >= bound, raising PrecisionError when undecidable."""
        bound = Fraction(bound)
        if self.v is None:
            return True
        if self.m == 0:
            if self.v * self.cfg.w_scale >= bound:
                return True
            raise PrecisionError(f"cannot certify w >= {bound} at the working precision")
        return self.w() >= bound

    def is_integral(self):
        return self.is_w_at_least(0)

    # -- misc -------------------------------------------------------------

    def conj_u(self):
        """Image under u -> -u."""
        if self.v is None or self.m == 0 or self.b is None:
            return self
        return PadicElem._make(self.cfg, self.v, self.m, list(self.a), [-x for x in self.b])

    def __eq__(self, other):
        """Equality of stored data (not a precision-aware comparison)."""
        if not isinstance(other, PadicElem):
            try:
                other = PadicElem.coerce(self.cfg, other)
            except (TypeError, DomainError):
                return NotImplemented
        return (self.cfg == other.cfg and self.v == other.v and self.m == other.m
                and self.a == other.a and self.b == other.b)

    def __hash__(self):
        return hash((self.v, self.m, self.a, self.b))

    def agrees_with(self, other):
        """True when self - other is zero at the common working precision."""
        return (self - other).is_zero_to_precision

    def digits(self):
        """Serialization: little-endian base-p digit strings per coefficient."""
        if self.v is None:
            return {"zero": True}
        p = self.cfg.p

        def enc(vec):
            out = []
            for c in vec:
                ds = []
                for _ in range(self.m):
                    ds.append(str(c % p))
                    c //= p
                out.append("".join(ds))
            return out

        data = {"v": self.v, "m": self.m}
        if self.m:
            data["a"] = enc(self.a)
            if self.b is not None:
                data["b"] = enc(self.b)
        return data

    def __repr__(self):
        if self.v is None:
            return "PadicElem(0)"
        if self.m == 0:
            return f"PadicElem(O(p^{self.v}))"
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.a) if c]
        if self.b is not None:
            terms += [f"{c}*z^{i}*u" for i, c in enumerate(self.b) if c]
        return f"PadicElem(p^{self.v}*({' + '.join(terms) or '0'}) + O(p^{self.v + self.m}))"

    def as_rational(self):
        """Integer representative when the element lies in Q_p (coefficient 0 only)."""
        if self.v is None:
            return Fraction(0)
        if self.m == 0:
            return Fraction(0)
        if self.b is not None or any(self.a[1:]):
            raise DomainError("element is not in Q_p")
        return Fraction(self.a[0]) * Fraction(self.cfg.p) ** self.v


def _fold(vec, modulus):
    out = [0] * modulus
    for i, c in enumerate(vec):
        if c:
            out[i % modulus] += c
    return out


def _add_vec(x, y):
    return [s + t for s, t in zip(x, y)]


def _mul_varpi(vec, cfg):
    """Multiply a length-e vector by zeta - 1."""
    e = cfg.e
    shifted = [0] * cfg.pn
    for i, c in enumerate(vec):
        if c:
            shifted[i + 1] += c
            shifted[i] -= c
    return _reduce_cyclotomic(shifted, cfg)


def _unit_inverse(x):
    """Inverse of an element with v == 0 whose vector is a unit."""
    cfg = x.cfg
    if x.b is not None:
        # (A + Bu)^{-1} = (A - Bu) / (A^2 - B^2 varpi)
        conj = x.conj_u()
        norm = x * conj
        if norm.b is not None:
            raise PrecisionError("norm computation lost the base field")
        return conj * _unit_inverse_base(norm)
    return _unit_inverse_base(x)


def _unit_inverse_base(x):
    cfg = x.cfg
    p = cfg.p
    if x.v != 0:
        raise PrecisionError("expected a unit")
    r = sum(x.a) % p
    if r == 0:
        raise PrecisionError("expected a unit")
    m = x.m
    y = PadicElem.from_rational(cfg, pow(r, -1, p), prec=m)
    # Newton: y <- y (2 - x y); error measured in varpi-adic digits
    target = cfg.e * m
    good = 1
    while good < target:
        y = y * (2 - x * y)
        good *= 2
    return y


def teichmuller(xi, cfg):
    """Teichmuller lift [xi] as an element."""
    if not (0 <= xi < cfg.p):
        raise DomainError("teichmuller expects a residue 0 <= xi < p")
    t = teichmuller_int(xi, cfg.p, cfg.M)
    if t == 0:
        return cfg.zero()
    return PadicElem.from_rational(cfg, t)


def valuations(x):
    """(v_p, v_unif, w) with v_p and w Fractions; +infinity is reported as None."""
    cfg = x.cfg
    if x.v is None:
        return (None, None, None)
    if x.m == 0:
        raise PrecisionError("element is indistinguishable from 0 at the working precision")
    j = x.v_unif_core()
    ram = cfg.ram_index
    v_unif = x.v * ram + j
    vp = Fraction(v_unif, ram)
    return (vp, v_unif, vp * cfg.w_scale)


def reduce_mod_m(x):
    """Image in the residue field F_p, returned as an integer in [0, p)."""
    cfg = x.cfg
    if x.v is None:
        return 0
    if x.m == 0:
        if x.v > 0:
            return 0
        raise PrecisionError("residue not certifiable at the working precision")
    if x.v > 0:
        return 0
    if x.v < 0:
        raise DomainError("element has negative valuation")
    return sum(x.a) % cfg.p


def sqrt(x):
    """Square root with the branch whose unit-part residue is smaller."""
    cfg = x.cfg
    p = cfg.p
    if x.v is None:
        return x
    if x.m == 0:
        raise PrecisionError("square root of an element indistinguishable from 0")
    core = PadicElem(cfg, 0, x.m, x.a, x.b)
    v = x.v
    if v % 2:
        core = core.scale_p(1)
        v -= 1
    j = core.v_unif_core() + (cfg.ram_index if core.v else 0)
    if j % 2:
        where = "L" if cfg.quad else "K_n (use quad=True)"
        raise DomainError(f"odd valuation: no square root in {where}")
    h = j // 2
    if cfg.quad:
        # core = u^j * W = varpi^h * W
        W = core / cfg.varpi() ** h
        half = cfg.sqrt_varpi() ** h
    else:
        half = cfg.varpi() ** h
        W = core / (half * half)
    W = _as_unit(W)
    w0 = reduce_mod_m(W)
    roots = [s for s in range(1, p) if s * s % p == w0]
    if not roots:
        raise DomainError("no square root in L: residue is not a square mod p")
    s0 = min(roots)
    y = PadicElem.from_rational(cfg, pow(s0, -1, p), prec=W.m)
    target = cfg.ram_index * W.m
    good = 1
    inv2 = Fraction(1, 2)
    while good < target:
        y = y * (3 - W * y * y) * inv2
        good *= 2
    root = W * y
    return root * half * PadicElem.from_rational(cfg, 1).scale_p(v // 2)


def _as_unit(W):
    if W.v is None or W.m == 0:
        raise PrecisionError("lost precision while extracting a unit part")
    if W.v != 0:
        raise PrecisionError("unit part extraction produced a non-unit")
    return W


def binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    from math import comb
    return comb(n, k)
