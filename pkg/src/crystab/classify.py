"""Slopes, the exceptional disks D_alpha, the trace invariant mu, and the
Galois / Banach label systems for the mod p reduction."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, factorial

from .fpmod import ConsistencyError, minus_rep, plus_rep
from .padic import DomainError, PrecisionError


def gamma_int(m):
    """Gamma(m) = (m - 1)! for a positive integer m."""
    return factorial(m - 1)


def fmt_fraction(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# F_p and F_{p^2}


def _non_residue(p):
    for d in range(2, p):
        if pow(d, (p - 1) // 2, p) == p - 1:
            return d
    raise DomainError("no quadratic non-residue")


@dataclass(frozen=True)
class FqElem:
    """x + y*s in F_p[s]/(s^2 - d), d the least quadratic non-residue mod p."""
    p: int
    x: int
    y: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % self.p)
        object.__setattr__(self, "y", self.y % self.p)

    @property
    def d(self):
        return _non_residue(self.p)

    @property
    def in_base(self):
        return self.y == 0

    def __add__(self, o):
        o = self._co(o)
        return FqElem(self.p, self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        o = self._co(o)
        return FqElem(self.p, self.x - o.x, self.y - o.y)

    def __neg__(self):
        return FqElem(self.p, -self.x, -self.y)

    def __mul__(self, o):
        o = self._co(o)
        return FqElem(self.p, self.x * o.x + self.d * self.y * o.y, self.x * o.y + self.y * o.x)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = FqElem(self.p, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        norm = (self.x * self.x - self.d * self.y * self.y) % self.p
        if norm == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        inv = pow(norm, -1, self.p)
        return FqElem(self.p, self.x * inv, -self.y * inv)

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def _co(self, o):
        return o if isinstance(o, FqElem) else FqElem(self.p, o)

    def sort_key(self):
        return (self.y, self.x)

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        return f"{self.x}+{self.y}*sqrt({self.d})"


def fq_elements(p, quad=False):
    if not quad:
        return [FqElem(p, x) for x in range(p)]
    return [FqElem(p, x, y) for y in range(p) for x in range(p)]


def nth_roots(value, m):
    """m-th roots of value: those in F_p, or in F_{p^2} when F_p has none."""
    p = value.p
    roots = [z for z in fq_elements(p) if z ** m == value]
    if roots:
        return tuple(roots), "F_p"
    roots = [z for z in fq_elements(p, quad=True) if z ** m == value]
    return tuple(sorted(roots, key=FqElem.sort_key)), "F_p^2"


def lambda_pair(mu):
    """The two roots of X^2 - mu X + 1 (with multiplicity) and their field."""
    p = mu.p
    roots = [z for z in fq_elements(p, quad=True) if (z * z - mu * z + 1).is_zero()]
    if len(roots) == 1:
        roots = roots * 2
    roots = tuple(sorted(roots, key=FqElem.sort_key))
    return roots, ("F_p" if all(z.in_base for z in roots) else "F_p^2")


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class MuValue:
    """mu = lambda + 1/lambda, or for nu > 1 the power mu^(2nu-1) with its roots."""
    mu_power: FqElem
    exponent: int
    branch_set: tuple
    field: str

    @property
    def ambiguous(self):
        return self.exponent > 1

    @property
    def mu(self):
        return None if self.ambiguous else self.branch_set[0]

    def key(self):
        return (self.exponent, self.mu_power.sort_key(),
                tuple(z.sort_key() for z in self.branch_set))

    def to_dict(self):
        out = {"mu_power": str(self.mu_power), "exponent": self.exponent,
               "branch_set": [str(z) for z in self.branch_set], "field": self.field}
        if not self.ambiguous:
            out["mu"] = str(self.mu)
            pair, fld = lambda_pair(self.mu)
            out["lambda"] = [str(z) for z in pair]
            out["lambda_field"] = fld
        return out


@dataclass(frozen=True)
class Irreducible:
    """ind(omega_2^h) (x) omega^l with h in 1..p-1."""
    p: int
    h: int
    l: int

    kind = "irreducible"

    def fused_exponent(self):
        """Least element of {E, pE} mod p^2 - 1 for E = h + (p+1) l."""
        p = self.p
        q = p * p - 1
        E = (self.h + (p + 1) * self.l) % q
        return min(E, p * E % q)

    def key(self):
        return ("irr", self.fused_exponent())

    def __str__(self):
        return f"ind(w2^{self.h}) (x) w^{self.l % (self.p - 1)}"

    def to_dict(self):
        return {"kind": self.kind, "h": self.h, "l": self.l % (self.p - 1),
                "fused_exponent": self.fused_exponent(), "text": str(self)}


@dataclass(frozen=True)
class Reducible:
    """(mu_lambda omega^(p-1) + mu_(1/lambda)) (x) omega^l with lambda + 1/lambda = mu."""
    p: int
    mu: MuValue
    l: int

    kind = "reducible"

    def key(self):
        return ("red", self.mu.key(), self.l % (self.p - 1))

    def __str__(self):
        mu = str(self.mu.mu) if not self.mu.ambiguous else \
            f"mu^{self.mu.exponent}={self.mu.mu_power}"
        return f"(mu_lam w^{self.p - 1} + mu_1/lam) (x) w^{self.l % (self.p - 1)} [{mu}]"

    def to_dict(self):
        out = {"kind": self.kind, "l": self.l % (self.p - 1), "text": str(self)}
        out.update(self.mu.to_dict())
        return out


def irr(p, K, l):
    """Irr_l for k + kappa = K."""
    return Irreducible(p, plus_rep(K - 2 * l - 1, p), l % (p - 1))


@dataclass(frozen=True)
class BIrr:
    """(ind sigma_t / T) (x) omega^l with t in 0..p-2."""
    p: int
    t: int
    l: int

    kind = "BIrr"

    def key(self):
        # (ind sigma_t / T) (x) chi = (ind sigma_(p-1-t) / T) (x) chi omega^t
        p = self.p
        forms = [(self.t, self.l % (p - 1))]
        if 1 <= self.t <= p - 2:
            forms.append((p - 1 - self.t, (self.l + self.t) % (p - 1)))
        return ("birr", min(forms))

    def __str__(self):
        return f"(ind sigma_{self.t} / T) (x) w^{self.l % (self.p - 1)}"

    def to_dict(self):
        return {"kind": self.kind, "t": self.t, "l": self.l % (self.p - 1), "text": str(self)}


@dataclass(frozen=True)
class BRed:
    """ind sigma_(p-2) / (T^2 - mu T + 1) (x) omega^l, semisimplified."""
    p: int
    mu: MuValue
    l: int

    kind = "BRed"

    def key(self):
        return ("bred", self.mu.key(), self.l % (self.p - 1))

    def __str__(self):
        mu = str(self.mu.mu) if not self.mu.ambiguous else \
            f"mu^{self.mu.exponent}={self.mu.mu_power}"
        return f"(ind sigma_{self.p - 2} / (T^2 - mu T + 1))^ss (x) w^{self.l % (self.p - 1)} [{mu}]"

    def to_dict(self):
        out = {"kind": self.kind, "t": self.p - 2, "l": self.l % (self.p - 1), "text": str(self)}
        out.update(self.mu.to_dict())
        return out


def birr(p, K, l):
    """BIrr_l for k + kappa = K."""
    return BIrr(p, minus_rep(K - 2 * l - 2, p), l % (p - 1))


def label_to_banach(label):
    if isinstance(label, Irreducible):
        return BIrr(label.p, label.h - 1, label.l)
    if isinstance(label, Reducible):
        # t = p - 2: the second summand pi(<p-3-t>_-, 1/lambda, omega^(t+1) psi) has
        # the same sigma_(p-2) and the same twist, so the pair is BRed_l(mu)^ss
        return BRed(label.p, label.mu, label.l)
    raise TypeError(f"not a Galois label: {label!r}")


# ---------------------------------------------------------------------------
# slope, regions, mu


def slope_and_nu(a):
    """(w(a), ceil(w(a)), whether the classification hypotheses hold)."""
    if a.is_exact_zero:
        raise DomainError("a must be nonzero")
    w = a.w()
    p = a.cfg.p
    nu = ceil(w)
    valid = 0 < w < Fraction(p - 1, 2) and w.denominator != 1
    return w, nu, valid


def slope_problem(w, p):
    """Why a slope falls outside the classified range, or None."""
    if w <= 0:
        return "slope must be positive"
    if w.denominator == 1:
        return "slope is an integer"
    if w >= Fraction(p - 1, 2):
        return "slope is not below (p-1)/2"
    return None


def region_center(alpha, chi, cfg):
    """(eps_p(1+p) - 1)^(2 alpha - 1) / (2 alpha - 1)!."""
    zp = chi.zeta_prime(cfg)
    return (zp - 1) ** (2 * alpha - 1) * Fraction(1, factorial(2 * alpha - 1))


def region_member(a, alpha, chi):
    """a in D_alpha, certified; raises PrecisionError when undecidable."""
    p = a.cfg.p
    if not 1 <= alpha <= (p - 1) // 2:
        raise DomainError(f"alpha must lie in 1..{(p - 1) // 2}")
    if a.is_exact_zero:
        return False
    if a.w() != alpha - Fraction(1, 2):
        return False
    diff = a * a - region_center(alpha, chi, a.cfg)
    return diff.is_w_at_least(2 * alpha - Fraction(1, 2))


def _certified_residue(x, what):
    try:
        ok = x.is_w_at_least(0)
    except PrecisionError:
        raise PrecisionError(f"cannot certify that {what} is integral")
    if not ok:
        raise ConsistencyError(f"{what} is not integral")
    return x.residue()


def mu_power_value(a, nu, chi):
    """Reduction of the integer-exponent expression for mu^(2nu-1)."""
    cfg = a.cfg
    p = cfg.p
    m = 2 * nu - 1
    zp1 = chi.zeta_prime(cfg) - 1
    num = (a * a * gamma_int(2 * nu) - zp1 ** m) ** m
    if (nu * m) % 2:
        num = -num
    den = a ** (4 * nu - 1) * (gamma_int(nu) ** m * gamma_int(2 * nu) ** nu)
    return FqElem(p, _certified_residue(num / den, "mu^(2nu-1)"))


def mu_first_order(a, chi):
    """Reduction of a^(-3) (eps_p(1+p) - 1 - a^2) (the nu = 1 formula)."""
    cfg = a.cfg
    zp1 = chi.zeta_prime(cfg) - 1
    return FqElem(cfg.p, _certified_residue((zp1 - a * a) / a ** 3, "mu"))


def mu_invariant(a, nu, k, chi):
    p = a.cfg.p
    K = k + chi.kappa
    if (K - 2 * nu - 1) % (p - 1):
        raise DomainError(f"k + kappa must be congruent to {2 * nu + 1} mod {p - 1}")
    if not region_member(a, nu, chi):
        raise DomainError(f"a is not in the region D_{nu}")
    if nu == 1:
        mu = mu_first_order(a, chi)
        return MuValue(mu, 1, (mu,), "F_p")
    power = mu_power_value(a, nu, chi)
    roots, fld = nth_roots(power, 2 * nu - 1)
    return MuValue(power, 2 * nu - 1, roots, fld)


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassificationResult:
    p: int
    k: int
    kappa: int
    slope: Fraction
    nu: int
    in_region: bool
    k_mod: int
    candidates: tuple
    pi: object
    removed: tuple
    shortcut: object = None
    banach: bool = False
    notes: list = field(default_factory=list)

    @property
    def determined(self):
        return len(self.candidates) == 1

    @property
    def label(self):
        return self.candidates[0] if self.determined else None

    def keys(self):
        return frozenset(c.key() for c in self.candidates)

    def to_dict(self):
        return {
            "slope": fmt_fraction(self.slope),
            "nu": self.nu,
            "region": {"alpha": self.nu, "member": self.in_region},
            "k_plus_kappa_mod": self.k_mod,
            "determined": self.determined,
            "label": self.label.to_dict() if self.determined else None,
            "pi": self.pi.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
        }


def _candidates(p, K, nu, make, pi, reducible):
    """Drop the symbols with index 1..nu-1 (mod p-1), then merge isomorphic labels.

    Removal goes by index: removing by isomorphism class would also delete
    Irr_0, which is isomorphic to Irr_(nu-1) when k + kappa = nu + 1."""
    removed_idx = {i % (p - 1) for i in range(1, nu)}
    indexed = [(K - j, make(p, K, K - j)) for j in range(nu + 1, 2, -1)]
    indexed.append((None if reducible else K - 2, pi))
    out, seen = [], set()
    for idx, lab in indexed:
        if idx is not None and idx % (p - 1) in removed_idx:
            continue
        key = lab.key()
        if key in seen:
            continue
        seen.add(key)
        out.append(lab)
    return tuple(out), tuple(make(p, K, i) for i in range(1, nu))


def _setup(k, a, chi):
    cfg = a.cfg
    p = cfg.p
    if cfg.p != chi.cfg.p or cfg.n != chi.cfg.n:
        raise DomainError("a and the character live over different towers")
    if k < 2:
        raise DomainError("k must be at least 2")
    w, nu, _ = slope_and_nu(a)
    problem = slope_problem(w, p)
    if problem:
        raise DomainError(problem)
    K = k + chi.kappa
    in_region = region_member(a, nu, chi)
    reducible = in_region and (K - 2 * nu - 1) % (p - 1) == 0
    return p, w, nu, K, in_region, reducible


def classify_galois(k, a, chi):
    p, w, nu, K, in_region, reducible = _setup(k, a, chi)
    if reducible:
        pi = Reducible(p, mu_invariant(a, nu, k, chi), 2 * nu - 1)
    else:
        pi = irr(p, K, K - 2)
    cands, removed = _candidates(p, K, nu, irr, pi, reducible)
    res = ClassificationResult(p, k, chi.kappa, w, nu, in_region, K % (p - 1),
                               cands, pi, removed)
    shortcut = galois_shortcut(p, K, nu)
    if shortcut is not None:
        res.shortcut = shortcut
        if not res.determined or res.label.key() != shortcut.key():
            raise ConsistencyError("two-component shortcut disagrees with the candidate set")
    return res


def galois_shortcut(p, K, nu):
    """The singleton predicted on the components k + kappa = nu + 1, nu + 2 (nu > 1)."""
    if nu <= 1:
        return None
    if (K - nu - 1) % (p - 1) == 0:
        return irr(p, K, p - 1)
    if (K - nu - 2) % (p - 1) == 0:
        return irr(p, K, nu)
    return None


def classify_banach(k, a, chi):
    p, w, nu, K, in_region, reducible = _setup(k, a, chi)
    if reducible:
        pi = BRed(p, mu_invariant(a, nu, k, chi), 2 * nu - 1)
    else:
        pi = birr(p, K, K - 2)
    cands, removed = _candidates(p, K, nu, birr, pi, reducible)
    return ClassificationResult(p, k, chi.kappa, w, nu, in_region, K % (p - 1),
                                cands, pi, removed, banach=True)


def to_banach(x):
    """Galois label or classification result to its Banach counterpart."""
    if isinstance(x, ClassificationResult):
        if x.banach:
            return x
        cands = tuple(label_to_banach(c) for c in x.candidates)
        return ClassificationResult(x.p, x.k, x.kappa, x.slope, x.nu, x.in_region, x.k_mod,
                                    cands, label_to_banach(x.pi),
                                    tuple(label_to_banach(c) for c in x.removed),
                                    None if x.shortcut is None else label_to_banach(x.shortcut),
                                    banach=True)
    return label_to_banach(x)


def pi_removal_expected(p, K, nu):
    """Index arithmetic: Irr_(K-2) coincides with some Irr_i, 1 <= i < nu, exactly
    when K - 2 is congruent to such an i."""
    return any((K - 2 - i) % (p - 1) == 0 for i in range(1, nu))


# ---------------------------------------------------------------------------
# consistency sweep


def sample_eigenvalues(nu, chi, cfg):
    """One eigenvalue inside D_nu and one of slope nu - 1/p outside it."""
    from .padic import sqrt
    outside = cfg.varpi() ** (nu * cfg.p - 1)
    try:
        inside = sqrt(region_center(nu, chi, cfg))
    except DomainError:
        # the centre has no square root in L for this character
        return (("out", outside),)
    return (("in", inside), ("out", outside))


def consistency_sweep(p, n=2, kappas=None, cs=None, M=None):
    """Check shortcuts, Pi removal and the Banach correspondence on every
    component, nu and sample eigenvalue.  Returns a list of (name, ok); each nu
    also gets a coverage line saying whether some D_nu sample was found."""
    from .characters import RamifiedCharacter
    from .padic import PadicConfig
    cfg = PadicConfig(p, n, M, quad=True)
    kappas = range(p - 1) if kappas is None else kappas
    cs = range(1, p) if cs is None else cs
    out = []
    covered = {nu: False for nu in range(1, (p - 1) // 2 + 1)}
    for c in cs:
        for nu in covered:
            samples = None
            for kappa in kappas:
                chi = RamifiedCharacter(cfg, kappa, c)
                if samples is None:
                    samples = sample_eigenvalues(nu, chi, cfg)
                    covered[nu] |= len(samples) == 2
                for which, a in samples:
                    for kmod in range(p - 1):
                        k = 2 + (kmod - 2) % (p - 1)
                        K = k + chi.kappa
                        tag = f"p={p} n={n} c={c} kappa={kappa} nu={nu} a={which} k={k}"
                        try:
                            g = classify_galois(k, a, chi)
                            shortcut_ok = True
                        except ConsistencyError:
                            out.append((f"shortcut {tag}", False))
                            continue
                        if g.shortcut is not None:
                            out.append((f"shortcut {tag}", shortcut_ok))
                        if not isinstance(g.pi, Reducible) and nu > 1:
                            removed = g.pi.key() in {r.key() for r in g.removed}
                            out.append((f"pi-removal {tag}",
                                        removed == pi_removal_expected(p, K, nu)))
                        b = classify_banach(k, a, chi)
                        tb = to_banach(g)
                        out.append((f"banach {tag}", tb.keys() == b.keys()
                                    and tb.determined == b.determined))
    for nu, ok in covered.items():
        out.append((f"coverage p={p} n={n} nu={nu} (some sample inside D_nu)", ok))
    return out


def beta_from_constants(a, nu, chi):
    """Reduction of C_(nu-1)/a + a binom(2nu-1, nu)/C_nu built from the script C
    constants (nu > 1), to compare with the closed formula for mu."""
    from .eta import script_C
    from .characters import RamifiedCharacter
    if nu < 2:
        raise DomainError("the constant route needs nu >= 2")
    cfg = a.cfg
    chi_q = RamifiedCharacter(cfg, chi.kappa, chi.c)
    c_lo = script_C(nu - 1, chi_q, check=False)
    c_hi = script_C(nu, chi_q, check=False)
    val = c_lo / a + a * comb(2 * nu - 1, nu) / c_hi
    return FqElem(cfg.p, _certified_residue(val, "beta"))


# ---------------------------------------------------------------------------
# eigenforms and the filtered module


@dataclass(frozen=True)
class SlopeVerdict:
    verdict: str
    slope: Fraction
    half_integer: bool
    alpha: object = None


def eigenform_slope_check(N, k, a_p, chi, m):
    """Where (a_p, k) sits relative to the union of D_alpha x {2 alpha + 1 - kappa}.

    chi is the p-part of the nebentypus (conductor p^n), m its conductor exponent."""
    cfg = a_p.cfg
    p, n = cfg.p, cfg.n
    if a_p.is_exact_zero:
        raise DomainError("a_p must be nonzero")
    if N <= 0 or N % p == 0:
        raise DomainError("the tame level must be a positive integer prime to p")
    if m != n:
        raise DomainError("with a_p nonzero the p-part of the character must have full "
                          "conductor p^n (otherwise U_p kills the form)")
    w = a_p.w()
    half = (2 * w).denominator == 1 and (2 * w).numerator % 2 == 1
    problem = slope_problem(w, p)
    if problem:
        return SlopeVerdict(f"not covered ({problem})", w, half)
    nu = ceil(w)
    if region_member(a_p, nu, chi) and (k + chi.kappa - 2 * nu - 1) % (p - 1) == 0:
        return SlopeVerdict("consistent with reducible", w, half, nu)
    return SlopeVerdict("locally irreducible forced", w, half)


@dataclass(frozen=True)
class FilteredModuleSpec:
    """phi(e1) = eps(p) a^-1 p^(k-1) e1, phi(e2) = a e2, Fil^(k-1) = line of e1 + e2,
    Galois acting on e1 through a nontrivial character and trivially on e2."""
    k: int
    vp_a: Fraction
    vp_eps_at_p: Fraction = Fraction(0)


@dataclass(frozen=True)
class WeakAdmissibility:
    newton_total: Fraction
    hodge_total: int
    lines: tuple
    positive: bool

    @property
    def admissible(self):
        return self.newton_total == self.hodge_total and all(ok for _, _, _, ok in self.lines)

    def __bool__(self):
        return self.admissible


def weak_admissibility(spec):
    k = spec.k
    vp_a = Fraction(spec.vp_a)
    v1 = Fraction(spec.vp_eps_at_p) - vp_a + (k - 1)
    v2 = vp_a
    newton = v1 + v2
    # Fil^(k-1) meets neither eigenline, so each line has Hodge number 0; the
    # Galois action separates e1 and e2, so these are the only stable lines
    lines = (("e1", v1, 0, v1 >= 0), ("e2", v2, 0, v2 >= 0))
    return WeakAdmissibility(newton, k - 1, lines, vp_a > 0)
