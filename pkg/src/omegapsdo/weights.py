"""Weight functions, Young conjugates, and the growth-inequality toolbox.

A weight is a continuous nondecreasing function on [0, inf) normalized to
vanish on [0, 1].  It must be doubling-controlled, integrable against 1/t^2,
super-logarithmic, and log-convex (phi(s) = omega(e^s) convex).  The Young
conjugate phi*(t) = sup_{s>=0} (s t - phi(s)) is the quantity every
derivative estimate in this package is written against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "WeightError",
    "WeightFunction",
    "YoungConjugate",
    "AxiomResult",
    "AxiomReport",
    "check_axioms",
    "IneqResult",
    "InequalityReport",
    "inequality_suite",
]

_E = math.e


class WeightError(ValueError):
    """Invalid weight construction or out-of-domain evaluation."""


def _as_nonneg_array(t):
    arr = np.asarray(t, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr < 0)):
        raise WeightError("weight argument must be finite and nonnegative")
    return arr


class WeightFunction:
    """Normalized weight: eval(t) = max(0, raw(t) - raw(1)).

    Built-in kinds:
      gevrey(d)        raw(t) = t**d,                      0 < d <= 1
      log_power(s)     raw(t) = log(1+t)**s,               s > 1
      gevrey_log(d,s)  raw(t) = t**d * log(e+t)**s
      tabulated        piecewise-linear through samples, linear tail

    gevrey with d == 1 is quasianalytic and only useful as a diagnostic
    input for the axiom checker (it fails axiom beta).
    """

    def __init__(self, kind, *, d=None, s=None, table=None, label=None):
        self.kind = kind
        self.d = d
        self.s = s
        if kind == "gevrey":
            if d is None or not (0.0 < d <= 1.0):
                raise WeightError("gevrey exponent must lie in (0, 1]")
            offset = 1.0
        elif kind == "log_power":
            if s is None or s <= 1.0:
                raise WeightError("log_power exponent must be > 1")
            offset = math.log(2.0) ** s
        elif kind == "gevrey_log":
            if d is None or not (0.0 < d < 1.0) or s is None:
                raise WeightError("gevrey_log needs d in (0,1) and an exponent s")
            offset = math.log(_E + 1.0) ** s
        elif kind == "tabulated":
            ts, ws = np.asarray(table[0], float), np.asarray(table[1], float)
            if ts.ndim != 1 or ts.shape != ws.shape or ts.size < 3:
                raise WeightError("tabulated weight needs parallel t/omega sample arrays")
            if np.any(np.diff(ts) <= 0) or np.any(np.diff(ws) < -1e-12):
                raise WeightError("tabulated samples must be increasing in t, nondecreasing in omega")
            if ts[0] > 1.0:
                raise WeightError("tabulated samples must cover t = 1")
            self._ts, self._ws = ts, ws
            self._tail_slope = (ws[-1] - ws[-2]) / (ts[-1] - ts[-2])
            offset = float(np.interp(1.0, ts, ws))
        else:
            raise WeightError(f"unknown weight kind {kind!r}")
        self.normalization_offset = offset
        self.label = label or self._default_label()
        self._scale_cache = {}

    # -- construction -----------------------------------------------------

    @classmethod
    def gevrey(cls, d):
        return cls("gevrey", d=d)

    @classmethod
    def log_power(cls, s):
        return cls("log_power", s=s)

    @classmethod
    def gevrey_log(cls, d, s):
        return cls("gevrey_log", d=d, s=s)

    @classmethod
    def tabulated(cls, ts, ws, label=None):
        return cls("tabulated", table=(ts, ws), label=label)

    def _default_label(self):
        if self.kind == "gevrey":
            return f"gevrey({self.d:g})"
        if self.kind == "log_power":
            return f"log_power({self.s:g})"
        if self.kind == "gevrey_log":
            return f"gevrey_log({self.d:g},{self.s:g})"
        return "tabulated"

    def __repr__(self):
        return f"WeightFunction({self.label})"

    # -- evaluation --------------------------------------------------------

    def _raw(self, t):
        if self.kind == "gevrey":
            return np.power(t, self.d)
        if self.kind == "log_power":
            return np.log1p(t) ** self.s
        if self.kind == "gevrey_log":
            return np.power(t, self.d) * np.log(_E + t) ** self.s
        ts, ws = self._ts, self._ws
        inner = np.interp(t, ts, ws)
        tail = ws[-1] + self._tail_slope * (t - ts[-1])
        return np.where(t > ts[-1], tail, inner)

    def eval(self, t):
        """omega(t) for scalar or array t >= 0."""
        arr = _as_nonneg_array(t)
        out = np.maximum(0.0, self._raw(arr) - self.normalization_offset)
        return float(out) if np.isscalar(t) or out.ndim == 0 else out

    __call__ = eval

    def radial(self, v):
        """omega(|v|_2) for a vector, or for arrays of shape (..., dim)."""
        arr = np.asarray(v, dtype=float)
        if arr.size and not np.all(np.isfinite(arr)):
            raise WeightError("radial argument must be finite")
        return self.eval(np.sqrt(np.sum(arr * arr, axis=-1)))

    def log_eval(self, u):
        """omega(e^u), computed without forming e^u where that would overflow."""
        u = np.asarray(u, dtype=float)
        with np.errstate(over="ignore"):
            if self.kind == "gevrey":
                raw = np.exp(self.d * u)
            elif self.kind == "log_power":
                raw = np.logaddexp(0.0, u) ** self.s
            elif self.kind == "gevrey_log":
                raw = np.exp(self.d * u) * np.logaddexp(1.0, u) ** self.s
            else:
                raw = self._raw(np.exp(np.minimum(u, 700.0)))
        return np.maximum(0.0, raw - self.normalization_offset)

    def phi(self, s):
        """phi(s) = omega(e^s) for s >= 0 (0 for s < 0 by normalization)."""
        s = np.asarray(s, dtype=float)
        return np.where(s <= 0.0, 0.0, self.log_eval(np.maximum(s, 0.0)))

    # -- structural constants ----------------------------------------------

    def _scale_limit(self, c):
        # limit of omega(c t)/(omega(t)+1) as t -> inf, per kind
        if self.kind in ("gevrey", "gevrey_log"):
            return c ** self.d
        if self.kind == "log_power":
            return 1.0
        return c  # linear tail of the tabulated interpolant

    def scale_constant(self, c):
        """Smallest L >= 1 with omega(c*t) <= L*(omega(t)+1) (measured + limit)."""
        key = round(float(c), 12)
        if key not in self._scale_cache:
            t = np.concatenate(([0.0], np.geomspace(1e-3, 1e9, 20001)))
            ratio = self.eval(c * t) / (self.eval(t) + 1.0)
            # 1e-6 headroom: the true sup can fall between grid nodes
            L = max(1.0, float(ratio.max()), self._scale_limit(c)) * (1 + 1e-6)
            self._scale_cache[key] = L
        return self._scale_cache[key]

    @property
    def L_double(self):
        """Doubling constant: omega(2t) <= L (omega(t)+1)."""
        return self.scale_constant(2.0)

    @property
    def L_e(self):
        """e-scaling constant: omega(e t) <= L (omega(t)+1)."""
        return self.scale_constant(_E)

    def L_radial(self, dim):
        """L' with omega(|v|_2) <= L'(omega(|v|_inf)+1) in the given dimension."""
        return self.scale_constant(math.sqrt(dim))

    # -- serialization -----------------------------------------------------

    def to_json(self):
        if self.kind == "gevrey":
            return {"kind": "gevrey", "d": self.d}
        if self.kind == "log_power":
            return {"kind": "log_power", "s": self.s}
        if self.kind == "gevrey_log":
            return {"kind": "gevrey_log", "d": self.d, "s": self.s}
        return {"kind": "tabulated", "t": self._ts.tolist(), "omega": self._ws.tolist()}

    @classmethod
    def from_json(cls, obj):
        kind = obj.get("kind")
        if kind == "gevrey":
            return cls.gevrey(float(obj["d"]))
        if kind == "log_power":
            return cls.log_power(float(obj["s"]))
        if kind == "gevrey_log":
            return cls.gevrey_log(float(obj["d"]), float(obj["s"]))
        if kind == "tabulated":
            return cls.tabulated(obj["t"], obj["omega"])
        raise WeightError(f"unknown weight kind {kind!r}")


# ---------------------------------------------------------------------------
# Young conjugate
# ---------------------------------------------------------------------------


def _gevrey_conjugate(t, d):
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        u = t / d
        val = u * np.log(u) - u + 1.0
    return np.where(t <= d, 0.0, val)


def _vector_concave_max(g, n, iters=110):
    """Maximize a concave g(s) >= with g(0)=0 elementwise over s >= 0.

    g maps an array of shape (n,) to values of the same shape; -inf values
    (overflow of phi) are handled by the bracketing stage.
    """
    hi = np.ones(n)
    with np.errstate(invalid="ignore"):
        for _ in range(80):
            grow = g(hi) >= g(0.5 * hi)
            if not np.any(grow):
                break
            hi = np.where(grow, 2.0 * hi, hi)
    a = np.zeros(n)
    b = hi
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv * (b - a)
    d_ = a + inv * (b - a)
    gc, gd = g(c), g(d_)
    for _ in range(iters):
        left = gc >= gd
        b = np.where(left, d_, b)
        a = np.where(left, a, c)
        c = b - inv * (b - a)
        d_ = a + inv * (b - a)
        gc = g(c)
        gd = g(d_)
    s = 0.5 * (a + b)
    return np.maximum.reduce([g(s), gc, gd, np.zeros(n)])


class YoungConjugate:
    """Evaluator for phi*(t) = sup_{s>=0}(s t - phi(s)), phi(s) = omega(e^s).

    Uses the closed form for gevrey weights, otherwise bracketed golden-section
    maximization of the concave objective.  Tabulated weights are screened for
    convexity of phi first; a non-convex table is rejected since the
    biconjugate could not reproduce phi.
    """

    def __init__(self, weight: WeightFunction, prefer_closed=True, s_screen=None):
        self.weight = weight
        self.closed_form = bool(prefer_closed and weight.kind == "gevrey")
        if weight.kind == "tabulated":
            s = np.linspace(0.0, math.log(weight._ts[-1]) + 2.0, 200) if s_screen is None else s_screen
            ph = weight.phi(s)
            d2 = np.diff(ph, 2)
            tol = 1e-8 * max(1.0, float(np.abs(ph).max()))
            if d2.min() < -tol:
                raise WeightError(
                    "tabulated phi is not convex (biconjugate would mismatch); "
                    f"worst second difference {d2.min():.3e}"
                )
        self._memo = {}
        self.table = None

    def _numeric(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        phi = self.weight.phi

        def make_g(tv):
            def g(s):
                with np.errstate(over="ignore", invalid="ignore"):
                    val = s * tv - phi(s)
                return np.where(np.isnan(val), -np.inf, val)

            return g

        return _vector_concave_max(make_g(t), t.shape[0])

    def value_numeric(self, t):
        """Force the maximization path (used to cross-check closed forms)."""
        scalar = np.isscalar(t)
        out = self._numeric(np.atleast_1d(np.asarray(t, dtype=float)).ravel())
        return float(out[0]) if scalar else out.reshape(np.shape(t))

    def eval(self, t):
        arr = _as_nonneg_array(t)
        scalar = np.isscalar(t) or arr.ndim == 0
        flat = np.atleast_1d(arr).ravel()
        if self.closed_form:
            out = _gevrey_conjugate(flat, self.weight.d)
        else:
            out = self._numeric(flat)
        if scalar:
            return float(out[0])
        return out.reshape(arr.shape)

    __call__ = eval

    def cached(self, t):
        """Scalar evaluation memoized on the rounded argument (for integer grids)."""
        key = round(float(t), 12)
        if key not in self._memo:
            self._memo[key] = float(self.eval(key))
        return self._memo[key]

    def biconjugate(self, s):
        """phi**(s) = sup_{t>=0}(s t - phi*(t)); equals phi for convex phi."""
        s_arr = np.atleast_1d(np.asarray(s, dtype=float))
        star = self.eval

        def g(t):
            return t * s_arr - star(t)

        out = _vector_concave_max(g, s_arr.shape[0])
        return float(out[0]) if np.isscalar(s) else out.reshape(np.shape(s))

    def build_table(self, t_grid=None):
        if t_grid is None:
            t_grid = np.concatenate(([0.0], np.geomspace(1e-3, 1e3, 121)))
        self.table = (np.asarray(t_grid, float), self.eval(np.asarray(t_grid, float)))
        return self.table


# ---------------------------------------------------------------------------
# Axiom verification
# ---------------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool
    margin: float
    detail: dict = field(default_factory=dict)


@dataclass
class AxiomReport:
    weight: str
    results: dict

    @property
    def all_pass(self):
        return all(r.passed for r in self.results.values())

    def to_rows(self):
        return [
            {"axiom": r.name, "passed": r.passed, "margin": r.margin}
            for r in self.results.values()
        ]


def _omega_integral(w, T, pts_per_decade=400):
    # int_1^T omega(t)/t^2 dt via u = log t substitution
    decades = math.log10(T)
    n = max(16, int(pts_per_decade * decades))
    u = np.linspace(0.0, math.log(T), n)
    integrand = w.log_eval(u) * np.exp(-u)
    return float(np.trapezoid(integrand, u))


def check_axioms(w: WeightFunction, t_grid=None, s_grid=None) -> AxiomReport:
    """Numerically check the four weight axioms; failures are report entries."""
    if t_grid is None:
        t_grid = np.concatenate(([0.0], np.geomspace(1e-2, 1e6, 1500)))
    else:
        t_grid = _as_nonneg_array(t_grid)
        if t_grid.size == 0:
            raise WeightError("empty t grid")
    if s_grid is None:
        s_grid = np.concatenate((np.linspace(0.0, 20.0, 300), np.geomspace(20.0, 2000.0, 200)))

    results = {}

    L = w.L_double
    slack_alpha = L * (w.eval(t_grid) + 1.0) - w.eval(2.0 * t_grid)
    results["alpha"] = AxiomResult(
        "alpha", bool(slack_alpha.min() >= -1e-9), float(slack_alpha.min()), {"L": L}
    )

    Ts = [10.0**k for k in range(1, 7)]
    I = [_omega_integral(w, T) for T in Ts]
    inc = np.diff(I)
    ratios = inc[1:] / np.maximum(inc[:-1], 1e-300)
    tail_ratio = float(ratios[-1]) if ratios.size else 0.0
    converges = bool(tail_ratio < 0.9)
    results["beta"] = AxiomResult(
        "beta", converges, 0.9 - tail_ratio, {"integrals": I, "increment_ratios": ratios.tolist()}
    )

    tg = np.array([10.0**k for k in range(1, 9)])
    with np.errstate(divide="ignore"):
        r = np.log(tg) / np.maximum(w.eval(tg), 1e-300)
    tail_nonincreasing = bool(np.all(np.diff(r[2:]) <= 1e-12))
    vanishing = bool(r[-1] <= 0.25 * r.max())
    results["gamma"] = AxiomResult(
        "gamma",
        tail_nonincreasing and vanishing,
        float(0.25 * r.max() - r[-1]),
        {"log_over_omega": r.tolist()},
    )

    s_arr = np.unique(np.asarray(s_grid, float))
    with np.errstate(over="ignore"):
        ph = w.phi(s_arr)
    good = np.isfinite(ph) & (ph < 1e150)
    cut = int(np.argmax(~good)) if bool((~good).any()) else ph.size
    cut = max(cut, 8)
    ph, s_arr = ph[:cut], s_arr[:cut]
    slopes = np.diff(ph) / np.diff(s_arr)  # grid may be nonuniform
    dslope = np.diff(slopes)
    tol = 1e-9 * max(1.0, float(np.abs(slopes).max()))
    results["delta"] = AxiomResult("delta", bool(dslope.min() >= -tol), float(dslope.min()), {})

    return AxiomReport(w.label, results)


# ---------------------------------------------------------------------------
# Inequality suite
# ---------------------------------------------------------------------------


@dataclass
class IneqResult:
    name: str
    samples: int
    worst_slack: float
    passed: bool
    constant: float | None = None
    note: str = ""


@dataclass
class InequalityReport:
    weight: str
    rows: list

    @property
    def all_pass(self):
        return all(r.passed for r in self.rows)

    def to_rows(self):
        return [
            {
                "inequality": r.name,
                "samples": r.samples,
                "worst_slack": r.worst_slack,
                "constant": "" if r.constant is None else r.constant,
                "passed": r.passed,
                "note": r.note,
            }
            for r in self.rows
        ]


_SLACK_TOL = -1e-9


def _phi_star_on(conj, values):
    # evaluate conj on possibly repeated values through a unique-value pass
    vals = np.asarray(values, dtype=float)
    uniq, inverse = np.unique(vals.ravel(), return_inverse=True)
    out = conj(uniq)[inverse]
    return out.reshape(vals.shape)

def _loguniform(rng, lo, hi, size):
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size))


def _transfer_partner(w):
    """(sigma, a) with omega(t^(1/a)) = o(sigma(t)), used for the transfer lemma.

    sigma must grow strictly faster than omega(t^(1/a)); the pairing is
    kind-specific.
    """
    a = 0.8
    if w.kind == "gevrey":
        d_sig = min(0.95, w.d / a + 0.2)
        if w.d / a >= d_sig:
            return None
        return WeightFunction.gevrey(d_sig), a
    if w.kind == "gevrey_log":
        # same kind, so the slowly decaying log-log terms of phi* cancel
        d_sig = min(0.95, w.d / a + 0.225)
        if w.d / a >= d_sig:
            return None
        return WeightFunction.gevrey_log(d_sig, w.s), a
    if w.kind == "log_power":
        return WeightFunction.log_power(w.s + 1.0), 0.5
    return None


def inequality_suite(w: WeightFunction, n_samples=10_000, rng=None) -> InequalityReport:
    """Randomized + boundary verification of the conjugate/weight inequalities.

    Inequalities with existential constants report the minimal constant
    measured over the sample; the others report their worst slack (>= 0
    means the inequality held everywhere).
    """
    rng = np.random.default_rng(0) if rng is None else rng
    conj = YoungConjugate(w)
    rows = []
    ns = int(n_samples)

    def add(name, slack, constant=None, note=""):
        worst = float(np.min(slack))
        rows.append(
            IneqResult(name, int(np.size(slack)), worst, worst >= _SLACK_TOL, constant, note)
        )

    # t^k <= e^{n phi*(k/n)} e^{n omega(t)}, t >= 1
    n = rng.integers(1, 7, ns)
    k = rng.integers(0, 26, ns)
    t = np.concatenate((_loguniform(rng, 1.0, 1e6, ns - 2), [1.0, 1e6]))
    slack = n * _phi_star_on(conj, k / n) + n * w.eval(t) - k * np.log(t)
    add("power_vs_conjugate", slack)

    # inf_j t^-j e^{k phi*(j/k)} <= e^{-k omega(t) + log t}
    ns2 = max(ns // 4, 100)
    k2 = rng.integers(1, 7, ns2)
    t2 = np.concatenate((_loguniform(rng, 1.0, 1e3, ns2 - 1), [1.0]))
    j = np.arange(0, 2001)
    star_jk = _phi_star_on(conj, j[None, :] / k2[:, None])  # (ns2, 2001)
    log_lhs = np.min(k2[:, None] * star_jk - j[None, :] * np.log(t2)[:, None], axis=1)
    slack = (-k2 * w.eval(t2) + np.log(t2)) - log_lhs
    add("inf_power_drop", slack)

    # B^n n! <= C e^{a lam phi*(n/lam)}: minimal C over n <= 30 (existential)
    a_exp = w.d if w.kind == "gevrey" else 1.0
    nn = np.arange(0, 31)
    lg = np.array([math.lgamma(v + 1.0) for v in nn])
    cmax = -np.inf
    for B in (0.5, 2.0):
        for lam in (0.5, 1.0, 2.0):
            logC = np.max(nn * math.log(B) + lg - a_exp * lam * conj(nn / lam))
            cmax = max(cmax, logC)
    add(
        "factorial_bound",
        np.zeros(62),
        constant=float(math.exp(min(cmax, 700.0))),
        note=f"minimal C over n<=30, a={a_exp:g}",
    )

    # <x-y> <= sqrt(2) <(x,y)>
    dgeo = 2
    xy = rng.normal(0.0, 1.0, (ns, 2, dgeo)) * _loguniform(rng, 0.1, 100.0, (ns, 1, 1))
    x, y = xy[:, 0, :], xy[:, 1, :]
    br_diff = np.sqrt(1.0 + np.sum((x - y) ** 2, axis=1))
    br_join = np.sqrt(1.0 + np.sum(xy**2, axis=(1, 2)))
    add("bracket_two_point", math.sqrt(2.0) * br_join - br_diff)

    # lam L^n phi*(y/(lam L^n)) + n y <= lam phi*(y/lam) + lam sum_{j<=n} L^j
    Le = w.L_e
    yv = np.concatenate((rng.uniform(0.0, 60.0, ns - 1), [0.0]))
    lam = _loguniform(rng, 0.1, 10.0, ns)
    nv = rng.integers(1, 4, ns)
    Ln = Le**nv
    geom = np.array([Le * (Le**i - 1.0) / (Le - 1.0) if Le != 1.0 else float(i) for i in range(4)])
    slack = lam * conj(yv / lam) + lam * geom[nv] - lam * Ln * conj(yv / (lam * Ln)) - nv * yv
    add("conjugate_shift", slack, note=f"L_e={Le:.6g}")

    # 2 lam phi*((s+t)/(2 lam)) <= lam phi*(s/lam) + lam phi*(t/lam) <= lam phi*((s+t)/lam)
    sv = rng.uniform(0.0, 50.0, ns)
    tv = np.concatenate((rng.uniform(0.0, 50.0, ns - 1), [0.0]))
    tv_eq = np.where(rng.random(ns) < 0.05, sv, tv)  # include the s = t midpoint case
    lam2 = _loguniform(rng, 0.1, 10.0, ns)
    fs = conj(sv / lam2)
    ft = conj(tv_eq / lam2)
    mid = conj((sv + tv_eq) / (2.0 * lam2))
    tot = conj((sv + tv_eq) / lam2)
    add("conjugate_midpoint", lam2 * fs + lam2 * ft - 2.0 * lam2 * mid)
    add("conjugate_superadd", lam2 * tot - lam2 * fs - lam2 * ft)

    # bracketed drop: t^-N e^{2k phi*(N/2k)} <= e^{-k omega(t) + log t}
    ns3 = max(ns // 2, 100)
    k3 = rng.integers(1, 6, ns3)
    N3 = rng.integers(1, 26, ns3)
    lo = (k3 / N3) * _phi_star_on(conj, N3 / k3)
    hi = (k3 / (N3 + 1)) * _phi_star_on(conj, (N3 + 1) / k3)
    u = lo + (hi - lo) * rng.random(ns3)
    t3 = np.exp(u)
    slack = (-k3 * w.eval(t3) + u) - (-N3 * u + 2.0 * k3 * _phi_star_on(conj, N3 / (2.0 * k3)))
    add("bracketed_power_drop", slack)

    # weight transfer: lam phi*_sigma(j/lam) <= C + mu a phi*_omega(j/mu)
    partner = _transfer_partner(w)
    if partner is not None:
        sigma, a = partner
        conj_sig = YoungConjugate(sigma)
        jj = np.arange(0, 2001)
        jj_ext = np.arange(2001, 4001)
        cbest = -np.inf
        stable = True
        for lam_t in (0.5, 1.0, 2.0):
            for mu_t in (0.5, 1.0, 2.0):
                gap = lam_t * conj_sig(jj / lam_t) - mu_t * a * conj(jj / mu_t)
                gap_ext = lam_t * conj_sig(jj_ext / lam_t) - mu_t * a * conj(jj_ext / mu_t)
                cbest = max(cbest, float(gap.max()))
                if gap_ext.max() > gap.max() + 1e-6:
                    stable = False
        rows.append(
            IneqResult(
                "weight_transfer",
                9 * 2001,
                0.0,
                stable,
                constant=cbest,
                note=f"sigma={sigma.label}, a={a:g}; stable under j-cap doubling: {stable}",
            )
        )
    else:
        rows.append(IneqResult("weight_transfer", 0, 0.0, True, note="no partner weight for kind"))

    # radial sandwich omega(|v|) <= L' omega(|v|_inf) + L' <= L' omega(|v|) + L'
    for dim in (1, 2, 3):
        Lp = w.L_radial(dim)
        v = rng.normal(0.0, 1.0, (max(ns // 3, 1000), dim)) * _loguniform(
            rng, 0.05, 1e3, (max(ns // 3, 1000), 1)
        )
        om2 = w.radial(v)
        ominf = w.eval(np.max(np.abs(v), axis=1))
        s1 = Lp * ominf + Lp - om2
        s2 = (Lp * om2 + Lp) - (Lp * ominf + Lp)
        add(f"radial_sandwich_d{dim}", np.minimum(s1, s2), constant=Lp)

    # omega(x+y) <= L (omega(x)+omega(y)+1)
    L2 = w.L_double
    xs = rng.normal(0.0, 1.0, (ns, 2)) * _loguniform(rng, 0.05, 1e3, (ns, 1))
    sx = w.eval(np.abs(xs[:, 0]))
    sy = w.eval(np.abs(xs[:, 1]))
    sxy = w.eval(np.abs(xs[:, 0] + xs[:, 1]))
    add("subadditivity", L2 * (sx + sy + 1.0) - sxy, constant=L2)

    # omega(<x>) <= omega(1+|x|) <= L(omega(x)+1)
    xv = np.abs(rng.normal(0.0, 1.0, ns)) * _loguniform(rng, 0.05, 1e3, ns)
    w_br = w.eval(np.sqrt(1.0 + xv**2))
    w_1p = w.eval(1.0 + xv)
    s1 = w_1p - w_br
    s2 = L2 * (w.eval(xv) + 1.0) - w_1p
    add("japanese_bracket_shift", np.minimum(s1, s2), constant=L2)

    # bracketed power lower bound: t^{j+1} >= e^{n omega(t)} e^{2m phi*(j/2m)} e^{-j}
    ns4 = max(ns // 2, 100)
    nv4 = rng.integers(1, 6, ns4)
    mv4 = nv4 + rng.integers(0, 4, ns4)
    j4 = rng.integers(1, 41, ns4)
    lo4 = np.maximum((mv4 / j4) * _phi_star_on(conj, j4 / mv4) - 1.0, 0.0)
    hi4 = (nv4 / j4) * _phi_star_on(conj, j4 / nv4)
    u4 = lo4 + np.maximum(hi4 - lo4, 0.0) * rng.random(ns4)
    t4 = np.exp(u4)
    slack = (j4 + 1.0) * u4 - (
        nv4 * w.eval(t4) + 2.0 * mv4 * _phi_star_on(conj, j4 / (2.0 * mv4)) - j4
    )
    add("bracketed_power_lower", slack)

    return InequalityReport(w.label, rows)
