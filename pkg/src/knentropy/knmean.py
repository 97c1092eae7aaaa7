"""Kolmogorov-Nagumo functions and the quasilinear mean.

A KN-function psi is continuous and strictly monotone; the quasilinear mean of
values x_k under weights p_k is psi^{-1}(sum_k p_k psi(x_k)). Linear psi gives
the ordinary weighted mean. The checks in this module quantify the classical
facts the rest of the package builds on: affine images of psi (including -psi)
produce the same mean for every input, translation invariance of the mean
singles out the linear and exponential families, and homogeneity under scaling
singles out the linear family alone.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, ParameterError
from .pmf import Pmf
from .qalgebra import as_qparam
from .reports import COUNTEREXAMPLE_FOUND, PASS, VerificationReport

__all__ = [
    "KNFunction",
    "KNMeanInput",
    "Thresholds",
    "make_kn_function",
    "linear",
    "exponential",
    "power",
    "phi_q_function",
    "builtin",
    "affine_image",
    "negated",
    "kn_mean",
    "check_translativity",
    "check_homogeneity",
    "kn_equivalent",
    "rng_for",
    "dirichlet_weights",
    "sampling_window",
    "sample_mean_input",
]

_GRID_POINTS = 1024
_DEFAULT_HALFWIDTH = 16.0
_INVERSE_RTOL = 1e-10
# random values for verification runs live in psi.domain intersected with this
_SAMPLING_LO = 0.0
_SAMPLING_HI = 10.0


@dataclass(frozen=True)
class Thresholds:
    """Residual levels separating float noise from genuine violations."""

    pass_residual: float = 1e-9
    counterexample_residual: float = 1e-3


@dataclass(frozen=True)
class KNFunction:
    """Strictly monotone continuous map with a closed-form inverse.

    ``family`` and ``params`` tag the builtin families so that verification
    code can re-evaluate witnesses through literal formulas instead of going
    back through this object.
    """

    name: str
    forward: Callable
    inverse: Callable
    domain: tuple[float, float] = (-math.inf, math.inf)
    direction: str = "increasing"
    family: str | None = None
    params: tuple[float, ...] = ()

    def contains(self, x: float) -> bool:
        lo, hi = self.domain
        return lo <= x <= hi


def _apply(fn: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate fn elementwise, tolerating scalar-only callables."""
    try:
        out = np.asarray(fn(xs), dtype=float)
    except (TypeError, ValueError):
        out = np.array([float(fn(float(x))) for x in xs])
    if out.shape != xs.shape:
        out = np.array([float(fn(float(x))) for x in xs])
    return out


def make_kn_function(name: str, forward: Callable, inverse: Callable, *,
                     domain: tuple[float, float] = (-math.inf, math.inf),
                     direction: str = "increasing",
                     family: str | None = None,
                     params: tuple[float, ...] = (),
                     validation_halfwidth: float = _DEFAULT_HALFWIDTH) -> KNFunction:
    """Construct a KNFunction after spot-checking monotonicity and the inverse.

    The checks run on a 1024-point grid over the domain clipped to a finite
    window. This is an empirical guard against typo'd inverses and
    non-monotone forwards, not a proof.
    """
    if direction not in ("increasing", "decreasing"):
        raise ParameterError(f"direction must be increasing or decreasing, got {direction!r}")
    lo, hi = float(domain[0]), float(domain[1])
    if not lo < hi:
        raise ParameterError(f"empty domain [{lo!r}, {hi!r}]")
    glo = lo if math.isfinite(lo) else -validation_halfwidth
    ghi = hi if math.isfinite(hi) else validation_halfwidth
    if not glo < ghi:
        glo, ghi = lo, lo + 2.0 * validation_halfwidth
    grid = np.linspace(glo, ghi, _GRID_POINTS)
    ys = _apply(forward, grid)
    if not np.all(np.isfinite(ys)):
        raise ParameterError(f"{name}: forward is not finite on the validation grid")
    diffs = np.diff(ys)
    if direction == "increasing":
        monotone = bool(np.all(diffs > 0.0))
    else:
        monotone = bool(np.all(diffs < 0.0))
    if not monotone:
        raise ParameterError(
            f"{name}: not strictly {direction} on [{glo:g}, {ghi:g}]"
        )
    back = _apply(inverse, ys)
    err = np.abs(back - grid)
    if np.any(err > _INVERSE_RTOL * np.maximum(1.0, np.abs(grid))):
        raise ParameterError(f"{name}: inverse fails the round-trip check")
    return KNFunction(name, forward, inverse, (lo, hi), direction, family,
                      tuple(float(p) for p in params))


def linear(a: float, b: float = 0.0) -> KNFunction:
    """psi(x) = a x + b with a != 0."""
    af, bf = float(a), float(b)
    if af == 0.0:
        raise ParameterError("linear KN-function needs a != 0")
    return make_kn_function(
        f"linear({af:g},{bf:g})",
        lambda x: af * np.asarray(x, dtype=float) + bf,
        lambda y: (np.asarray(y, dtype=float) - bf) / af,
        direction="increasing" if af > 0 else "decreasing",
        family="linear",
        params=(af, bf),
    )


def exponential(alpha: float) -> KNFunction:
    """psi(x) = exp((1 - alpha) x) with alpha != 1."""
    af = float(alpha)
    if af == 1.0:
        raise ParameterError("exponential KN-function needs alpha != 1")
    u = 1.0 - af
    return make_kn_function(
        f"exponential({af:g})",
        lambda x: np.exp(u * np.asarray(x, dtype=float)),
        lambda y: np.log(y) / u,
        direction="increasing" if u > 0 else "decreasing",
        family="exponential",
        params=(af,),
        validation_halfwidth=min(_DEFAULT_HALFWIDTH, 36.0 / abs(u)),
    )


def power(gamma: float) -> KNFunction:
    """psi(x) = x**gamma on x >= 0 with gamma > 0."""
    g = float(gamma)
    if g <= 0.0:
        raise ParameterError("power KN-function needs gamma > 0")
    return make_kn_function(
        f"power({g:g})",
        lambda x: np.power(np.asarray(x, dtype=float), g),
        lambda y: np.power(np.asarray(y, dtype=float), 1.0 / g),
        domain=(0.0, math.inf),
        family="power",
        params=(g,),
    )


def phi_q_function(q) -> KNFunction:
    """psi(x) = (exp((1-q) x) - 1) / (1-q), the deformed-log image of exp.

    Strictly increasing for every q > 0; collapses to the identity at the
    classical parameter.
    """
    qp = as_qparam(q)
    name = f"phi_q({qp.value:g})"
    if qp.is_classical():
        return make_kn_function(
            name,
            lambda x: np.asarray(x, dtype=float) + 0.0,
            lambda y: np.asarray(y, dtype=float) + 0.0,
            family="phi_q",
            params=(qp.value,),
        )
    u = 1.0 - qp.value
    return make_kn_function(
        name,
        lambda x: np.expm1(u * np.asarray(x, dtype=float)) / u,
        lambda y: np.log1p(u * np.asarray(y, dtype=float)) / u,
        family="phi_q",
        params=(qp.value,),
        # the forward saturates at 1/(q-1); past |1-q| x ~ 13 adjacent grid
        # values become indistinguishable in doubles
        validation_halfwidth=min(_DEFAULT_HALFWIDTH, 13.0 / abs(u)),
    )


_BUILTIN_FACTORIES = {
    "linear": linear,
    "exponential": exponential,
    "power": power,
    "phi_q": phi_q_function,
}


def builtin(name: str, *params: float) -> KNFunction:
    """Dispatch to one of the builtin families by name."""
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        raise ParameterError(
            f"unknown KN-function family {name!r}; choose from {sorted(_BUILTIN_FACTORIES)}"
        ) from None
    return factory(*params)


def _affine_validation_halfwidth(psi: KNFunction) -> float:
    # an affine offset forces the inverse through (y - b)/a, whose absolute
    # rounding the inverse derivative amplifies by exp(|1-q| x) for the
    # exponential-type families; keep the validation grid where 1e-10 round
    # trips are representable in doubles
    if psi.family in ("exponential", "phi_q") and psi.params:
        u = 1.0 - psi.params[0]
        if u != 0.0:
            return min(_SAMPLING_HI, 13.0 / abs(u))
    return _DEFAULT_HALFWIDTH


def affine_image(psi: KNFunction, a: float, b: float = 0.0) -> KNFunction:
    """a * psi + b with a != 0, which is KN-equivalent to psi."""
    af, bf = float(a), float(b)
    if af == 0.0:
        raise ParameterError("affine image needs a != 0")
    if af < 0:
        direction = "decreasing" if psi.direction == "increasing" else "increasing"
    else:
        direction = psi.direction
    fwd, inv = psi.forward, psi.inverse
    return make_kn_function(
        f"affine({af:g},{bf:g},{psi.name})",
        lambda x: af * fwd(x) + bf,
        lambda y: inv((np.asarray(y, dtype=float) - bf) / af),
        domain=psi.domain,
        direction=direction,
        family="affine",
        params=(af, bf),
        validation_halfwidth=_affine_validation_halfwidth(psi),
    )


def negated(psi: KNFunction) -> KNFunction:
    """-psi, which produces the same quasilinear mean as psi."""
    return affine_image(psi, -1.0, 0.0)


@dataclass(frozen=True)
class KNMeanInput:
    """Values paired with a weight pmf over the same index positions."""

    values: tuple[float, ...]
    weights: Pmf

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        if len(values) != len(self.weights):
            raise ValueError(
                f"{len(values)} values for {len(self.weights)} weight atoms"
            )
        object.__setattr__(self, "values", values)

    def support_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(values, probabilities) restricted to atoms with positive weight."""
        probs = np.asarray(self.weights.probabilities)
        mask = probs > 0.0
        return np.asarray(self.values)[mask], probs[mask]


def kn_mean(inp: KNMeanInput, psi: KNFunction) -> float:
    """psi^{-1}(sum_k p_k psi(x_k)) over the weight support."""
    vals, probs = inp.support_arrays()
    lo, hi = psi.domain
    if np.any(vals < lo) or np.any(vals > hi):
        raise DomainError(f"values outside the domain [{lo:g}, {hi:g}] of {psi.name}")
    if vals.size == 1:
        # a one-point mean is that point; skipping the psi round trip keeps
        # consistency with certainty exact even where psi saturates and the
        # inverse is ill-conditioned
        return float(vals[0])
    return _mean_from_arrays(vals, probs, psi)


def _mean_from_arrays(vals: np.ndarray, probs: np.ndarray, psi: KNFunction) -> float:
    s = float(np.dot(probs, _apply(psi.forward, np.asarray(vals, dtype=float))))
    m = float(psi.inverse(s))
    vmin = float(np.min(vals))
    vmax = float(np.max(vals))
    # cannot trigger for a valid strictly monotone psi: the averaged psi-value
    # lies between psi(vmin) and psi(vmax)
    guard = 1e-9 * max(1.0, abs(vmin), abs(vmax))
    if not (vmin - guard <= m <= vmax + guard):
        raise AssertionError(
            f"quasilinear mean {m:g} escaped [{vmin:g}, {vmax:g}] under {psi.name}"
        )
    return m


def check_translativity(psi: KNFunction, c: float, inp: KNMeanInput) -> float:
    """|mean(values + c) - (mean(values) + c)|; zero exactly for the linear
    and exponential families."""
    cf = float(c)
    base = kn_mean(inp, psi)
    shifted = KNMeanInput(tuple(v + cf for v in inp.values), inp.weights)
    return abs(kn_mean(shifted, psi) - (base + cf))


def check_homogeneity(psi: KNFunction, d: float, inp: KNMeanInput) -> float:
    """|mean(d * values) - d * mean(values)|; zero exactly for linear psi."""
    df = float(d)
    if df == 0.0:
        raise ParameterError("scale factor d must be nonzero")
    base = kn_mean(inp, psi)
    scaled = KNMeanInput(tuple(df * v for v in inp.values), inp.weights)
    return abs(kn_mean(scaled, psi) - df * base)


def rng_for(seed: int, label: str) -> np.random.Generator:
    """Deterministic per-case stream: the top-level seed plus a CRC of the label."""
    return np.random.default_rng([int(seed) & 0xFFFFFFFF, zlib.crc32(label.encode("utf-8"))])


def dirichlet_weights(rng: np.random.Generator, n: int, floor: float = 1e-3) -> np.ndarray:
    """Symmetric Dirichlet(1) weights, smoothed away from 0.

    The floor keeps deformed single-event informations (which blow up like
    p**-(1-q) for q < 1) inside comfortable float range during verification
    runs.
    """
    w = rng.dirichlet(np.ones(int(n)))
    if floor:
        w = (w + floor) / (1.0 + n * floor)
    return w


def sampling_window(psi: KNFunction, lo: float = _SAMPLING_LO,
                    hi: float = _SAMPLING_HI) -> tuple[float, float]:
    """psi.domain intersected with the standard sampling range."""
    wlo = max(psi.domain[0], lo)
    whi = min(psi.domain[1], hi)
    if not wlo < whi:
        raise DomainError(f"{psi.name} has no room inside the window [{lo:g}, {hi:g}]")
    return wlo, whi


def sample_mean_input(rng: np.random.Generator, psi: KNFunction | None = None, *,
                      n_range: tuple[int, int] = (2, 8),
                      window: tuple[float, float] | None = None,
                      floor: float = 1e-3) -> KNMeanInput:
    """Random (values, weights) pair: values uniform in the sampling window,
    weights from a floored symmetric Dirichlet over 2-8 atoms."""
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    if window is None:
        if psi is None:
            raise ValueError("need either psi or an explicit window")
        window = sampling_window(psi)
    values = rng.uniform(window[0], window[1], n)
    weights = dirichlet_weights(rng, n, floor)
    pmf = Pmf(tuple((f"w{k}", float(weights[k])) for k in range(n)))
    return KNMeanInput(tuple(float(v) for v in values), pmf)


def _scalar_mean(psi: KNFunction, vals, probs) -> float:
    """Plain-Python re-evaluation of the mean (fsum over scalar calls)."""
    s = math.fsum(float(p) * float(psi.forward(float(v))) for v, p in zip(vals, probs))
    return float(psi.inverse(s))


def kn_equivalent(psi1: KNFunction, psi2: KNFunction, trials: int = 1000,
                  seed: int = 0, thresholds: Thresholds | None = None) -> VerificationReport:
    """Randomized check that two KN-functions produce identical means.

    Also fits an affine relation psi1 ~ a psi2 + b on a grid; the mean-based
    verdict and the fit residual must agree for well-conditioned inputs,
    because equality of the means on every input holds exactly when psi1 is a
    nonzero affine image of psi2.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    th = thresholds or Thresholds()
    lo = max(psi1.domain[0], psi2.domain[0])
    hi = min(psi1.domain[1], psi2.domain[1])
    if not lo < hi:
        raise DomainError(f"{psi1.name} and {psi2.name} have disjoint domains")
    wlo, whi = max(lo, _SAMPLING_LO), min(hi, _SAMPLING_HI)
    if not wlo < whi:
        # the shared domain sits outside the usual window; use it directly
        wlo = lo if math.isfinite(lo) else -_DEFAULT_HALFWIDTH
        whi = hi if math.isfinite(hi) else _DEFAULT_HALFWIDTH
    theorem_id = f"kn_equivalence:{psi1.name}~{psi2.name}"
    rng = rng_for(seed, theorem_id)
    max_res = -1.0
    worst = None
    for _ in range(int(trials)):
        inp = sample_mean_input(rng, window=(wlo, whi))
        m1 = kn_mean(inp, psi1)
        m2 = kn_mean(inp, psi2)
        res = abs(m1 - m2)
        if res > max_res:
            max_res = res
            worst = (inp, m1, m2)
    grid = np.linspace(wlo, whi, 129)
    y1 = _apply(psi1.forward, grid)
    y2 = _apply(psi2.forward, grid)
    design = np.stack([y2, np.ones_like(y2)], axis=1)
    coef, *_ = np.linalg.lstsq(design, y1, rcond=None)
    fit_residual = float(np.max(np.abs(y1 - design @ coef))) / max(1.0, float(np.max(np.abs(y1))))
    details = {
        "affine_slope": float(coef[0]),
        "affine_offset": float(coef[1]),
        "affine_fit_residual": fit_residual,
    }
    if max_res <= th.pass_residual:
        return VerificationReport(theorem_id, PASS, max(max_res, 0.0), int(trials),
                                  int(seed), details=details)
    inp, m1, m2 = worst
    vals, probs = inp.support_arrays()
    recheck = abs(_scalar_mean(psi1, vals, probs) - _scalar_mean(psi2, vals, probs))
    witness = {
        "values": [float(v) for v in vals],
        "weights": [float(p) for p in probs],
        "mean_psi1": m1,
        "mean_psi2": m2,
        "residual": max_res,
        "recheck_residual": recheck,
    }
    return VerificationReport(theorem_id, COUNTEREXAMPLE_FOUND, max_res, int(trials),
                              int(seed), witness=witness, details=details)
