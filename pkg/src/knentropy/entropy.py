"""Information measures over finite pmfs, in nats.

The additive family (Hartley, Shannon, Renyi) and the pseudo-additive family
(deformed Hartley, Tsallis) are linked by the strictly increasing bridge
phi_q(x) = (exp((1-q) x) - 1) / (1-q), so the two sides always rank
distributions identically and share constrained maximizers.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import InfiniteInformationError
from .knmean import KNFunction, KNMeanInput, kn_mean
from .pmf import Pmf
from .qalgebra import QParam, as_qparam, q_log_of_exp
from .reports import format_float, render_json

__all__ = [
    "hartley",
    "q_hartley",
    "shannon",
    "renyi",
    "tsallis",
    "quasilinear_entropy",
    "q_quasilinear_entropy",
    "phi_q",
    "EntropyReport",
    "entropy_report",
    "pmf_digest",
]


def _support_probs(p: Pmf) -> np.ndarray:
    return np.asarray([pr for _, pr in p.atoms if pr > 0.0])


def _positive_probability(p: Pmf, label: str) -> float:
    pr = p.probability(label)
    if pr <= 0.0:
        raise InfiniteInformationError(
            f"event {label!r} has probability 0; its information is infinite"
        )
    return pr


def hartley(p: Pmf, label: str) -> float:
    """Single-event information -log(p); nonnegative, additive over products,
    and equal to 1 exactly at p = 1/e."""
    return -math.log(_positive_probability(p, label))


def q_hartley(p: Pmf, label: str, q) -> float:
    """Deformed single-event information ln_q(1/p); pseudo-additive over products."""
    return q_log_of_exp(-math.log(_positive_probability(p, label)), as_qparam(q))


def shannon(p: Pmf) -> float:
    """- sum p log p over the support."""
    probs = _support_probs(p)
    return float(-np.dot(probs, np.log(probs)))


def renyi(p: Pmf, alpha) -> float:
    """log(sum p**alpha) / (1 - alpha); collapses to shannon at classical alpha."""
    a = as_qparam(alpha)
    if a.is_classical():
        return shannon(p)
    probs = _support_probs(p)
    t = a.value * np.log(probs)
    tmax = float(np.max(t))
    log_power_sum = tmax + math.log(float(np.sum(np.exp(t - tmax))))
    return log_power_sum / (1.0 - a.value)


def tsallis(p: Pmf, q) -> float:
    """(1 - sum p**q) / (q - 1); collapses to shannon at classical q.

    Powers are evaluated as exp(q log p) over the support only, so q < 1 never
    meets a literal 0**q.
    """
    qp = as_qparam(q)
    if qp.is_classical():
        return shannon(p)
    probs = _support_probs(p)
    power_sum = float(np.sum(np.exp(qp.value * np.log(probs))))
    return (1.0 - power_sum) / (qp.value - 1.0)


def quasilinear_entropy(p: Pmf, psi: KNFunction) -> float:
    """Quasilinear mean of the single-event informations under psi.

    Linear psi reproduces shannon; psi(x) = exp((1-alpha) x) reproduces renyi.
    """
    sp = p.restrict_to_support()
    values = tuple(-math.log(pr) for _, pr in sp.atoms)
    return kn_mean(KNMeanInput(values, sp), psi)


def q_quasilinear_entropy(p: Pmf, psi: KNFunction, q) -> float:
    """Quasilinear mean of the deformed single-event informations under psi.

    Linear psi reproduces tsallis (the plain expectation of ln_q(1/p)).
    """
    qp = as_qparam(q)
    sp = p.restrict_to_support()
    values = tuple(q_log_of_exp(-math.log(pr), qp) for _, pr in sp.atoms)
    return kn_mean(KNMeanInput(values, sp), psi)


def phi_q(x: float, q) -> float:
    """Strictly increasing bridge (exp((1-q) x) - 1) / (1-q) = ln_q(exp(x)).

    Maps renyi to tsallis at matching parameter; the identity at classical q.
    """
    return q_log_of_exp(float(x), as_qparam(q))


def pmf_digest(p: Pmf) -> str:
    """Short content hash used for default report ids."""
    h = hashlib.sha1()
    for label, pr in p.atoms:
        h.update(f"{label}={format_float(pr)};".encode("utf-8"))
    return h.hexdigest()[:8]


@dataclass(frozen=True)
class EntropyReport:
    """All measures for one pmf at one parameter, plus the bridge residual."""

    pmf_id: str
    parameter: QParam
    shannon: float
    renyi: float
    tsallis: float
    phi_q_residual: float

    def to_json_dict(self) -> dict:
        return {
            "pmf_id": self.pmf_id,
            "q": self.parameter.value,
            "shannon": self.shannon,
            "renyi": self.renyi,
            "tsallis": self.tsallis,
            "phi_q_residual": self.phi_q_residual,
        }

    def to_json(self) -> str:
        return render_json(self.to_json_dict())


def entropy_report(p: Pmf, q, pmf_id: str | None = None) -> EntropyReport:
    """Bundle shannon, renyi and tsallis at one parameter and cross-check the
    bridge identity tsallis = phi_q(renyi)."""
    qp = as_qparam(q)
    s = shannon(p)
    r = renyi(p, qp)
    t = tsallis(p, qp)
    residual = abs(t - phi_q(r, qp))
    if residual > 1e-10 * (1.0 + abs(t)):
        # internal consistency check; both sides are computed from the same
        # power sum, so this cannot trigger for a valid pmf
        raise AssertionError(f"entropy bridge out of tolerance: residual {residual:g}")
    return EntropyReport(
        pmf_id if pmf_id is not None else f"pmf-{pmf_digest(p)}",
        qp, s, r, t, residual,
    )
