"""Scalar q-deformed arithmetic: q-logarithm, q-exponential, pseudo-addition.

The deformed logarithm is ln_q(x) = (x**(1-q) - 1) / (1 - q). It tends to
log(x) as q -> 1 and turns ordinary products into pseudo-sums:

    ln_q(x * y) = ln_q(x) (+)_q ln_q(y),   a (+)_q b = a + b + (1-q) a b.

All functions are pure scalar maps on IEEE doubles. Inside a small tolerance
band around q = 1 they dispatch to the classical closed forms, because the raw
expressions degenerate to 0/0 there and lose every significant digit first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError

__all__ = [
    "QParam",
    "as_qparam",
    "q_log",
    "q_log_of_exp",
    "q_exp",
    "pseudo_add",
    "pseudo_sum",
]


@dataclass(frozen=True)
class QParam:
    """Deformation / order parameter, restricted to positive values.

    ``is_classical()`` is true within ``classical_tolerance`` of 1; callers
    use it to switch to the ordinary logarithmic forms instead of evaluating
    expressions that are 0/0 at q = 1.
    """

    value: float
    classical_tolerance: float = 1e-8

    def __post_init__(self) -> None:
        value = float(self.value)
        if not math.isfinite(value) or value <= 0.0:
            raise ParameterError(f"q must be a finite positive real, got {self.value!r}")
        tol = float(self.classical_tolerance)
        if not math.isfinite(tol) or not 0.0 <= tol < 1.0:
            raise ParameterError(
                f"classical_tolerance must lie in [0, 1), got {self.classical_tolerance!r}"
            )
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "classical_tolerance", tol)

    def is_classical(self) -> bool:
        return abs(self.value - 1.0) <= self.classical_tolerance


def as_qparam(q) -> QParam:
    """Coerce a number (or pass through a QParam) to a validated QParam."""
    if isinstance(q, QParam):
        return q
    return QParam(float(q))


def q_log(x: float, q) -> float:
    """Deformed logarithm ln_q(x) = (x**(1-q) - 1) / (1-q), for x > 0."""
    qp = as_qparam(q)
    xf = float(x)
    if not (xf > 0.0) or math.isinf(xf):
        raise DomainError(f"q_log needs finite x > 0, got {x!r}")
    return q_log_of_exp(math.log(xf), qp)


def q_log_of_exp(t: float, q) -> float:
    """ln_q(exp(t)) = (exp((1-q) t) - 1) / (1-q), for any real t.

    This is the numerically stable core of the module: expm1 keeps full
    precision when (1-q)*t is small, so the q -> 1 transition is continuous
    instead of catastrophically cancelling.
    """
    qp = as_qparam(q)
    tf = float(t)
    if qp.is_classical():
        return tf
    u = 1.0 - qp.value
    return math.expm1(u * tf) / u


def q_exp(x: float, q) -> float:
    """Deformed exponential [1 + (1-q) x]**(1/(1-q)), the inverse of q_log.

    Defined only while 1 + (1-q) x > 0; outside that region the real inverse
    does not exist and a DomainError is raised.
    """
    qp = as_qparam(q)
    xf = float(x)
    if qp.is_classical():
        return math.exp(xf)
    u = 1.0 - qp.value
    if 1.0 + u * xf <= 0.0:
        raise DomainError(
            f"q_exp undefined: 1 + (1-q)x = {1.0 + u * xf:g} <= 0 for x={xf:g}, q={qp.value:g}"
        )
    return math.exp(math.log1p(u * xf) / u)


def pseudo_add(x: float, y: float, q) -> float:
    """Pseudo-addition x + y + (1-q) x y; ordinary addition at classical q."""
    qp = as_qparam(q)
    xf = float(x)
    yf = float(y)
    if qp.is_classical():
        return xf + yf
    # grouping the product keeps the operation exactly commutative
    return xf + yf + (1.0 - qp.value) * (xf * yf)


def pseudo_sum(xs, q) -> float:
    """Left-associated pseudo-addition fold over a non-empty sequence."""
    terms = [float(v) for v in xs]
    if not terms:
        raise ValueError("pseudo_sum needs at least one term")
    qp = as_qparam(q)
    acc = terms[0]
    for term in terms[1:]:
        acc = pseudo_add(acc, term, qp)
    return acc
