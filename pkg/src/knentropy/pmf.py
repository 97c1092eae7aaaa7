"""Finite discrete probability mass functions with string labels.

Zero-probability atoms are kept in storage but excluded from ``support()``.
Every expectation in this package iterates the support only, which realizes
the 0 * log(0) = 0 convention without special cases and keeps single-event
information finite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .errors import DistributionError, FormatError, ParameterError

__all__ = [
    "Pmf",
    "from_counts",
    "uniform",
    "degenerate",
    "product",
    "mixture",
    "from_csv_text",
    "from_json_text",
    "load",
]

_DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Pmf:
    atoms: tuple[tuple[str, float], ...]
    normalization_tolerance: float = _DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        atoms = tuple((str(label), float(p)) for label, p in self.atoms)
        if not atoms:
            raise DistributionError("a pmf needs at least one atom")
        labels = [label for label, _ in atoms]
        if len(set(labels)) != len(labels):
            raise DistributionError("atom labels must be unique")
        for label, p in atoms:
            if not math.isfinite(p) or p < 0.0:
                raise DistributionError(
                    f"probability of {label!r} is {p!r}, must be finite and >= 0"
                )
        tol = float(self.normalization_tolerance)
        total = math.fsum(p for _, p in atoms)
        if abs(total - 1.0) > tol:
            raise DistributionError(
                f"probabilities sum to {total:.17g}, off by more than {tol:g}"
            )
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "normalization_tolerance", tol)

    @classmethod
    def from_pairs(cls, pairs, *, renormalize: bool = False,
                   tolerance: float = _DEFAULT_TOLERANCE) -> "Pmf":
        """Build a pmf from (label, probability) pairs.

        Off-normalized input is rejected unless ``renormalize`` is set;
        silently rescaling would hide data errors.
        """
        items = [(str(label), float(p)) for label, p in pairs]
        if renormalize:
            for label, p in items:
                if not math.isfinite(p) or p < 0.0:
                    raise DistributionError(
                        f"probability of {label!r} is {p!r}, must be finite and >= 0"
                    )
            total = math.fsum(p for _, p in items)
            if total <= 0.0:
                raise DistributionError("cannot renormalize: total mass is not positive")
            items = [(label, p / total) for label, p in items]
        return cls(tuple(items), normalization_tolerance=tolerance)

    def __len__(self) -> int:
        return len(self.atoms)

    @cached_property
    def _index(self) -> dict[str, float]:
        return {label: p for label, p in self.atoms}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.atoms)

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.atoms)

    def probability(self, label: str) -> float:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no atom labelled {label!r}") from None

    def support(self) -> tuple[str, ...]:
        """Labels with strictly positive probability."""
        return tuple(label for label, p in self.atoms if p > 0.0)

    def restrict_to_support(self) -> "Pmf":
        """Same distribution with the zero-probability atoms dropped."""
        kept = tuple((label, p) for label, p in self.atoms if p > 0.0)
        return Pmf(kept, normalization_tolerance=self.normalization_tolerance)

    def as_dict(self) -> dict[str, float]:
        return dict(self.atoms)


def from_counts(counts, *, tolerance: float = _DEFAULT_TOLERANCE) -> Pmf:
    """Empirical pmf from (label, count) pairs; needs at least one positive count."""
    items = []
    for label, c in counts:
        ci = int(c)
        if ci != c:
            raise DistributionError(f"count for {label!r} is {c!r}, must be an integer")
        if ci < 0:
            raise DistributionError(f"count for {label!r} is negative")
        items.append((str(label), ci))
    total = sum(c for _, c in items)
    if total <= 0:
        raise DistributionError("at least one count must be positive")
    return Pmf(tuple((label, c / total) for label, c in items),
               normalization_tolerance=tolerance)


def uniform(n: int, *, prefix: str = "x") -> Pmf:
    """Equal masses 1/n on labels prefix0 .. prefix{n-1}."""
    if n < 1:
        raise DistributionError("uniform pmf needs n >= 1")
    p = 1.0 / n
    return Pmf(tuple((f"{prefix}{k}", p) for k in range(int(n))))


def degenerate(label: str = "x0") -> Pmf:
    """Single atom of mass 1 (the step distribution at one outcome)."""
    return Pmf(((str(label), 1.0),))


def product(p: Pmf, r: Pmf) -> Pmf:
    """Joint pmf of two independent distributions.

    Atoms are labelled "(i,j)" and stored in row-major order (all of r's
    atoms for p's first atom, then p's second, ...), which the marginal
    checks in the tests rely on.
    """
    atoms = tuple(
        (f"({lp},{lr})", pp * pr)
        for lp, pp in p.atoms
        for lr, pr in r.atoms
    )
    tol = p.normalization_tolerance + r.normalization_tolerance + 1e-12
    return Pmf(atoms, normalization_tolerance=tol)


def mixture(f: Pmf, g: Pmf, beta: float) -> Pmf:
    """Atomwise beta*f + (1-beta)*g over the union of the two label sets."""
    b = float(beta)
    if not 0.0 <= b <= 1.0:
        raise ParameterError(f"mixture weight must lie in [0, 1], got {beta!r}")
    seen = set(f.labels)
    labels = list(f.labels) + [label for label in g.labels if label not in seen]
    fd, gd = f.as_dict(), g.as_dict()
    atoms = tuple(
        (label, b * fd.get(label, 0.0) + (1.0 - b) * gd.get(label, 0.0))
        for label in labels
    )
    tol = max(f.normalization_tolerance, g.normalization_tolerance) + 1e-12
    return Pmf(atoms, normalization_tolerance=tol)


def _from_numbers(entries, counts_mode: bool, renormalize: bool) -> Pmf:
    if counts_mode:
        return from_counts(entries)
    return Pmf.from_pairs(entries, renormalize=renormalize)


def from_csv_text(text: str, *, renormalize: bool = False) -> Pmf:
    """Parse ``label,count`` or ``label,probability`` lines.

    When every value parses as an integer the column is treated as counts and
    normalized; otherwise the values are taken as probabilities.
    """
    entries = []
    all_integers = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'label,value', got {raw!r}")
        label, value_text = parts[0].strip(), parts[1].strip()
        if not label:
            raise FormatError(f"line {lineno}: empty label")
        try:
            value: float = int(value_text)
        except ValueError:
            all_integers = False
            try:
                value = float(value_text)
            except ValueError:
                raise FormatError(
                    f"line {lineno}: {value_text!r} is not a number"
                ) from None
            if not math.isfinite(value):
                raise FormatError(f"line {lineno}: value must be finite")
        entries.append((label, value))
    if not entries:
        raise FormatError("no data lines found")
    return _from_numbers(entries, all_integers, renormalize)


def from_json_text(text: str, *, renormalize: bool = False) -> Pmf:
    """Parse a JSON object mapping label -> number (ints mean counts)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or not data:
        raise FormatError("expected a non-empty JSON object mapping label to number")
    entries = []
    all_integers = True
    for label, value in data.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FormatError(f"value for {label!r} is not a number")
        if not isinstance(value, int):
            all_integers = False
            if not math.isfinite(value):
                raise FormatError(f"value for {label!r} must be finite")
        entries.append((str(label), value))
    return _from_numbers(entries, all_integers, renormalize)


def load(path, fmt: str = "auto", *, renormalize: bool = False) -> Pmf:
    """Read a distribution from a CSV or JSON file (format sniffed by default)."""
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "auto":
        suffix = Path(path).suffix.lower()
        if suffix == ".json":
            fmt = "json"
        elif suffix == ".csv":
            fmt = "csv"
        else:
            fmt = "json" if text.lstrip()[:1] == "{" else "csv"
    if fmt == "json":
        return from_json_text(text, renormalize=renormalize)
    if fmt == "csv":
        return from_csv_text(text, renormalize=renormalize)
    raise FormatError(f"unknown format {fmt!r} (expected csv, json or auto)")
