"""Independent reference evaluators.

Nothing here depends on the closed forms: the series oracle sums the
defining power series term by term, the quadrature oracle integrates with a
fixed Gauss-Legendre rule, and ``expm_generic`` is a plain
scaling-and-squaring matrix exponential.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from .errors import SeriesNotConverged

QUAD_ORDER = 40
SERIES_NORM_BOUND = 8.0


class BlockTemplate(enum.Enum):
    """The six building-block series shapes.

    ========== ============================== ==========================
    template   term                           weight
    ========== ============================== ==========================
    X          x^m                            1/(l+m)!
    XY         x^m y                          1/(l+m+1)!
    XYZ        x^m y z^n                      1/(l+m+n+1)!
    XTAU       x^m tau                        (m+1)/(l+m+1)!
    XYTAU      x^m y tau                      1/(l+m+2)!
    XYZTAU     x^m y z^n tau                  (m+1)/(l+m+n+2)!
    ========== ============================== ==========================
    """

    X = "x"
    XY = "x,y"
    XYZ = "x,y,z"
    XTAU = "x,tau"
    XYTAU = "x,y,tau"
    XYZTAU = "x,y,z,tau"

    @property
    def needs(self) -> tuple:
        return {
            BlockTemplate.X: ("x",),
            BlockTemplate.XY: ("x", "y"),
            BlockTemplate.XYZ: ("x", "y", "z"),
            BlockTemplate.XTAU: ("x", "tau"),
            BlockTemplate.XYTAU: ("x", "y", "tau"),
            BlockTemplate.XYZTAU: ("x", "y", "z", "tau"),
        }[self]


@dataclass(frozen=True)
class SeriesSpec:
    """Arguments for ``series_eval``.

    ``x`` and ``z`` may be square matrices or scalars; ``y`` may be a
    matrix, a vector, or a scalar, and is multiplied in the order the
    template prints it.
    """

    template: BlockTemplate
    ell: int
    x: Any
    y: Any = None
    z: Any = None
    tau: float | None = None
    tol: float = 1e-14
    max_terms: int = 64

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")
        if self.ell < 0:
            raise ValueError("ell must be non-negative")
        for name in self.template.needs:
            if getattr(self, name) is None:
                raise ValueError(f"template {self.template.value} needs argument {name!r}")


def _spectral_radius(a) -> float:
    a = np.asarray(a, dtype=float)
    if a.ndim == 0:
        return abs(float(a))
    return float(np.max(np.abs(np.linalg.eigvals(a)))) if a.size else 0.0


def _mul(a, b):
    if np.ndim(a) == 0 or np.ndim(b) == 0:
        return a * b
    return a @ b


def _norm(a) -> float:
    a = np.asarray(a, dtype=float)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _powers(x, count: int) -> list:
    x = np.asarray(x, dtype=float)
    first = np.eye(x.shape[0]) if x.ndim == 2 else np.ones_like(x)
    out = [first]
    for _ in range(count - 1):
        out.append(_mul(out[-1], x))
    return out


def series_eval(spec: SeriesSpec) -> np.ndarray:
    """Sum the building-block series described by ``spec``.

    Single sums stop once two consecutive terms fall below
    ``tol * (|partial sum| + 1)`` in the max-norm.  Double sums are
    accumulated by anti-diagonal sweeps ``m + n = k`` with the same test
    applied to whole sweeps.
    """
    t = spec.template
    for name in ("x", "z"):
        arg = getattr(spec, name)
        if arg is not None and _spectral_radius(arg) > SERIES_NORM_BOUND:
            raise ValueError(f"spectral radius of {name} exceeds {SERIES_NORM_BOUND}")
    ell = spec.ell
    if t in (BlockTemplate.XYZ, BlockTemplate.XYZTAU):
        return _double_series(spec)

    x = np.asarray(spec.x, dtype=float)
    power = np.eye(x.shape[0]) if x.ndim == 2 else np.ones_like(x)
    acc = None
    small = 0
    for m in range(spec.max_terms):
        if t is BlockTemplate.X:
            w = 1.0 / math.factorial(ell + m)
            term = w * power
        elif t is BlockTemplate.XY:
            term = _mul(power, spec.y) / math.factorial(ell + m + 1)
        elif t is BlockTemplate.XTAU:
            term = (m + 1) / math.factorial(ell + m + 1) * power * spec.tau
        else:  # XYTAU
            term = _mul(power, spec.y) * spec.tau / math.factorial(ell + m + 2)
        acc = term if acc is None else acc + term
        small = small + 1 if _norm(term) < spec.tol * (_norm(acc) + 1.0) else 0
        if small >= 2:
            return np.asarray(acc)
        power = _mul(power, x)
    raise SeriesNotConverged(f"{t.value} series did not converge in {spec.max_terms} terms")


def _double_series(spec: SeriesSpec) -> np.ndarray:
    ell = spec.ell
    shift = 1 if spec.template is BlockTemplate.XYZ else 2
    tau = 1.0 if spec.template is BlockTemplate.XYZ else spec.tau
    xp = _powers(spec.x, spec.max_terms + 1)
    zp = _powers(spec.z, spec.max_terms + 1)
    y = spec.y
    acc = None
    small = 0
    for k in range(spec.max_terms):
        denom = math.factorial(ell + k + shift)
        sweep = None
        for m in range(k + 1):
            w = (m + 1 if shift == 2 else 1) / denom
            term = w * _mul(_mul(xp[m], y), zp[k - m])
            sweep = term if sweep is None else sweep + term
        sweep = sweep * tau
        acc = sweep if acc is None else acc + sweep
        small = small + 1 if _norm(sweep) < spec.tol * (_norm(acc) + 1.0) else 0
        if small >= 2:
            return np.asarray(acc)
    raise SeriesNotConverged(
        f"{spec.template.value} double series did not converge in {spec.max_terms} sweeps")


@lru_cache(maxsize=None)
def gauss_legendre(order: int = QUAD_ORDER) -> tuple:
    """Nodes and weights of the Gauss-Legendre rule mapped to [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    nodes = 0.5 * (x + 1.0)
    weights = 0.5 * w
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def quadrature_lift(f: Callable[[float], Any], ell: int, order: int = QUAD_ORDER):
    """``integral_0^1 alpha**ell f(alpha) d alpha`` by fixed Gauss-Legendre."""
    nodes, weights = gauss_legendre(order)
    acc = None
    for a, w in zip(nodes, weights):
        term = (w * a ** ell) * np.asarray(f(float(a)), dtype=float)
        acc = term if acc is None else acc + term
    return acc


def quadrature_2d(f: Callable[[float, float], float], order: int = QUAD_ORDER) -> float:
    """Tensor Gauss-Legendre integral of ``f(a, b)`` over the unit square."""
    nodes, weights = gauss_legendre(order)
    return float(sum(wa * wb * f(float(a), float(b))
                     for a, wa in zip(nodes, weights) for b, wb in zip(nodes, weights)))


_TAYLOR_DEGREE = 18


def expm_generic(A) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a Taylor core.

    The matrix is halved until its 1-norm is at most 1/2, where a degree-18
    Taylor polynomial is accurate to well below double precision, then the
    result is squared back up.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    norm = float(np.max(np.sum(np.abs(A), axis=0))) if n else 0.0
    s = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    B = A / (2.0 ** s)
    E = np.eye(n)
    for k in range(_TAYLOR_DEGREE, 0, -1):
        E = np.eye(n) + (B @ E) / k
    for _ in range(s):
        E = E @ E
    return E
