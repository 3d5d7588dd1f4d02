"""Core linear algebra: skew operators, group ids, tangent vectors, wedge maps.

Matrices are plain ``numpy`` float arrays.  Tangent vectors carry their group
id and a flat coordinate array laid out in the fixed component order used
throughout the package:

=======  ==============================  =========
group    layout                          dimension
=======  ==============================  =========
SO2      phi                             1
SE2      rho(2), phi                     3
SO3      phi(3)                          3
SE3      rho, phi                        6
SE23     rho, nu, phi                    9
SGal3    rho, nu, phi, tau               10
Sim3     rho, phi, lam                   7
=======  ==============================  =========
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import AdjointGroupNotSupported, SingularMatrix

# Largest condition number accepted by ``mat_inverse``.
COND_LIMIT = 1e12

S2 = np.array([[0.0, -1.0], [1.0, 0.0]])


class GroupId(enum.Enum):
    """The twelve matrix representations handled by the package."""

    SO2 = "so2"
    SE2 = "se2"
    AdSE2 = "adse2"
    SO3 = "so3"
    SE3 = "se3"
    AdSE3 = "adse3"
    SE23 = "se23"
    AdSE23 = "adse23"
    SGal3 = "sgal3"
    AdSGal3 = "adsgal3"
    Sim3 = "sim3"
    AdSim3 = "adsim3"

    @classmethod
    def parse(cls, text: str) -> "GroupId":
        """Look up a group by case-insensitive name, e.g. ``"se3"`` or ``"AdSE3"``."""
        key = text.strip().lower().replace("_", "").replace("(", "").replace(")", "")
        for g in cls:
            if g.value == key:
                return g
        raise ValueError(f"unknown group {text!r}; expected one of "
                         + ", ".join(g.value for g in cls))

    @property
    def dim(self) -> int:
        """Side length of the representation matrix."""
        return _MATRIX_DIM[self]

    @property
    def is_adjoint(self) -> bool:
        return self in _BASE_OF

    @property
    def base(self) -> "GroupId":
        """The underlying group (identity for base ids)."""
        return _BASE_OF.get(self, self)

    @property
    def adjoint(self) -> "GroupId | None":
        """The distinct adjoint id, or None for SO2/SO3 and adjoint ids."""
        return _ADJOINT_OF.get(self)

    @property
    def layout(self) -> tuple:
        """Tuple of (segment name, length) pairs of the tangent coordinates."""
        return _LAYOUT[self.base]

    @property
    def tangent_dim(self) -> int:
        return sum(n for _, n in self.layout)

    @property
    def adjoint_dim(self) -> int:
        """Side length of the adjoint matrix of the base group."""
        return {GroupId.SO2: 1, GroupId.SO3: 3}.get(self.base, self.base.tangent_dim)


_MATRIX_DIM = {
    GroupId.SO2: 2, GroupId.SE2: 3, GroupId.AdSE2: 3,
    GroupId.SO3: 3, GroupId.SE3: 4, GroupId.AdSE3: 6,
    GroupId.SE23: 5, GroupId.AdSE23: 9, GroupId.SGal3: 5,
    GroupId.AdSGal3: 10, GroupId.Sim3: 4, GroupId.AdSim3: 7,
}

_BASE_OF = {
    GroupId.AdSE2: GroupId.SE2, GroupId.AdSE3: GroupId.SE3,
    GroupId.AdSE23: GroupId.SE23, GroupId.AdSGal3: GroupId.SGal3,
    GroupId.AdSim3: GroupId.Sim3,
}
_ADJOINT_OF = {v: k for k, v in _BASE_OF.items()}

_LAYOUT = {
    GroupId.SO2: (("phi", 1),),
    GroupId.SE2: (("rho", 2), ("phi", 1)),
    GroupId.SO3: (("phi", 3),),
    GroupId.SE3: (("rho", 3), ("phi", 3)),
    GroupId.SE23: (("rho", 3), ("nu", 3), ("phi", 3)),
    GroupId.SGal3: (("rho", 3), ("nu", 3), ("phi", 3), ("tau", 1)),
    GroupId.Sim3: (("rho", 3), ("phi", 3), ("lam", 1)),
}

BASE_GROUPS = tuple(_LAYOUT)


def layout_string(group: GroupId) -> str:
    """Human-readable coordinate layout, e.g. ``"rho(3), phi(3)"``."""
    return ", ".join(f"{name}({n})" for name, n in group.layout)


@dataclass(frozen=True, eq=False)
class TangentVector:
    """Group-tagged Lie-algebra coordinates.

    ``coords`` is stored as a read-only float array.  Scalar segments
    (``tau``, ``lam`` and the planar ``phi``) are returned as floats by the
    accessors.
    """

    group: GroupId
    coords: np.ndarray

    def __post_init__(self):
        c = np.array(self.coords, dtype=float).reshape(-1)
        if c.size != self.group.tangent_dim:
            raise ValueError(
                f"{self.group.value} expects {self.group.tangent_dim} coordinates "
                f"({layout_string(self.group)}), got {c.size}")
        if not np.all(np.isfinite(c)):
            raise ValueError("tangent coordinates must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_parts(cls, group: GroupId, **parts) -> "TangentVector":
        """Build from named segments; missing segments default to zero."""
        out = []
        for name, n in group.layout:
            val = parts.pop(name, np.zeros(n))
            out.append(np.atleast_1d(np.asarray(val, dtype=float)))
        if parts:
            raise ValueError(f"segments {sorted(parts)} not in {group.value} layout")
        return cls(group, np.concatenate(out))

    @classmethod
    def zero(cls, group: GroupId) -> "TangentVector":
        return cls(group, np.zeros(group.tangent_dim))

    def segment(self, name: str):
        start = 0
        for seg, n in self.group.layout:
            if seg == name:
                block = self.coords[start:start + n]
                return float(block[0]) if n == 1 else block
            start += n
        raise AttributeError(f"{self.group.value} has no segment {name!r}")

    rho = property(lambda self: self.segment("rho"))
    nu = property(lambda self: self.segment("nu"))
    phi = property(lambda self: self.segment("phi"))
    lam = property(lambda self: self.segment("lam"))
    tau = property(lambda self: self.segment("tau"))

    @property
    def angle(self) -> float:
        """Rotation magnitude ``|phi|``."""
        return float(np.linalg.norm(np.atleast_1d(self.phi)))

    def with_coords(self, coords) -> "TangentVector":
        return TangentVector(self.group, coords)

    def __add__(self, other: "TangentVector") -> "TangentVector":
        _same_layout(self, other)
        return self.with_coords(self.coords + other.coords)

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        _same_layout(self, other)
        return self.with_coords(self.coords - other.coords)

    def __mul__(self, scalar: float) -> "TangentVector":
        return self.with_coords(float(scalar) * self.coords)

    __rmul__ = __mul__

    def __neg__(self) -> "TangentVector":
        return self.with_coords(-self.coords)

    def __eq__(self, other):
        if not isinstance(other, TangentVector):
            return NotImplemented
        return self.group.base == other.group.base and np.array_equal(self.coords, other.coords)

    def __hash__(self):
        return hash((self.group.base, self.coords.tobytes()))


def _same_layout(a: TangentVector, b: TangentVector):
    if a.group.base != b.group.base:
        raise ValueError(f"layout mismatch: {a.group.value} vs {b.group.value}")


def skew3(v) -> np.ndarray:
    """Cross-product matrix ``v^`` so that ``skew3(a) @ b == cross(a, b)``."""
    x, y, z = np.asarray(v, dtype=float)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def skew2(phi: float) -> np.ndarray:
    """Planar generator ``phi * S`` with ``S = [[0, -1], [1, 0]]``."""
    return float(phi) * S2


def _require_base(xi: TangentVector):
    if xi.group.is_adjoint:
        raise AdjointGroupNotSupported(
            f"{xi.group.value} is an adjoint id; pass the base group {xi.group.base.value}")


def wedge(xi: TangentVector) -> np.ndarray:
    """Lie-algebra matrix of ``xi`` in the group's defining representation."""
    _require_base(xi)
    g = xi.group
    A = np.zeros((g.dim, g.dim))
    if g is GroupId.SO2:
        return skew2(xi.phi)
    if g is GroupId.SO3:
        return skew3(xi.phi)
    if g is GroupId.SE2:
        A[:2, :2] = skew2(xi.phi)
        A[:2, 2] = xi.rho
    elif g is GroupId.SE3:
        A[:3, :3] = skew3(xi.phi)
        A[:3, 3] = xi.rho
    elif g is GroupId.SE23:
        A[:3, :3] = skew3(xi.phi)
        A[:3, 3] = xi.nu
        A[:3, 4] = xi.rho
    elif g is GroupId.SGal3:
        A[:3, :3] = skew3(xi.phi)
        A[:3, 3] = xi.nu
        A[:3, 4] = xi.rho
        A[3, 4] = xi.tau
    elif g is GroupId.Sim3:
        A[:3, :3] = skew3(xi.phi)
        A[:3, 3] = xi.rho
        A[3, 3] = -xi.lam
    return A


def curlywedge(xi: TangentVector) -> np.ndarray:
    """Adjoint-algebra matrix of ``xi``.

    SO2 has a trivial adjoint and yields the 1x1 zero matrix; SO3 is
    self-adjoint and yields ``skew3(phi)``.
    """
    _require_base(xi)
    g = xi.group
    if g is GroupId.SO2:
        return np.zeros((1, 1))
    if g is GroupId.SO3:
        return skew3(xi.phi)
    n = g.tangent_dim
    A = np.zeros((n, n))
    if g is GroupId.SE2:
        A[:2, :2] = skew2(xi.phi)
        A[:2, 2] = -S2 @ xi.rho
        return A
    P = skew3(xi.phi)
    if g is GroupId.SE3:
        A[:3, :3] = P
        A[:3, 3:] = skew3(xi.rho)
        A[3:, 3:] = P
    elif g is GroupId.SE23:
        for k in range(3):
            A[3 * k:3 * k + 3, 3 * k:3 * k + 3] = P
        A[:3, 6:] = skew3(xi.rho)
        A[3:6, 6:] = skew3(xi.nu)
    elif g is GroupId.SGal3:
        for k in range(3):
            A[3 * k:3 * k + 3, 3 * k:3 * k + 3] = P
        A[:3, 3:6] = -xi.tau * np.eye(3)
        A[:3, 6:9] = skew3(xi.rho)
        A[:3, 9] = xi.nu
        A[3:6, 6:9] = skew3(xi.nu)
    elif g is GroupId.Sim3:
        A[:3, :3] = P + xi.lam * np.eye(3)
        A[:3, 3:6] = skew3(xi.rho)
        A[:3, 6] = -xi.rho
        A[3:6, 3:6] = P
    return A


def mat_inverse(A) -> np.ndarray:
    """Inverse of a square matrix, refusing ill-conditioned input."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise SingularMatrix(f"condition estimate {cond:.3g} exceeds {COND_LIMIT:.0e}")
    try:
        return np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix(str(exc)) from exc
