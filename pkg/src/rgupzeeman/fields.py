"""Deformation-modified magnetostatic field, field tensor, vector potential.

For a uniform magnetostatic field the whole deformation collapses to the
scalar factor f = 1 - eps gamma^2 (mc)^2 applied to B (and hence to the
Coulomb-gauge vector potential A = (B x r)/2).  Electric fields are fixed
to zero; spatially varying fields are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .units import PhysicalParams

# Levi-Civita symbol on spatial indices 1..3 (stored 0-based).
_EPS3 = np.zeros((3, 3, 3))
for _i, _j, _k, _s in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                       (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1)):
    _EPS3[_i, _j, _k] = _s


@dataclass(frozen=True)
class FieldConfig:
    """Uniform field configuration with its deformation factor."""

    B: np.ndarray                 # gauss, shape (3,)
    deformation_factor: float     # f = 1 - eps gamma^2 (mc)^2
    E: np.ndarray = field(default_factory=lambda: np.zeros(3))  # fixed zero

    def __post_init__(self):
        object.__setattr__(self, "B", np.asarray(self.B, dtype=float))
        object.__setattr__(self, "E", np.asarray(self.E, dtype=float))
        if np.any(self.E != 0.0):
            raise ValueError("electric fields are out of scope; E must be zero")


def rgup_factor(params: PhysicalParams) -> float:
    """Scalar field-deformation factor 1 - eps gamma^2 (mc)^2 (order gamma^2)."""
    return 1.0 - params.correction_scale


def rgup_factor_correction(params: PhysicalParams) -> float:
    """The deviation (factor - 1) = -eps gamma^2 (mc)^2 at full significance.

    At physical scales the deviation is ~1e-45 and vanishes inside the
    rounded factor, so callers needing the correction itself use this.
    """
    return -params.correction_scale


def gup_factor(params: PhysicalParams, p2: float) -> float:
    """Nonrelativistic limit of the field factor: 1 + eps gamma^2 <p^2>."""
    return 1.0 + params.eps_gamma2 * p2


def make_field_config(B, params: PhysicalParams) -> FieldConfig:
    return FieldConfig(B=np.asarray(B, dtype=float),
                       deformation_factor=rgup_factor(params))


def b_rgup(B, params: PhysicalParams) -> np.ndarray:
    """Deformed uniform field: component-wise f*B, direction unchanged."""
    return rgup_factor(params) * np.asarray(B, dtype=float)


def a_rgup(B, x, params: PhysicalParams) -> np.ndarray:
    """Deformed Coulomb-gauge vector potential f * (B x r) / 2.

    For B = B zhat this is f * (-B y / 2, B x / 2, 0).
    """
    B = np.asarray(B, dtype=float)
    x = np.asarray(x, dtype=float)
    return rgup_factor(params) * 0.5 * np.cross(B, x)


def field_tensor(config: FieldConfig) -> np.ndarray:
    """Antisymmetric field tensor with F_ij = -eps_ijk B^k and F_i0 = E^i = 0.

    Indices run 0..3; the spatial block is populated from B, the mixed
    components from E (zero here).
    """
    F = np.zeros((4, 4))
    F[1:, 1:] = -np.einsum("ijk,k->ij", _EPS3, config.B)
    F[1:, 0] = config.E
    F[0, 1:] = -config.E
    return F


def b_from_tensor(F: np.ndarray) -> np.ndarray:
    """Recover B^k = -(1/2) eps_ijk F_ij from the spatial block."""
    return -0.5 * np.einsum("ijk,ij->k", _EPS3, F[1:, 1:])
