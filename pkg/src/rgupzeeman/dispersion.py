"""Deformed mass-shell condition: exact root and series for p0.p0.

The linearized deformation turns the mass-shell condition into a quadratic
in u = p0.p0:

    2 eps gamma^2 u^2 + u + (mc)^2 = 0.

We keep the root that tends to -(mc)^2 as the deformation vanishes.  With
q = eps gamma^2 (mc)^2 that root is

    u = (-1 + sqrt(1 - 8q)) / (4 eps gamma^2)
      = -2 (mc)^2 / (1 + sqrt(1 - 8q)),

where the second (rationalized) form is the same number with the
subtraction removed, so it keeps full significance all the way down to the
physical q ~ 1e-45 and needs no series switchover.  Everything here only
consumes the products eps*gamma^2 and (mc)^2, so "test units" mc = 1 are
fine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import PhysicalParams


class TransPlanckianMassError(ValueError):
    """No real mass-shell root: 8 eps gamma^2 (mc)^2 exceeds 1."""

    def __init__(self, scale: float):
        super().__init__(
            f"no real root: eps*gamma^2*(mc)^2 = {scale!r} exceeds 1/8")
        self.scale = scale


@dataclass(frozen=True)
class DispersionSolution:
    exact_root: float    # (g cm/s)^2-valued, negative for physical inputs
    series_root: float
    residual: float      # quadratic constraint at exact_root, relative to (mc)^2
    order: int


def p0sq_exact(mc: float, eps_gamma2: float) -> float:
    """Physical root of the deformed mass-shell quadratic."""
    mc2 = mc * mc
    if eps_gamma2 == 0.0:
        return -mc2
    q = eps_gamma2 * mc2
    disc = 1.0 - 8.0 * q
    if disc < 0.0:
        raise TransPlanckianMassError(q)
    return -2.0 * mc2 / (1.0 + math.sqrt(disc))


def p0sq_series(mc: float, eps_gamma2: float, order: int = 1) -> float:
    """Series expansion of the root in q = eps gamma^2 (mc)^2.

    Expanding u = -2(mc)^2 / (1 + sqrt(1 - 8q)):
        sqrt(1 - 8q) = 1 - 4q - 8q^2 - 32q^3 - ...
        u = -(mc)^2 / (1 - 2q - 4q^2 - ...) = -(mc)^2 (1 + 2q + 8q^2 + ...)
    Order 1 keeps -(mc)^2 - 2 eps gamma^2 (mc)^4; order 2 appends the
    -8 (eps gamma^2)^2 (mc)^6 term from the expansion above.
    """
    mc2 = mc * mc
    if order == 1:
        return -mc2 - 2.0 * eps_gamma2 * mc2 * mc2
    if order == 2:
        return (-mc2 - 2.0 * eps_gamma2 * mc2 * mc2
                - 8.0 * eps_gamma2**2 * mc2**3)
    raise ValueError(f"unsupported series order {order!r} (use 1 or 2)")


def solve_mass_shell(mc: float, eps_gamma2: float,
                     order: int = 1) -> DispersionSolution:
    """Exact root, series root, and the residual of the exact root."""
    exact = p0sq_exact(mc, eps_gamma2)
    series = p0sq_series(mc, eps_gamma2, order)
    raw = 2.0 * eps_gamma2 * exact * exact + exact + mc * mc
    residual = raw / (mc * mc) if mc != 0.0 else raw
    return DispersionSolution(exact_root=exact, series_root=series,
                              residual=residual, order=order)


def solve_from_params(params: PhysicalParams, order: int = 1) -> DispersionSolution:
    mc = params.m * params.constants.c
    return solve_mass_shell(mc, params.eps_gamma2, order)


@dataclass(frozen=True)
class NonRelLimitNote:
    """Documentation record for the nonrelativistic limit of p0.p0.

    In the c -> infinity limit the four-momentum scalar square reduces to
    -hbar^2 grad^2, i.e. the operator -p^2.  Downstream, this justifies
    replacing the (mc)^2 inside deformation factors by -<p^2> when forming
    the nonrelativistic (GUP) versions of deformed quantities.
    """

    statement: str

    def substitute_mass_shell(self, eps_gamma2: float, p2: float) -> float:
        """Deformation scale after the replacement (mc)^2 -> -<p^2>."""
        return -eps_gamma2 * p2 + 0.0  # +0.0 normalizes -0.0 away


_NOTE = NonRelLimitNote(
    statement=(
        "c -> infinity: p0.p0 -> -hbar^2 grad^2, so the scalar (mc)^2 in "
        "deformation factors becomes -<p^2> in the nonrelativistic limit."
    )
)


def nonrel_limit_note() -> NonRelLimitNote:
    """Return the (constant) nonrelativistic-limit substitution record."""
    return _NOTE
