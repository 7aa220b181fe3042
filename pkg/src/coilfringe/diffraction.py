"""Electron diffraction fringes with and without a uniform vector potential.

Grating-equation model: a*sin(theta_k) = k*lambda with screen positions
y_k = D*tan(theta_k). The de Broglie wavelength uses the canonical
momentum mv + e*A, with the sign of A carried by the coil current
polarity. The model is non-relativistic by default; a relativistic
momentum mode exists for comparison but is not used for the reference
numbers.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .constants import constants
from .errors import DomainError, FitError, ModelDomainError, OrderLimitError

SMALL_ANGLE_LIMIT = 1e-3  # |tan - sin|/sin threshold for the flag
C_LIGHT = 299792458.0


@dataclass(frozen=True)
class BeamSpec:
    """Mono-energetic electron beam."""

    U: float  # accelerating voltage, V
    beam_width_phi: float  # beam width, m
    axis: tuple = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if self.U <= 0:
            raise DomainError("accelerating voltage U must be positive")
        if self.beam_width_phi <= 0:
            raise DomainError("beam width must be positive")
        n = np.linalg.norm(np.asarray(self.axis, dtype=float))
        if abs(n - 1.0) > 1e-9:
            raise DomainError("beam axis must be a unit vector")


@dataclass(frozen=True)
class GratingScreenSpec:
    """Crystalline foil grating and detecting screen."""

    a: float  # interatomic spacing, m
    D: float  # foil-to-screen distance, m

    def __post_init__(self):
        if self.a <= 0 or self.D <= 0:
            raise DomainError("grating spacing a and screen distance D must be positive")


@dataclass(frozen=True)
class FringeOrder:
    k: int
    theta_k: float  # rad
    y_k: float  # m, exact tan geometry
    ring_radius: float  # m, equals y_k for the circular pattern


@dataclass(frozen=True)
class FringePattern:
    orders: tuple
    interfringe_i: float  # y_1 - y_0, exact geometry
    interfringe_small_angle: float  # lambda*D/a
    wavelength: float
    P_eff: float
    small_angle_valid: bool
    distant_screen_ok: bool


def mechanical_momentum(U, relativistic=False):
    """Momentum of an electron accelerated through voltage U.

    sqrt(2*m_e*e*U) by default; the relativistic mode returns
    sqrt(2*m*e*U*(1 + e*U/(2*m*c^2))) and is provided for comparison
    only.
    """
    if U <= 0:
        raise DomainError("accelerating voltage U must be positive")
    c = constants()
    p = math.sqrt(2 * c.m_e * c.e * U)
    if relativistic:
        p *= math.sqrt(1 + c.e * U / (2 * c.m_e * C_LIGHT**2))
    return p


def de_broglie_lambda(p):
    """de Broglie wavelength lambda = h/p."""
    if p <= 0:
        raise DomainError("momentum must be positive")
    return constants().h / p


def effective_momentum(U, A, relativistic=False):
    """Canonical momentum mv + e*A for the signed axial potential A.

    The beam axis and A are collinear; the coil current polarity carries
    the sign of A.
    """
    c = constants()
    p = mechanical_momentum(U, relativistic) + c.e * A
    if p <= 0:
        raise ModelDomainError(
            f"effective momentum {p:.3e} kg*m/s is non-positive; "
            "outside the model's validity regime"
        )
    return p


def effective_momentum_vector(U, A_vec, axis, relativistic=False):
    """Misalignment variant: projects e*A onto the beam axis."""
    A_axial = float(np.dot(np.asarray(A_vec, dtype=float), np.asarray(axis, dtype=float)))
    return effective_momentum(U, A_axial, relativistic)


def fringe_pattern(beam, gs, A, k_max, relativistic=False):
    """Predict the ring pattern for orders 0..k_max.

    theta_k = arcsin(k*lambda_eff/a), y_k = D*tan(theta_k). The small
    angle interfringe lambda_eff*D/a is reported alongside the exact
    y_1 - y_0.
    """
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    P_eff = effective_momentum(beam.U, A, relativistic)
    lam = de_broglie_lambda(P_eff)
    s_max = k_max * lam / gs.a
    if s_max >= 1.0:
        feasible = int(gs.a / lam)  # largest k with k*lambda/a < 1
        if gs.a / lam == feasible:
            feasible -= 1
        raise OrderLimitError(
            f"grating equation unsolvable at order {k_max}; "
            f"max feasible order is {feasible}",
            max_order=feasible,
        )
    orders = []
    for k in range(k_max + 1):
        theta = math.asin(k * lam / gs.a)
        y = gs.D * math.tan(theta)
        orders.append(FringeOrder(k=k, theta_k=theta, y_k=y, ring_radius=y))
    theta1 = orders[1].theta_k
    small_angle_valid = (
        abs(math.tan(theta1) - math.sin(theta1)) / math.sin(theta1) < SMALL_ANGLE_LIMIT
    )
    distant_screen_ok = gs.D >= 10 * orders[-1].y_k
    return FringePattern(
        orders=tuple(orders),
        interfringe_i=orders[1].y_k - orders[0].y_k,
        interfringe_small_angle=lam * gs.D / gs.a,
        wavelength=lam,
        P_eff=P_eff,
        small_angle_valid=small_angle_valid,
        distant_screen_ok=distant_screen_ok,
    )


def inverse_interfringe(U, I, coil_K, gs):
    """Inverse small-angle interfringe a*(sqrt(2*m*e*U) + e*K*I)/(h*D).

    Linear in I at fixed U; identically 1 over the small-angle
    interfringe.
    """
    c = constants()
    P_eff = effective_momentum(U, coil_K * I)
    return gs.a * P_eff / (c.h * gs.D)


def linear_response_fit(samples):
    """Least squares of inverse interfringe against (sqrt(U), I).

    samples is a sequence of (U, I, inverse_i). Returns (alpha, beta,
    r_squared) where alpha multiplies sqrt(U) and beta multiplies I.
    """
    samples = list(samples)
    if len(samples) < 3:
        raise FitError("need at least 3 samples")
    if len({i for _, i, _ in samples}) < 2:
        raise FitError("samples must span at least 2 distinct currents")
    U = np.array([u for u, _, _ in samples], dtype=float)
    I = np.array([i for _, i, _ in samples], dtype=float)
    f = np.array([v for _, _, v in samples], dtype=float)
    X = np.column_stack([np.sqrt(U), I])
    if np.linalg.matrix_rank(X) < 2:
        raise FitError("rank-deficient design: sqrt(U) and I columns are degenerate")
    coef, _, _, _ = np.linalg.lstsq(X, f, rcond=None)
    resid = f - X @ coef
    ss_res = float(resid @ resid)
    ss_tot = float(np.sum((f - f.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return float(coef[0]), float(coef[1]), r_squared
