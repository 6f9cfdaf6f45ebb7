"""2D non-Hermitian Dirac model: parameters, complex Zeeman field, energy bands.

The model is H(k) = h(k).sigma with h = (kx + i*kappa_x, ky + i*kappa_y,
m + i*delta).  Both bands are E_pm = pm sqrt(h.h); the square root is taken
on the principal branch (Re >= 0, ties broken toward Im >= 0), so E_plus is
deterministic everywhere, including on the cut where h.h is real negative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModelParams",
    "Momentum",
    "ComplexField3",
    "BandEnergies",
    "principal_sqrt",
    "build_field",
    "energy_bands",
    "energy_polar",
    "energy_bands_grid",
]

# modulus below this (relative to the local scale) counts as an exact band touch
DEGENERACY_ATOL = 1e-14


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class ModelParams:
    """Model parameters: real masses (m, delta) and momentum shifts (kappa)."""

    m: float
    delta: float
    kappa_x: float
    kappa_y: float
    bz_half_width: float = 1.0

    def __post_init__(self):
        for name in ("m", "delta", "kappa_x", "kappa_y", "bz_half_width"):
            _require_finite(name, getattr(self, name))
        if self.bz_half_width <= 0:
            raise ValueError("bz_half_width must be positive")

    @property
    def mass(self) -> complex:
        """Complex mass m + i*delta (the z component of the field)."""
        return complex(self.m, self.delta)


@dataclass(frozen=True)
class Momentum:
    kx: float
    ky: float

    def __post_init__(self):
        _require_finite("kx", self.kx)
        _require_finite("ky", self.ky)


@dataclass(frozen=True)
class ComplexField3:
    """Complex field h(k) and its complex square norm h.h (not |h|^2)."""

    hx: complex
    hy: complex
    hz: complex
    norm_sq: complex


@dataclass(frozen=True)
class BandEnergies:
    """Complex band pair with Cartesian split and polar form.

    e_plus is the principal square root of h.h.  The split satisfies
    e_plus = (e_r + 1j*mu*e_i)/sqrt(2) whenever mu != 0; for mu = 0 the
    energy is purely real (e_plus = modulus) or purely imaginary
    (e_plus = 1j*modulus), the tie falling on the +i side of the cut.
    phase lies in [0, pi/2] and satisfies e_plus = modulus*exp(1j*s*phase)
    with s = mu if mu != 0 else +1.
    """

    e_plus: complex
    e_minus: complex
    e_r: float
    e_i: float
    mu: int
    modulus: float
    phase: float
    eta: float
    degenerate: bool


def _clean(z: complex) -> complex:
    """Map signed zeros to +0.0 so branch cuts are approached from above."""
    return complex(z.real + 0.0, z.imag + 0.0)


def principal_sqrt(z: complex) -> complex:
    """Principal complex square root: Re >= 0, ties broken toward Im >= 0."""
    w = complex(np.sqrt(_clean(z)))
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        w = -w
    return w


def build_field(p: ModelParams, k: Momentum) -> ComplexField3:
    """Complex Zeeman field h(k) = k + i*kappa with the mass on the z axis."""
    hx = complex(k.kx, p.kappa_x)
    hy = complex(k.ky, p.kappa_y)
    hz = complex(p.m, p.delta)
    return ComplexField3(hx, hy, hz, _clean(hx * hx + hy * hy + hz * hz))


def _split_parts(p: ModelParams, k: Momentum):
    """Real/imaginary building blocks a = k^2 - kappa^2 and b = 2 k.kappa."""
    ksq = k.kx * k.kx + k.ky * k.ky + p.m * p.m
    gsq = p.kappa_x * p.kappa_x + p.kappa_y * p.kappa_y + p.delta * p.delta
    dot = k.kx * p.kappa_x + k.ky * p.kappa_y + p.m * p.delta
    return ksq - gsq, 2.0 * dot


def _phase_from_eta(a: float, eta: float) -> float:
    """Half-argument of a + i*a*eta via the arctan form, extended to a < 0."""
    if math.isnan(eta):
        return 0.0
    if math.isinf(eta):
        return 0.25 * math.pi
    root = math.sqrt(1.0 + eta * eta)
    t = math.sqrt((root - 1.0) / (root + 1.0)) if root > 1.0 else 0.0
    phi = math.atan(t)
    return phi if a >= 0 else 0.5 * math.pi - phi


def energy_bands(f: ComplexField3, p: ModelParams, k: Momentum) -> BandEnergies:
    """Band pair E_pm = pm sqrt(h.h) with Cartesian split and polar form."""
    a, b = _split_parts(p, k)
    e_plus = principal_sqrt(f.norm_sq)
    mod2 = math.hypot(a, b)
    e_r = math.sqrt(max(a + mod2, 0.0))
    e_i = math.sqrt(max(mod2 - a, 0.0))
    mu = 0 if b == 0.0 else (1 if b > 0.0 else -1)
    modulus = math.sqrt(mod2)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = float(np.divide(b, a))
    scale = max(1.0, abs(a), abs(b))
    degenerate = mod2 <= DEGENERACY_ATOL * scale
    phase = 0.0 if degenerate else _phase_from_eta(a, eta)
    return BandEnergies(
        e_plus=e_plus,
        e_minus=-e_plus,
        e_r=e_r,
        e_i=e_i,
        mu=mu,
        modulus=modulus,
        phase=phase,
        eta=eta,
        degenerate=degenerate,
    )


def energy_polar(b: BandEnergies):
    """Polar data (modulus, phase, eta); reconstructs e_plus as documented
    on BandEnergies.  The degenerate flag marks modulus = 0."""
    return b.modulus, b.phase, b.eta


def energy_bands_grid(p: ModelParams, kx, ky):
    """Vectorized principal-branch E_plus over momentum arrays."""
    kx = np.asarray(kx, dtype=float)
    ky = np.asarray(ky, dtype=float)
    hx = kx + 1j * p.kappa_x
    hy = ky + 1j * p.kappa_y
    hz = complex(p.m, p.delta)
    z = hx * hx + hy * hy + hz * hz
    # strip signed zeros off the imaginary part so the cut is approached
    # from above, matching principal_sqrt
    z = z.real + 1j * (z.imag + 0.0)
    e = np.sqrt(z)
    flip = (e.real < 0) | ((e.real == 0) & (e.imag < 0))
    return np.where(flip, -e, e)
