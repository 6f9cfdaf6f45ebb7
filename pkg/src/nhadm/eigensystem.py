"""Biorthonormal eigensystem of H = h.sigma and its adjoint.

Right vectors solve H psi = E psi, left vectors solve Hdag phi = conj(E) phi,
and the pair is rescaled so <phi_a|psi_b> = delta_ab.  The right vector is
gauge-fixed (largest component real positive, unit norm) so results are
deterministic; the left vector absorbs the biorthonormalization factor.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEigensystem
from .model import (
    BandEnergies,
    ComplexField3,
    ModelParams,
    Momentum,
    build_field,
    energy_bands,
    principal_sqrt,
)

__all__ = [
    "PAULI",
    "BiorthogonalSystem",
    "Projector",
    "pauli_dot",
    "hamiltonian",
    "eigensystem_at",
    "projectors",
    "projectors_closed_form",
    "biorthonormal_trace",
]

EPS_SING = 1e-8

PAULI = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def pauli_dot(a) -> np.ndarray:
    """a.sigma for a complex 3-vector a."""
    ax, ay, az = a
    return np.array([[az, ax - 1j * ay], [ax + 1j * ay, -az]], dtype=complex)


def hamiltonian(f: ComplexField3) -> np.ndarray:
    return pauli_dot((f.hx, f.hy, f.hz))


@dataclass(frozen=True)
class BiorthogonalSystem:
    psi_plus_R: np.ndarray
    psi_minus_R: np.ndarray
    phi_plus_L: np.ndarray
    phi_minus_L: np.ndarray
    energies: BandEnergies
    degenerate: bool
    field: ComplexField3

    def right(self, band: str) -> np.ndarray:
        return self.psi_plus_R if band == "+" else self.psi_minus_R

    def left(self, band: str) -> np.ndarray:
        return self.phi_plus_L if band == "+" else self.phi_minus_L


@dataclass(frozen=True)
class Projector:
    matrix: np.ndarray
    band: str


def _gauge_fix(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    j = int(np.argmax(np.abs(v)))
    return v * (abs(v[j]) / v[j])


def _match(eigvals, eigvecs, target):
    idx = int(np.argmin(np.abs(eigvals - target)))
    return eigvecs[:, idx]


def eigensystem_at(p: ModelParams, k: Momentum, eps_sing: float = EPS_SING) -> BiorthogonalSystem:
    """Biorthonormal eigensystem at one momentum.

    The degenerate flag is set (and the raw eigenvectors returned without
    normalization) when |E| falls below eps_sing relative to the field scale;
    downstream consumers must skip or subdivide around such points.
    """
    f = build_field(p, k)
    bands = energy_bands(f, p, k)
    H = hamiltonian(f)
    wr, vr = np.linalg.eig(H)
    wl, vl = np.linalg.eig(H.conj().T)

    scale = max(1.0, abs(f.hx), abs(f.hy), abs(f.hz))
    degenerate = bands.degenerate or bands.modulus < eps_sing * scale

    psi_p = _gauge_fix(_match(wr, vr, bands.e_plus))
    psi_m = _gauge_fix(_match(wr, vr, bands.e_minus))
    phi_p = _match(wl, vl, np.conj(bands.e_plus))
    phi_m = _match(wl, vl, np.conj(bands.e_minus))

    if not degenerate:
        ov_p = np.vdot(phi_p, psi_p)
        ov_m = np.vdot(phi_m, psi_m)
        if min(abs(ov_p), abs(ov_m)) < eps_sing:
            degenerate = True
        else:
            phi_p = phi_p / np.conj(ov_p)
            phi_m = phi_m / np.conj(ov_m)

    return BiorthogonalSystem(psi_p, psi_m, phi_p, phi_m, bands, degenerate, f)


def projectors(sys: BiorthogonalSystem) -> tuple[Projector, Projector]:
    """Band projectors |psi_pm><phi_pm| from the biorthonormal pair."""
    if sys.degenerate:
        raise DegenerateEigensystem(
            f"projectors undefined at a band degeneracy (|E|={sys.energies.modulus:.3e})"
        )
    P_plus = np.outer(sys.psi_plus_R, sys.phi_plus_L.conj())
    P_minus = np.outer(sys.psi_minus_R, sys.phi_minus_L.conj())
    return Projector(P_plus, "+"), Projector(P_minus, "-")


def projectors_closed_form(f: ComplexField3, bands: BandEnergies) -> tuple[Projector, Projector]:
    """Closed-form projectors (I pm hhat.sigma)/2 with hhat = h/sqrt(h.h)."""
    if bands.degenerate:
        raise DegenerateEigensystem("closed-form projectors undefined at h.h = 0")
    e = principal_sqrt(f.norm_sq)
    hs = hamiltonian(f) / e
    eye = np.eye(2, dtype=complex)
    return Projector((eye + hs) / 2, "+"), Projector((eye - hs) / 2, "-")


def biorthonormal_trace(mat: np.ndarray, sys: BiorthogonalSystem) -> complex:
    """Trace in the biorthonormal sense: sum_n <phi_n|mat|psi_n>."""
    return complex(
        np.vdot(sys.phi_plus_L, mat @ sys.psi_plus_R)
        + np.vdot(sys.phi_minus_L, mat @ sys.psi_minus_R)
    )
