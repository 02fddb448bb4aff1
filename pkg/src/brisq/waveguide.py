"""Dispersion and Brillouin phase matching for a single-mode waveguide.

Conventions used throughout the package: frequencies are ordinary
frequencies in Hz (energy = h * frequency), wavenumbers are in rad/m,
velocities in m/s, lengths in m. The photon dispersion is linearized
around a reference mode at omega0; the linearization is only trusted in
a wavenumber window around that point, and the caller is responsible
for staying inside it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoSolution

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class WaveguideParams:
    """Waveguide with linearized photon branches and a linear acoustic branch.

    Attributes
    ----------
    omega0 : float
        Reference photon frequency in Hz (branch crossing point).
    vg : float
        Photon group velocity in m/s.
    va : float
        Acoustic velocity in m/s, 0 < va < vg.
    length : float
        Waveguide length in m (sets the discrete wavenumber grid).
    g : float
        Single-quantum photon-phonon coupling rate in Hz.
    u : float
        External coupling loss rate of the photon modes in Hz.
    gamma : float
        Intrinsic photon loss rate in Hz.
    """

    omega0: float
    vg: float
    va: float
    length: float
    g: float
    u: float
    gamma: float

    def __post_init__(self) -> None:
        if not self.omega0 > 0:
            raise ValueError("omega0 must be positive")
        if not 0 < self.va < self.vg:
            raise ValueError("velocities must satisfy 0 < va < vg")
        if not self.length > 0:
            raise ValueError("length must be positive")
        for name in ("g", "u", "gamma"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class BrillouinTriple:
    """One phase-matched pump/signal/phonon triple.

    Wavenumbers satisfy k_pump = k_signal + q_phonon exactly;
    frequencies satisfy omega_pump = omega_signal + Omega_phonon to
    rounding. All frequencies in Hz, wavenumbers in rad/m.
    """

    k_pump: float
    k_signal: float
    q_phonon: float
    omega_pump: float
    omega_signal: float
    Omega_phonon: float


def photon_frequency(params: WaveguideParams, k: float, branch: str = FORWARD) -> float:
    """Photon frequency at wavenumber k on the chosen linearized branch.

    The forward branch rises with k (omega0 + vg*k), the backward branch
    falls (omega0 - vg*k). Both are defined for either sign of k.
    """
    if branch == FORWARD:
        return params.omega0 + params.vg * k
    if branch == BACKWARD:
        return params.omega0 - params.vg * k
    raise ValueError(f"unknown branch {branch!r}")


def phonon_frequency(params: WaveguideParams, q: float) -> float:
    """Acoustic frequency va*|q| at wavenumber q. Even in q."""
    return params.va * abs(q)


def allowed_wavenumbers(params: WaveguideParams, n_max: int) -> np.ndarray:
    """Periodic-boundary wavenumber grid 2*pi*n/length for |n| <= n_max.

    Returns the 2*n_max + 1 values in increasing order. Mode spacing is
    2*pi/length.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    n = np.arange(-n_max, n_max + 1, dtype=float)
    return 2.0 * np.pi * n / params.length


def phase_match(params, k_pump: float, geometry: str = BACKWARD) -> BrillouinTriple:
    """Solve momentum and energy conservation for the Stokes process.

    A pump photon at k_pump scatters into a signal photon at
    k_pump - q and a phonon at q. In the backward geometry the signal
    sits on the counterpropagating branch and the phonon bridges the
    branch mismatch:

        q = 2 * k_pump * vg / (vg + va)

    which satisfies both conservation laws exactly for the linearized
    branches. In the forward geometry both photons share a branch and
    the only intra-branch solution is the degenerate one, q = 0,
    Omega = 0.

    The pump is placed on the branch matching its propagation direction
    (forward branch for k_pump >= 0, backward otherwise); the returned
    triple then has Omega_phonon >= 0 and omega_signal <= omega_pump.

    Raises
    ------
    NoSolution
        If vg == va, which makes the conservation system singular.
    """
    vg, va = params.vg, params.va
    if vg == va:
        raise NoSolution("vg == va: phonon and photon branches are parallel")
    pump_branch = FORWARD if k_pump >= 0 else BACKWARD
    if geometry == FORWARD:
        q = 0.0
        k_signal = k_pump
        signal_branch = pump_branch
    elif geometry == BACKWARD:
        q = 2.0 * k_pump * vg / (vg + va)
        k_signal = k_pump - q
        signal_branch = BACKWARD if pump_branch == FORWARD else FORWARD
    else:
        raise ValueError(f"unknown geometry {geometry!r}")
    return BrillouinTriple(
        k_pump=k_pump,
        k_signal=k_signal,
        q_phonon=q,
        omega_pump=photon_frequency(params, k_pump, pump_branch),
        omega_signal=photon_frequency(params, k_signal, signal_branch),
        Omega_phonon=phonon_frequency(params, q),
    )
