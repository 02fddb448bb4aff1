"""Classical pump steady state and the effective parametric coupling.

The strongly driven pump mode is replaced by its classical input-output
steady amplitude. That amplitude multiplies the bare photon-phonon
coupling g into the effective pair coupling f between the signal photon
and the phonon. All rates and frequencies are ordinary frequencies in Hz;
the drive is specified by its photon flux in photons/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateLinewidth
from .waveguide import WaveguideParams


@dataclass(frozen=True)
class PumpDrive:
    """Coherent drive at carrier frequency omega_p with photon flux flux_in.

    The input field amplitude is sqrt(flux_in), so |amplitude_in|^2 is
    the injected photon flux in photons/s.
    """

    omega_p: float
    flux_in: float

    def __post_init__(self) -> None:
        if not self.omega_p > 0:
            raise ValueError("omega_p must be positive")
        if self.flux_in < 0:
            raise ValueError("flux_in must be nonnegative")

    @property
    def amplitude_in(self) -> float:
        return math.sqrt(self.flux_in)


@dataclass(frozen=True)
class PumpSteadyState:
    """Resolved steady state of the driven pump mode.

    detuning is the complex detuning of the pump mode, amplitude the
    classical intracavity amplitude, photon_number = |amplitude|^2, and
    coupling the pump-enhanced pair coupling f = g * amplitude (complex
    in general, real and positive on resonance).
    """

    detuning: complex
    amplitude: complex
    photon_number: float
    coupling: complex


def pump_detuning(omega_mode: float, omega_p: float, u: float, gamma: float) -> complex:
    """Complex detuning (omega_mode - omega_p) - i*(u + gamma/2).

    The imaginary part is minus the half linewidth of the mode.

    Raises
    ------
    DegenerateLinewidth
        If u + gamma/2 == 0; an undamped driven mode has no steady state.
    """
    half_linewidth = u + 0.5 * gamma
    if half_linewidth == 0.0:
        raise DegenerateLinewidth("u + gamma/2 == 0: driven mode never settles")
    return (omega_mode - omega_p) - 1j * half_linewidth


def pump_steady_amplitude(drive: PumpDrive, detuning: complex, u: float) -> complex:
    """Steady intracavity amplitude sqrt(u) * amplitude_in / (i * detuning).

    On resonance (real part of detuning zero) this is real and positive.
    The steady photon number |amplitude|^2 equals u * flux_in / |detuning|^2.
    """
    if detuning.imag == 0.0:
        raise DegenerateLinewidth("detuning has no damping part")
    return math.sqrt(u) * drive.amplitude_in / (1j * detuning)


def effective_coupling(g: float, drive: PumpDrive, detuning: complex, u: float) -> complex:
    """Pump-enhanced pair coupling f = g * sqrt(u) * amplitude_in / (i * detuning)."""
    return g * pump_steady_amplitude(drive, detuning, u)


def pump_steady_state(params: WaveguideParams, drive: PumpDrive,
                      omega_mode: float) -> PumpSteadyState:
    """Resolve the full steady state of the pump mode at omega_mode."""
    detuning = pump_detuning(omega_mode, drive.omega_p, params.u, params.gamma)
    amplitude = pump_steady_amplitude(drive, detuning, params.u)
    return PumpSteadyState(
        detuning=detuning,
        amplitude=amplitude,
        photon_number=abs(amplitude) ** 2,
        coupling=params.g * amplitude,
    )
