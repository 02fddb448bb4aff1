"""Closed-form statistics of the two-mode squeezed vacuum.

Quadratures are X = (o + o^dag)/sqrt(2), Y = -i (o - o^dag)/sqrt(2), so
every vacuum quadrature variance is 1/2 and squeezing parameters are
S = (Delta X)^2 - 1/2 (negative below vacuum). Besides the bare photon
mode a and phonon mode b, the table covers the mixed modes
c = (a - b)/sqrt(2) and d = (a + b)/sqrt(2), which carry the actual
squeezing of the pair state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.constants import h as PLANCK_H
from scipy.constants import k as BOLTZMANN_K

QUAD_KEYS = ("X_a", "Y_a", "X_b", "Y_b", "X_c", "Y_c", "X_d", "Y_d")
MODE_KEYS = ("a", "b", "c", "d")
CROSS_KEYS = ("n_a", "n_b", "n_c", "n_d", "ab", "adag_b", "a2", "b2", "c2", "d2")


@dataclass(frozen=True)
class MomentTable:
    """Moments of a two-mode state, keyed by quadrature and mode labels.

    first and second hold <X> and <X^2> for the eight quadratures in
    QUAD_KEYS; products holds the Heisenberg products dX*dY per mode in
    MODE_KEYS; squeezing holds S = var - 1/2 per quadrature; cross holds
    the number and pair moments in CROSS_KEYS. Tables may be partial;
    merged() unions two tables and table_deviation() compares shared
    entries. max_imag_discarded records the largest imaginary magnitude
    dropped when a numerical table was built (0 for analytic tables).
    """

    r: float | None = None
    first: dict[str, float] = field(default_factory=dict)
    second: dict[str, float] = field(default_factory=dict)
    products: dict[str, float] = field(default_factory=dict)
    squeezing: dict[str, float] = field(default_factory=dict)
    cross: dict[str, float] = field(default_factory=dict)
    max_imag_discarded: float = 0.0

    def merged(self, other: "MomentTable") -> "MomentTable":
        """Union of two tables for the same r; shared keys must agree."""
        if self.r is not None and other.r is not None and self.r != other.r:
            raise ValueError("cannot merge tables for different r")
        out: dict[str, dict[str, float]] = {}
        for name in ("first", "second", "products", "squeezing", "cross"):
            a = dict(getattr(self, name))
            b = getattr(other, name)
            for key, value in b.items():
                if key in a and a[key] != value:
                    raise ValueError(f"conflicting entry {name}[{key!r}]")
                a[key] = value
            out[name] = a
        return MomentTable(
            r=self.r if self.r is not None else other.r,
            max_imag_discarded=max(self.max_imag_discarded,
                                   other.max_imag_discarded),
            **out,
        )


@dataclass(frozen=True)
class ThermalEnv:
    """Thermal environment of the phonon mode: frequency Omega (Hz),
    temperature in K, and phonon linewidth Gamma (Hz)."""

    Omega: float
    temperature: float
    Gamma: float

    def __post_init__(self) -> None:
        if not self.Omega > 0:
            raise ValueError("Omega must be positive")
        if self.temperature < 0:
            raise ValueError("temperature must be nonnegative")
        if not self.Gamma > 0:
            raise ValueError("Gamma must be positive")

    @property
    def quality(self) -> float:
        """Quality factor Q = Omega / Gamma."""
        return self.Omega / self.Gamma


def pair_probability(r: float, n: int) -> float:
    """Probability of n photon-phonon pairs in the squeezed vacuum,
    P_n = tanh(r)^(2n) / cosh(r)^2. Geometric in n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = math.tanh(r)
    return t ** (2 * n) / math.cosh(r) ** 2


def pair_tail(r: float, n_min: int) -> float:
    """Probability of n_min or more pairs. The geometric sum collapses
    to exactly tanh(r)^(2*n_min)."""
    if n_min < 0:
        raise ValueError("n_min must be nonnegative")
    return math.tanh(r) ** (2 * n_min)


def independent_moments(r: float) -> MomentTable:
    """Moments of the bare modes a and b taken separately.

    Each mode alone looks thermal: <X^2> = <Y^2> = cosh(2r)/2, the
    Heisenberg product is 1/2 + sinh(r)^2 and both quadratures are
    antisqueezed by S = sinh(r)^2.
    """
    var = 0.5 * math.cosh(2.0 * r)
    s2 = math.sinh(r) ** 2
    keys = ("X_a", "Y_a", "X_b", "Y_b")
    return MomentTable(
        r=r,
        first={k: 0.0 for k in keys},
        second={k: var for k in keys},
        products={"a": var, "b": var},
        squeezing={k: s2 for k in keys},
    )


def mixed_moments(r: float) -> MomentTable:
    """Moments of the mixed modes c = (a-b)/sqrt(2), d = (a+b)/sqrt(2).

    These are the squeezed directions: <X_c^2> = <Y_d^2> = exp(-2r)/2
    and <Y_c^2> = <X_d^2> = exp(+2r)/2, so each mode saturates the
    Heisenberg bound dX*dY = 1/2.
    """
    lo = 0.5 * math.exp(-2.0 * r)
    hi = 0.5 * math.exp(2.0 * r)
    s_lo = 0.5 * math.expm1(-2.0 * r)
    s_hi = 0.5 * math.expm1(2.0 * r)
    return MomentTable(
        r=r,
        first={k: 0.0 for k in ("X_c", "Y_c", "X_d", "Y_d")},
        second={"X_c": lo, "Y_c": hi, "X_d": hi, "Y_d": lo},
        products={"c": math.sqrt(lo * hi), "d": math.sqrt(hi * lo)},
        squeezing={"X_c": s_lo, "Y_c": s_hi, "X_d": s_hi, "Y_d": s_lo},
    )


def correlation_moments(r: float) -> MomentTable:
    """Number and pair moments of the squeezed vacuum.

    All four mode populations equal sinh(r)^2; the only nonzero pair
    moments are <ab> = cosh(r) sinh(r) and the mixed-mode squeezes
    <c^2> = -<d^2> = -cosh(r) sinh(r).
    """
    s2 = math.sinh(r) ** 2
    cs = math.cosh(r) * math.sinh(r)
    return MomentTable(
        r=r,
        cross={
            "n_a": s2, "n_b": s2, "n_c": s2, "n_d": s2,
            "ab": cs, "adag_b": 0.0, "a2": 0.0, "b2": 0.0,
            "c2": -cs, "d2": cs,
        },
    )


def full_moment_table(r: float) -> MomentTable:
    """All analytic moments of the squeezed vacuum at parameter r."""
    return independent_moments(r).merged(mixed_moments(r)).merged(
        correlation_moments(r))


def table_deviation(left: MomentTable, right: MomentTable) -> float:
    """Largest absolute difference over the entries both tables define."""
    worst = 0.0
    for name in ("first", "second", "products", "squeezing", "cross"):
        a = getattr(left, name)
        b = getattr(right, name)
        for key in a.keys() & b.keys():
            worst = max(worst, abs(a[key] - b[key]))
    return worst


def bell_expansion(r: float, order: int) -> tuple[np.ndarray, float]:
    """Pair-basis expansion of the squeezed vacuum truncated at `order`.

    Returns (amplitudes, discarded_weight): amplitudes[n] is the
    coefficient tanh(r)^n / cosh(r) of the n-pair component for
    n = 0..order, and discarded_weight = tanh(r)^(2*(order+1)) is the
    probability left out, so sum(amplitudes**2) + discarded_weight == 1.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = np.arange(order + 1)
    amplitudes = np.tanh(r) ** n / math.cosh(r)
    return amplitudes, pair_tail(r, order + 1)


def thermal_occupation(env: ThermalEnv) -> float:
    """Bose occupation of the phonon mode, 1/(exp(h*Omega/(kB*T)) - 1).

    Omega is an ordinary frequency, so the quantum of energy is
    h*Omega. Returns 0 for T = 0.
    """
    if env.temperature == 0.0:
        return 0.0
    x = PLANCK_H * env.Omega / (BOLTZMANN_K * env.temperature)
    if x > 700.0:
        # expm1 would overflow; the occupation is exp(-x) to this accuracy
        return math.exp(-x)
    return 1.0 / math.expm1(x)
