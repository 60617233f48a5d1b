"""Geometric entanglement measures built from a concurrence spectrum.

The base edge ``a`` is the geometric mean of the one-versus-rest
concurrences and the height ``h`` the geometric mean of every remaining
canonical cut (fixed to 1 for three parties, which have no multi-party
cuts). The measure is the volume of the regular N-gonal pyramid with those
dimensions,

    V = (N a^2 / 12) cot(pi/N) h,

which degenerates to exactly zero when any cut factorizes, is positive iff
the state is genuinely multipartite entangled, and for N = 4 coincides
with a^2 h / 3. Tripartite states additionally get the squared-concurrence
triangle measure, and the minimum cut concurrence (C_GME) is provided as a
comparator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bipartitions import Bipartition
from .concurrence import ConcurrenceSpectrum, full_spectrum
from .states import PureState

# A cut that factorizes exactly still evaluates to a concurrence of order
# sqrt(machine epsilon) ~ 1e-8 (the square root amplifies the ~1e-16 purity
# noise), never to zero. The cutoff must sit above that floor and stays 5+
# orders of magnitude below genuine concurrences of generic states.
DEFAULT_ZERO_TOL = 1e-7

CLASS_GME = "GME"
CLASS_BISEPARABLE = "biseparable"
CLASS_FULLY_SEPARABLE = "fully-separable"


@dataclass(frozen=True)
class PyramidGeometry:
    """Derived pyramid dimensions and volume for one state."""

    n: int
    base_edge: float
    height: float
    base_area: float
    volume: float


@dataclass(frozen=True)
class MeasureReport:
    """All measure values and the separability classification of one state."""

    state_id: str
    dims: tuple[int, ...]
    volume: float | None
    c_gme: float
    triangle: float | None
    classification: str
    concurrences: dict[Bipartition, float]
    zero_cuts: tuple[Bipartition, ...]
    zero_tol: float
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return len(self.dims)


def _geometric_mean(values: list[float], zero_tol: float) -> float:
    # Short-circuit before taking logarithms: a single (numerically) zero
    # factor annihilates the product, and log(0) is -inf.
    if any(v <= zero_tol for v in values):
        return 0.0
    return math.exp(math.fsum(math.log(v) for v in values) / len(values))


def base_edge(spectrum: ConcurrenceSpectrum, zero_tol: float = DEFAULT_ZERO_TOL) -> float:
    """Geometric mean of the N one-versus-rest concurrences."""
    return _geometric_mean(spectrum.singletons(), zero_tol)


def height(spectrum: ConcurrenceSpectrum, zero_tol: float = DEFAULT_ZERO_TOL) -> float:
    """Geometric mean of all multi-party-cut concurrences.

    The 2**(N-1) - N - 1 canonical cuts of size 2..floor(N/2) enter with
    equal weight. Three parties have no such cuts and get height 1 by
    definition; two parties are rejected.
    """
    if spectrum.n == 2:
        raise ValueError("a 2-party system has no multi-party cuts")
    if spectrum.n == 3:
        return 1.0
    return _geometric_mean(spectrum.multis(), zero_tol)


def base_area(n: int, edge: float) -> float:
    """Area of the regular n-gon with the given side length: (n e^2/4) cot(pi/n)."""
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if edge < 0:
        raise ValueError("edge length must be nonnegative")
    return n * edge * edge / (4.0 * math.tan(math.pi / n))


def volume(spectrum: ConcurrenceSpectrum, zero_tol: float = DEFAULT_ZERO_TOL) -> PyramidGeometry:
    """Pyramid dimensions and volume V = base_area * h / 3 for N >= 3 parties.

    For N = 4 this equals a^2 h / 3 (cot(pi/4) = 1); for N = 3 the height
    is fixed to 1 and the volume reduces to (sqrt(3)/12) a^2.
    """
    n = spectrum.n
    if n < 3:
        raise ValueError("the pyramid measure is defined for 3 or more parties")
    a = base_edge(spectrum, zero_tol)
    h = height(spectrum, zero_tol)
    area = base_area(n, a)
    return PyramidGeometry(n=n, base_edge=a, height=h, base_area=area, volume=area * h / 3.0)


def triangle_measure(spectrum: ConcurrenceSpectrum) -> float:
    """Tripartite triangle measure with the squared concurrences as edges.

    F = [ (16/3) Q prod_i (Q - C_i^2) ]^(1/4) with Q = (1/2) sum_i C_i^2.
    The triangle inequality of the squared concurrences holds analytically
    for pure states; each factor is clamped at 0 against rounding.
    """
    if spectrum.n != 3:
        raise ValueError("the triangle measure is defined for exactly 3 parties")
    c_sq = [c * c for c in spectrum.singletons()]
    q = 0.5 * math.fsum(c_sq)
    product = 1.0
    for cs in c_sq:
        product *= max(0.0, q - cs)
    return (16.0 / 3.0 * q * product) ** 0.25


def c_gme(spectrum: ConcurrenceSpectrum) -> float:
    """Minimum concurrence over all canonical bipartitions."""
    return min(spectrum.entries.values())


def classify(
    spectrum: ConcurrenceSpectrum, zero_tol: float = DEFAULT_ZERO_TOL
) -> tuple[str, tuple[Bipartition, ...]]:
    """Separability class plus every cut whose concurrence is (numerically) zero.

    A vanishing concurrence across a cut of a pure state is equivalent to
    factorization across that cut, so the zero cuts are the candidate
    factorizations. All cuts positive means GME; all singleton cuts zero
    means fully separable; anything in between is biseparable.
    """
    zero_cuts = tuple(cut for cut, c in spectrum.entries.items() if c <= zero_tol)
    if not zero_cuts:
        return CLASS_GME, zero_cuts
    if all(c <= zero_tol for c in spectrum.singletons()):
        return CLASS_FULLY_SEPARABLE, zero_cuts
    return CLASS_BISEPARABLE, zero_cuts


def evaluate(
    state: PureState, state_id: str = "state", zero_tol: float = DEFAULT_ZERO_TOL
) -> MeasureReport:
    """Full measure report for one state.

    The pyramid volume needs at least 3 parties and the triangle measure
    exactly 3; fields that do not apply are None.
    """
    spectrum = full_spectrum(state)
    classification, zero_cuts = classify(spectrum, zero_tol)
    notes: list[str] = []
    vol = volume(spectrum, zero_tol).volume if spectrum.n >= 3 else None
    tri = None
    if spectrum.n == 3:
        tri = triangle_measure(spectrum)
        if any(d > 2 for d in state.dims):
            notes.append(
                "triangle measure applied beyond qubit subsystems; the formula "
                "was defined for three-qubit states"
            )
    return MeasureReport(
        state_id=state_id,
        dims=state.dims,
        volume=vol,
        c_gme=c_gme(spectrum),
        triangle=tri,
        classification=classification,
        concurrences=dict(spectrum.entries),
        zero_cuts=zero_cuts,
        zero_tol=zero_tol,
        notes=tuple(notes),
    )
