"""Finite annular coil as a polyline of straight current segments.

A constructible coil is modeled as closed wire loops: for each turn an
axial run near R1, a radial fragment out to R2 at one end, a return run
near R2, and a radial fragment back at the other end. Helicity is the
azimuthal advance of one turn spacing distributed along the turn path;
layers may wind with opposite azimuthal sense so their net azimuthal
advance cancels.

Field evaluation uses the closed-form potential of a finite straight
segment,

    A = mu0*I/(4pi) * l_hat * ln((d1 + d2 + Lseg) / (d1 + d2 - Lseg)),

summed over all segments; B is obtained as the central-difference curl
of the summed A.
"""

from dataclasses import dataclass
import math

import numpy as np

from .constants import constants
from .errors import ConstructionError, DomainError, SingularityError
from .ideal_field import AnnularCoilIdeal, annular_coil_A

# Sample points closer to a wire than this are treated as singular.
WIRE_GUARD = 1e-9


@dataclass(frozen=True)
class CoilWindingSpec:
    """Geometry and winding description of a finite annular coil.

    turn_density is turns per meter of inner circumference counted over
    all layers, so the derived total turn count is
    N = round(2*pi*R1*turn_density), distributed across the layers.
    """

    R1: float
    R2: float
    L: float
    turn_density: float
    layers: int
    helicity_sign_per_layer: tuple
    wire_diameter: float
    I: float

    def __post_init__(self):
        if not 0 < self.R1 < self.R2:
            raise DomainError("winding requires 0 < R1 < R2")
        if self.L <= 0:
            raise DomainError("coil length L must be positive")
        if self.turn_density <= 0:
            raise DomainError("turn density must be positive")
        if self.wire_diameter <= 0:
            raise DomainError("wire diameter must be positive")
        if self.layers < 1:
            raise DomainError("layer count must be >= 1")
        if len(self.helicity_sign_per_layer) != self.layers:
            raise DomainError("helicity_sign_per_layer must have one entry per layer")
        if any(s not in (-1, +1) for s in self.helicity_sign_per_layer):
            raise DomainError("helicity signs must be +1 or -1")

    @property
    def turn_count(self):
        """Total number of turns over all layers."""
        return round(2 * math.pi * self.R1 * self.turn_density)

    def ideal_equivalent(self):
        """Ideal annular coil with the same radii and ampere-turns."""
        return AnnularCoilIdeal(R1=self.R1, R2=self.R2, N=self.turn_count, I=self.I)


@dataclass(frozen=True)
class SegmentCurrent:
    """Straight current segment from start to end carrying current I."""

    start: tuple
    end: tuple
    I: float

    def __post_init__(self):
        a = np.asarray(self.start, dtype=float)
        b = np.asarray(self.end, dtype=float)
        if not np.all(np.isfinite(a)) or not np.all(np.isfinite(b)):
            raise DomainError("segment endpoints must be finite")
        if np.array_equal(a, b):
            raise DomainError("segment must have positive length")


@dataclass(frozen=True)
class Box:
    """Axis-aligned box given by its min and max corners (meters)."""

    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        if lo.shape != (3,) or hi.shape != (3,):
            raise DomainError("box corners must be 3-vectors")
        if not np.all(lo < hi):
            raise DomainError("box must have positive extent on every axis")


@dataclass(frozen=True)
class HomogeneityReport:
    """Uniformity of the bore field sampled over a box."""

    region: Box
    mean_A: tuple
    max_rel_deviation: float
    max_B_magnitude: float
    ideal_A: float
    rel_error_vs_ideal: float


def build_winding(spec, segments_per_turn=8):
    """Construct the coil polyline as a list of SegmentCurrent.

    Each turn contributes segments_per_turn segments (the four legs,
    subdivided evenly). Turns of one layer chain head to tail: layer
    with helicity sign s places turn j at azimuth s*2pi*j/M plus a
    per-layer interleaving offset, and advances by one turn spacing over
    the turn path, so each layer closes on itself with net azimuthal
    advance s*2pi.
    """
    if segments_per_turn < 4:
        raise DomainError("segments_per_turn must be >= 4")
    per_layer_density = spec.turn_density / spec.layers
    if spec.wire_diameter * per_layer_density > 1.0 + 1e-12:
        raise ConstructionError(
            "turns overlap: wire_diameter * per-layer turn density = "
            f"{spec.wire_diameter * per_layer_density:.3f} > 1"
        )
    N_total = spec.turn_count
    base, rem = divmod(N_total, spec.layers)
    sub = max(1, segments_per_turn // 4)
    R1, R2, L = spec.R1, spec.R2, spec.L
    # (r_start, z_start, r_end, z_end, length) for the four legs of a turn
    legs = (
        (R1, -L / 2, R1, +L / 2, L),
        (R1, +L / 2, R2, +L / 2, R2 - R1),
        (R2, +L / 2, R2, -L / 2, L),
        (R2, -L / 2, R1, -L / 2, R2 - R1),
    )
    perimeter = 2 * L + 2 * (R2 - R1)

    segments = []
    for layer in range(spec.layers):
        M = base + (1 if layer < rem else 0)
        s = spec.helicity_sign_per_layer[layer]
        offset = 2 * math.pi * layer / (spec.layers * max(M, 1))
        pts = []
        for j in range(M):
            phi0 = s * 2 * math.pi * j / M + offset
            walked = 0.0
            for (ra, za, rb, zb, leg_len) in legs:
                for k in range(sub):
                    f = k / sub
                    r = ra + (rb - ra) * f
                    z = za + (zb - za) * f
                    t = (walked + leg_len * f) / perimeter
                    phi = phi0 + s * 2 * math.pi / M * t
                    pts.append((r * math.cos(phi), r * math.sin(phi), z))
                walked += leg_len
        pts.append(pts[0])  # close the layer circuit
        for a, b in zip(pts[:-1], pts[1:]):
            segments.append(SegmentCurrent(start=a, end=b, I=spec.I))
    return segments


def _segment_arrays(segments):
    starts = np.array([s.start for s in segments], dtype=float)
    ends = np.array([s.end for s in segments], dtype=float)
    currents = np.array([s.I for s in segments], dtype=float)
    return starts, ends, currents


def _point_segment_distance(starts, ends, p):
    d = ends - starts
    lengths_sq = np.einsum("ij,ij->i", d, d)
    t = np.clip(np.einsum("ij,ij->i", p - starts, d) / lengths_sq, 0.0, 1.0)
    closest = starts + t[:, None] * d
    return np.linalg.norm(closest - p, axis=1)


def segment_A(seg, p, guard=WIRE_GUARD):
    """Vector potential of one finite straight segment at point p."""
    starts, ends, currents = _segment_arrays([seg])
    return _coil_A_arrays(starts, ends, currents, np.asarray(p, dtype=float), guard)


def coil_A(segments, p, guard=WIRE_GUARD):
    """Vector potential at p: sum of segment_A over all segments."""
    starts, ends, currents = _segment_arrays(segments)
    return _coil_A_arrays(starts, ends, currents, np.asarray(p, dtype=float), guard)


def _coil_A_arrays(starts, ends, currents, p, guard=WIRE_GUARD):
    dist = _point_segment_distance(starts, ends, p)
    if np.any(dist < guard):
        idx = int(np.argmin(dist))
        raise SingularityError(
            f"point {p.tolist()} within wire guard of segment {idx} "
            f"(distance {dist[idx]:.3e} m)"
        )
    d1 = np.linalg.norm(starts - p, axis=1)
    d2 = np.linalg.norm(ends - p, axis=1)
    seg_vec = ends - starts
    seg_len = np.linalg.norm(seg_vec, axis=1)
    mu0 = constants().mu0
    mag = mu0 * currents / (4 * math.pi) * np.log(
        (d1 + d2 + seg_len) / (d1 + d2 - seg_len)
    )
    return (seg_vec / seg_len[:, None] * mag[:, None]).sum(axis=0)


def _curl_fd(field, p, h):
    """Central-difference curl of a 3-vector field at p with step h."""
    p = np.asarray(p, dtype=float)
    eye = np.eye(3) * h
    grad = [(field(p + eye[i]) - field(p - eye[i])) / (2 * h) for i in range(3)]
    return np.array(
        [
            grad[1][2] - grad[2][1],
            grad[2][0] - grad[0][2],
            grad[0][1] - grad[1][0],
        ]
    )


def coil_B(segments, p, h=None, guard=WIRE_GUARD):
    """Magnetic field at p as the finite-difference curl of coil_A.

    Default step h = 1e-4 * (shortest distance scale of the segments is
    unknown here, so callers with a CoilWindingSpec should pass
    h = 1e-4 * R1); falls back to 1e-4 * |p-to-nearest-segment| scale.
    """
    starts, ends, currents = _segment_arrays(segments)
    p = np.asarray(p, dtype=float)
    if h is None:
        h = 1e-4 * max(float(np.min(_point_segment_distance(starts, ends, p))), guard)
    if h <= 0:
        raise DomainError("finite-difference step h must be positive")

    def field(q):
        return _coil_A_arrays(starts, ends, currents, q, guard)

    return _curl_fd(field, p, h)


def homogeneity_report(spec, region, grid, segments_per_turn=8, guard=WIRE_GUARD):
    """Sample coil_A on a grid inside the bore and report uniformity.

    grid is the per-axis point count (>= 2). The region must stay
    strictly inside the bore cylinder of radius R1.
    """
    if isinstance(grid, int):
        grid = (grid, grid, grid)
    if any(g < 2 for g in grid):
        raise DomainError("grid must have >= 2 points per axis")
    if spec.I == 0.0:
        raise DomainError("relative field deviations are undefined at zero current")
    lo = np.asarray(region.lo, dtype=float)
    hi = np.asarray(region.hi, dtype=float)
    max_transverse = max(
        math.hypot(x, y) for x in (lo[0], hi[0]) for y in (lo[1], hi[1])
    )
    if max_transverse >= spec.R1 - guard:
        raise DomainError(
            f"region transverse extent {max_transverse:.4g} m reaches the "
            f"winding at R1 = {spec.R1} m"
        )
    if abs(lo[2]) >= spec.L / 2 or abs(hi[2]) >= spec.L / 2:
        raise DomainError("region must lie inside the coil length")

    segments = build_winding(spec, segments_per_turn)
    starts, ends, currents = _segment_arrays(segments)
    axes = [np.linspace(lo[i], hi[i], grid[i]) for i in range(3)]
    h = 1e-4 * spec.R1

    samples = []
    max_B = 0.0
    for x in axes[0]:
        for y in axes[1]:
            for z in axes[2]:
                p = np.array([x, y, z])
                samples.append(_coil_A_arrays(starts, ends, currents, p, guard))
                B = _curl_fd(
                    lambda q: _coil_A_arrays(starts, ends, currents, q, guard), p, h
                )
                max_B = max(max_B, float(np.linalg.norm(B)))
    samples = np.array(samples)
    mean_A = samples.mean(axis=0)
    mean_mag = float(np.linalg.norm(mean_A))
    max_rel_dev = float(
        np.max(np.linalg.norm(samples - mean_A, axis=1)) / mean_mag
    )
    ideal = annular_coil_A(spec.ideal_equivalent())
    rel_err = abs(float(mean_A[2]) - ideal) / abs(ideal)
    return HomogeneityReport(
        region=region,
        mean_A=tuple(mean_A),
        max_rel_deviation=max_rel_dev,
        max_B_magnitude=max_B,
        ideal_A=ideal,
        rel_error_vs_ideal=rel_err,
    )
