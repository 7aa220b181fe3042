"""Deterministic file emission: CSV field maps, fringe tables, sweeps.

All floats are written in scientific notation with 9 significant
digits, locale independent, so identical inputs yield byte-identical
files. CSV files carry a '#'-prefixed comment header echoing the
originating parameters.
"""

import json

import numpy as np

from .winding import (
    CoilWindingSpec,
    _coil_A_arrays,
    _curl_fd,
    _segment_arrays,
    build_winding,
)
from .ideal_field import AnnularCoilIdeal, annular_coil_A


def fmt(x):
    """Fixed float format: scientific, 9 significant digits."""
    return f"{float(x):.8e}"


def _coil_comment_lines(coil):
    if isinstance(coil, CoilWindingSpec):
        return [
            "# coil_type = winding",
            f"# R1_m = {fmt(coil.R1)}",
            f"# R2_m = {fmt(coil.R2)}",
            f"# L_m = {fmt(coil.L)}",
            f"# turn_density_per_m = {fmt(coil.turn_density)}",
            f"# layers = {coil.layers}",
            f"# helicity = {list(coil.helicity_sign_per_layer)}",
            f"# wire_diameter_m = {fmt(coil.wire_diameter)}",
            f"# I_A = {fmt(coil.I)}",
        ]
    return [
        "# coil_type = ideal",
        f"# R1_m = {fmt(coil.R1)}",
        f"# R2_m = {fmt(coil.R2)}",
        f"# N_turns = {coil.N}",
        f"# I_A = {fmt(coil.I)}",
    ]


def field_map_rows(coil, region, grid, include_B=True, segments_per_turn=8):
    """Evaluate A (and optionally B) on the grid, in fixed point order."""
    if isinstance(grid, int):
        grid = (grid, grid, grid)
    lo = np.asarray(region.lo, dtype=float)
    hi = np.asarray(region.hi, dtype=float)
    axes = [np.linspace(lo[i], hi[i], grid[i]) for i in range(3)]
    rows = []
    if isinstance(coil, AnnularCoilIdeal):
        A_ideal = annular_coil_A(coil)
        for x in axes[0]:
            for y in axes[1]:
                for z in axes[2]:
                    row = [x, y, z, 0.0, 0.0, A_ideal]
                    if include_B:
                        row += [0.0, 0.0, 0.0]
                    rows.append(row)
        return rows
    segments = build_winding(coil, segments_per_turn)
    starts, ends, currents = _segment_arrays(segments)
    h = 1e-4 * coil.R1
    for x in axes[0]:
        for y in axes[1]:
            for z in axes[2]:
                p = np.array([x, y, z])
                A = _coil_A_arrays(starts, ends, currents, p)
                row = [x, y, z, *A]
                if include_B:
                    B = _curl_fd(
                        lambda q: _coil_A_arrays(starts, ends, currents, q), p, h
                    )
                    row += list(B)
                rows.append(row)
    return rows


def write_field_map(path, coil, rows, include_B=True):
    """Write a field-map CSV with the standard column layout."""
    header = "x,y,z,Ax,Ay,Az"
    if include_B:
        header += ",Bx,By,Bz"
    lines = _coil_comment_lines(coil) + [header]
    for row in rows:
        lines.append(",".join(fmt(v) for v in row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_fringe_csv(path, pattern, scenario_comment=()):
    """CSV of fringe orders: k, theta_k_rad, y_k_m, ring_radius_m."""
    lines = list(scenario_comment) + ["k,theta_k_rad,y_k_m,ring_radius_m"]
    for o in pattern.orders:
        lines.append(
            f"{o.k},{fmt(o.theta_k)},{fmt(o.y_k)},{fmt(o.ring_radius)}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def fringe_summary(pattern):
    return {
        "lambda_m": fmt(pattern.wavelength),
        "P_eff": fmt(pattern.P_eff),
        "interfringe_m": fmt(pattern.interfringe_small_angle),
        "interfringe_exact_m": fmt(pattern.interfringe_i),
        "small_angle_valid": pattern.small_angle_valid,
    }


def write_json(path, data):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
