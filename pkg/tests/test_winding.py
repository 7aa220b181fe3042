import math

import numpy as np
import pytest

from coilfringe.constants import constants
from coilfringe.errors import ConstructionError, DomainError, SingularityError
from coilfringe.ideal_field import annular_coil_A
from coilfringe.winding import (
    Box,
    CoilWindingSpec,
    SegmentCurrent,
    _curl_fd,
    build_winding,
    coil_A,
    coil_B,
    homogeneity_report,
    segment_A,
)


def paper_coil(L=6.0, layers=2, helicity=(1, -1), I=1.0):
    return CoilWindingSpec(
        R1=0.1,
        R2=0.12,
        L=L,
        turn_density=2000.0,
        layers=layers,
        helicity_sign_per_layer=tuple(helicity),
        wire_diameter=1e-3,
        I=I,
    )


class TestBuildWinding:
    def test_turn_count_matches_inner_circumference_density(self):
        assert paper_coil().turn_count == 1257

    def test_segment_count(self):
        spec = paper_coil()
        segs = build_winding(spec, segments_per_turn=4)
        # each turn contributes segments_per_turn chained segments and
        # every layer closes on itself with no extra closure segment
        assert len(segs) == spec.turn_count * 4
        segs8 = build_winding(spec, segments_per_turn=8)
        assert len(segs8) == spec.turn_count * 8

    def test_net_axial_ampere_turns_through_midplane(self):
        # signed crossings of z=0 inside the bore annulus: every inner
        # axial run carries +I upward once
        spec = paper_coil()
        segs = build_winding(spec, segments_per_turn=4)
        mid = (spec.R1 + spec.R2) / 2
        net = 0.0
        for s in segs:
            za, zb = s.start[2], s.end[2]
            if za < 0 <= zb or zb < 0 <= za:
                r = math.hypot(s.start[0], s.start[1])
                if r < mid:
                    net += s.I if zb > za else -s.I
        assert net == pytest.approx(spec.turn_count * spec.I)

    def test_helicity_mirrored_axial_geometry(self):
        a = build_winding(paper_coil(helicity=(1, -1)), 4)
        b = build_winding(paper_coil(helicity=(1, 1)), 4)
        # same radii/z structure, only the azimuthal advance differs
        za = sorted(round(s.start[2], 12) for s in a)
        zb = sorted(round(s.start[2], 12) for s in b)
        assert za == zb
        ra = sorted(round(math.hypot(s.start[0], s.start[1]), 9) for s in a)
        rb = sorted(round(math.hypot(s.start[0], s.start[1]), 9) for s in b)
        assert ra == rb

    def test_overlapping_turns_rejected(self):
        spec = CoilWindingSpec(
            R1=0.1,
            R2=0.12,
            L=1.0,
            turn_density=2000.0,
            layers=1,
            helicity_sign_per_layer=(1,),
            wire_diameter=1e-3,
            I=1.0,
        )
        with pytest.raises(ConstructionError):
            build_winding(spec, 4)

    def test_minimum_segments_per_turn(self):
        with pytest.raises(DomainError):
            build_winding(paper_coil(), 3)


class TestSegmentA:
    def test_symmetric_segment_is_parallel(self):
        seg = SegmentCurrent(start=(0, 0, -1), end=(0, 0, 1), I=2.0)
        A = segment_A(seg, (0.3, 0.0, 0.0))
        assert A[0] == 0.0 and A[1] == 0.0
        assert A[2] > 0

    def test_zero_current(self):
        seg = SegmentCurrent(start=(0, 0, -1), end=(0, 0, 1), I=0.0)
        assert np.all(segment_A(seg, (0.5, 0.2, 0.1)) == 0.0)

    def test_split_additivity(self):
        p = np.array([0.2, -0.1, 0.35])
        full = SegmentCurrent(start=(0, 0, -1), end=(0, 0, 1), I=1.5)
        half1 = SegmentCurrent(start=(0, 0, -1), end=(0, 0, 0.1), I=1.5)
        half2 = SegmentCurrent(start=(0, 0, 0.1), end=(0, 0, 1), I=1.5)
        combined = segment_A(half1, p) + segment_A(half2, p)
        assert np.allclose(segment_A(full, p), combined, rtol=1e-13, atol=1e-25)

    def test_long_segment_approaches_infinite_wire_difference(self):
        # A(r1) - A(r2) -> -mu0 I/(2pi) ln(r1/r2) as the segment grows
        seg = SegmentCurrent(start=(0, 0, -5000), end=(0, 0, 5000), I=1.0)
        d = segment_A(seg, (0.5, 0, 0))[2] - segment_A(seg, (1.0, 0, 0))[2]
        expected = -constants().mu0 * 1.0 / (2 * math.pi) * math.log(0.5)
        assert d == pytest.approx(expected, rel=1e-6)

    def test_guard_rejection(self):
        seg = SegmentCurrent(start=(0, 0, -1), end=(0, 0, 1), I=1.0)
        with pytest.raises(SingularityError):
            segment_A(seg, (0.0, 0.0, 0.5))


class TestCoilField:
    def test_center_matches_ideal_at_L_over_R2_50(self):
        spec = paper_coil(L=50 * 0.12)
        segs = build_winding(spec, 8)
        A = coil_A(segs, (0.0, 0.0, 0.0))
        ideal = annular_coil_A(spec.ideal_equivalent())
        assert A[2] == pytest.approx(ideal, rel=0.02)
        # transverse leakage stays small for paired opposite helicity
        assert abs(A[0]) <= 1e-3 * abs(A[2])
        assert abs(A[1]) <= 1e-3 * abs(A[2])

    def test_current_negation(self):
        spec_p = paper_coil(L=2.0)
        spec_m = paper_coil(L=2.0, I=-1.0)
        p = (0.01, 0.02, 0.05)
        Ap = coil_A(build_winding(spec_p, 4), p)
        Am = coil_A(build_winding(spec_m, 4), p)
        assert np.allclose(Ap, -Am, rtol=1e-14, atol=0)

    def test_marginal_fragments_cancel_transverse_at_midplane(self):
        # only the two end fragments, symmetric currents
        spec = paper_coil(L=2.0)
        segs = build_winding(spec, 8)
        ends = [
            s
            for s in segs
            if abs(abs(s.start[2]) - spec.L / 2) < 1e-12
            and abs(abs(s.end[2]) - spec.L / 2) < 1e-12
        ]
        A = coil_A(ends, (0.0, 0.0, 0.0))
        assert abs(A[0]) <= 1e-10 * max(abs(A[2]), 1e-12) + 1e-20
        assert abs(A[1]) <= 1e-10 * max(abs(A[2]), 1e-12) + 1e-20

    def test_segment_split_changes_little(self):
        spec = paper_coil(L=2.0)
        a4 = coil_A(build_winding(spec, 4), (0.0, 0.0, 0.0))
        a8 = coil_A(build_winding(spec, 8), (0.0, 0.0, 0.0))
        assert a8[2] == pytest.approx(a4[2], rel=1e-3)


class TestCoilB:
    def test_curl_of_constant_field_is_zero(self):
        B = _curl_fd(lambda p: np.array([1.0, 2.0, 3.0]), np.zeros(3), 1e-4)
        assert np.all(np.abs(B) < 1e-10)

    def test_curl_of_linear_field(self):
        # A = (-y, x, 0)/2 has curl (0, 0, 1)
        B = _curl_fd(
            lambda p: np.array([-p[1] / 2, p[0] / 2, 0.0]), np.array([0.3, 0.1, -0.2]), 1e-5
        )
        assert np.allclose(B, [0, 0, 1], atol=1e-9)

    def test_long_wire_amperes_law(self):
        seg = [SegmentCurrent(start=(0, 0, -100), end=(0, 0, 100), I=2.0)]
        r = 1.0
        B = coil_B(seg, (r, 0, 0), h=1e-4)
        expected = constants().mu0 * 2.0 / (2 * math.pi * r)
        assert np.linalg.norm(B) == pytest.approx(expected, rel=0.01)
        # field circulates: at +x the field of +z current points +y
        assert B[1] > 0

    def test_bore_field_small_vs_winding_scale(self):
        spec = paper_coil(L=12.0)
        segs = build_winding(spec, 8)
        B = coil_B(segs, (0.0, 0.0, 0.0), h=1e-4 * spec.R1)
        assert np.linalg.norm(B) <= 1e-3 * constants().mu0 * spec.turn_density * abs(spec.I)


class TestHomogeneityReport:
    def test_converges_to_ideal_at_long_coil(self):
        spec = paper_coil(L=100 * 0.12)
        region = Box(lo=(-0.025, -0.025, -0.025), hi=(0.025, 0.025, 0.025))
        rep = homogeneity_report(spec, region, 2)
        assert rep.rel_error_vs_ideal <= 0.01

    def test_short_coil_less_uniform(self):
        region = Box(lo=(-0.025, -0.025, -0.025), hi=(0.025, 0.025, 0.025))
        rep10 = homogeneity_report(paper_coil(L=10 * 0.12), region, 2)
        rep100 = homogeneity_report(paper_coil(L=100 * 0.12), region, 2)
        assert rep10.max_rel_deviation > rep100.max_rel_deviation

    def test_symmetric_region_mean_transverse_near_zero(self):
        spec = paper_coil(L=6.0)
        region = Box(lo=(-0.02, -0.02, -0.02), hi=(0.02, 0.02, 0.02))
        rep = homogeneity_report(spec, region, 2)
        mean = np.array(rep.mean_A)
        assert abs(mean[0]) < 1e-6 * abs(mean[2])
        assert abs(mean[1]) < 1e-6 * abs(mean[2])

    def test_region_reaching_winding_rejected(self):
        spec = paper_coil(L=6.0)
        region = Box(lo=(-0.1, -0.01, -0.01), hi=(0.1, 0.01, 0.01))
        with pytest.raises(DomainError):
            homogeneity_report(spec, region, 2)

    def test_grid_minimum(self):
        spec = paper_coil(L=6.0)
        region = Box(lo=(-0.01, -0.01, -0.01), hi=(0.01, 0.01, 0.01))
        with pytest.raises(DomainError):
            homogeneity_report(spec, region, 1)
