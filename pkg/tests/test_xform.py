import math
import random
from fractions import Fraction

import pytest

from leelat import analyzer, hadamard, intlat, metric, xform
from leelat.errors import DimensionError, IntegralityError
from leelat.intlat import Lattice
from leelat.xform import RadicalVector, TransformSpec

EVEN_SUM_Z4 = Lattice(
    [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 2]]
)


class TestRadicalVector:
    def test_to_int_vector(self):
        assert RadicalVector((4, 0, -2, 6), 4).to_int_vector() == (2, 0, -1, 3)

    def test_non_square_radicand(self):
        with pytest.raises(IntegralityError):
            RadicalVector((2,), 2).to_int_vector()

    def test_indivisible_component(self):
        with pytest.raises(IntegralityError):
            RadicalVector((3,), 4).to_int_vector()

    def test_max_abs_le_exact_boundary(self):
        v = RadicalVector((3, -3), 4)  # value 3/2 per axis
        assert v.max_abs_le(Fraction(3, 2))
        assert not v.max_abs_le(Fraction(149, 100))
        assert v.max_abs_le(2)


class TestContinuousTransform:
    def test_zero(self):
        h = hadamard.sylvester(2)
        assert xform.t_apply(h, (0, 0, 0, 0)).to_int_vector() == (0, 0, 0, 0)

    def test_all_ones(self):
        h = hadamard.sylvester(2)
        assert xform.t_apply(h, (1, 1, 1, 1)).to_int_vector() == (2, 0, 0, 0)

    def test_unit_times_two(self):
        h = hadamard.sylvester(2)
        assert xform.t_apply(h, (2, 0, 0, 0)).to_int_vector() == (1, 1, 1, 1)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            xform.t_apply(hadamard.sylvester(2), (1, 2, 3))


class TestContinuousInvolution:
    def test_sylvester_16_random(self):
        rng = random.Random(51)
        h = hadamard.sylvester(4)
        samples = [tuple(rng.randint(-50, 50) for _ in range(16)) for _ in range(100)]
        assert xform.check_involution_continuous(h, samples) == 100

    def test_asymmetric_rejected_with_diagnostic(self):
        h = hadamard.paley(11)
        with pytest.raises(ValueError, match="not symmetric"):
            xform.check_involution_continuous(h, [(0,) * 12])


class TestContinuousBox:
    def test_radius_zero(self):
        rep = xform.continuous_box(hadamard.sylvester(2), 0)
        assert rep.max_abs == 0 and rep.points_checked == 1

    def test_order_4_full_spheres(self):
        h = hadamard.sylvester(2)
        for radius in range(1, 5):
            rep = xform.continuous_box(h, radius)
            assert rep.points_checked == metric.lee_sphere_size(4, radius)
            assert rep.max_abs <= radius
            assert rep.witness_attains

    def test_witness_is_extreme_axis_point(self):
        h = hadamard.sylvester(2)
        x = (3, 0, 0, 0)
        assert max(abs(v) for v in h.matrix.mat_vec(x)) == 3


class TestKernelCode:
    def test_d2_is_even_sum_lattice(self):
        code = xform.hadamard_kernel_code(hadamard.sylvester(2))
        assert intlat.same_lattice(code, EVEN_SUM_Z4)
        assert code.volume == 2
        assert analyzer.min_distance(code) == 2

    def test_d4_volume_via_snf_count(self):
        h = hadamard.sylvester(4)
        code = xform.hadamard_kernel_code(h)
        divisors = intlat.snf(h.matrix)
        count = math.prod(math.gcd(s, 4) for s in divisors)
        assert code.volume == 4**16 // count == 64

    def test_d4_min_distance(self):
        code = xform.hadamard_kernel_code(hadamard.sylvester(4))
        assert analyzer.min_distance(code) == 4

    def test_closed_under_transform(self):
        for k in (2, 4):
            h = hadamard.sylvester(k)
            code = xform.hadamard_kernel_code(h)
            for row in code.int_matrix.entries:
                image = xform.t_apply(h, row).to_int_vector()
                assert intlat.contains(code, image)

    def test_transform_maps_code_onto_itself(self):
        # the images of a generating set generate the whole code again
        for k in (2, 4):
            h = hadamard.sylvester(k)
            code = xform.hadamard_kernel_code(h)
            images = [
                list(xform.t_apply(h, row).to_int_vector())
                for row in code.int_matrix.entries
            ]
            assert intlat.same_lattice(Lattice(images), code)

    def test_non_square_order_rejected(self):
        with pytest.raises(DimensionError):
            xform.hadamard_kernel_code(hadamard.sylvester(3))


class TestDiscreteTransform:
    def test_zero(self):
        spec = TransformSpec.build(2)
        assert xform.discrete_transform(spec, (0, 0, 0, 0)) == (0, 0, 0, 0)

    def test_worked_example(self):
        spec = TransformSpec.build(2)
        assert xform.discrete_transform(spec, (1, 0, 0, 0)) == (0, 1, 1, 1)
        assert xform.discrete_transform(spec, (0, 1, 1, 1)) == (1, 0, 0, 0)

    def test_codeword_branch_uses_zero_leader(self):
        spec = TransformSpec.build(2)
        p = (2, 0, 0, 0)  # in the code, so the leader is 0 and T_d2 = T
        assert xform.discrete_transform(spec, p) == xform.t_apply(spec.h, p).to_int_vector()

    def test_leader_decomposition_unique(self):
        spec = TransformSpec.build(2)
        rng = random.Random(52)
        leaders = list(spec.table.leaders.values())
        for _ in range(50):
            p = tuple(rng.randint(-30, 30) for _ in range(4))
            fits = [
                s
                for s in leaders
                if intlat.contains(spec.code, tuple(a - b for a, b in zip(p, s)))
            ]
            assert len(fits) == 1

    def test_involution_d2(self):
        spec = TransformSpec.build(2)
        rng = random.Random(53)
        pts = [tuple(rng.randint(-100, 100) for _ in range(4)) for _ in range(1000)]
        assert xform.check_involution_discrete(spec, pts) == 1000

    def test_involution_d4(self):
        spec = TransformSpec.build(4)
        rng = random.Random(54)
        pts = [tuple(rng.randint(-50, 50) for _ in range(16)) for _ in range(200)]
        assert xform.check_involution_discrete(spec, pts) == 200

    def test_box_round_trip_no_collisions(self):
        # volume preservation, discretely: injective on a whole box
        spec = TransformSpec.build(2)
        from itertools import product

        box = list(product(range(-2, 3), repeat=4))
        images = {xform.discrete_transform(spec, p) for p in box}
        assert len(images) == len(box)


class TestDiscreteBox:
    def test_radius_zero_single_point(self):
        spec = TransformSpec.build(2)
        rep = xform.discrete_box(spec, 0)
        assert rep.extents == (1, 1, 1, 1)

    def test_bounds_d2(self):
        spec = TransformSpec.build(2)
        assert spec.rho == 1
        for radius, bound in [(1, 5), (4, 9)]:
            rep = xform.discrete_box(spec, radius)
            assert rep.bound == bound
            assert all(e <= bound for e in rep.extents)
            assert rep.points_checked == metric.lee_sphere_size(4, radius)

    def test_bound_formula(self):
        spec = TransformSpec.build(2)
        for radius in range(7):
            rep = xform.discrete_box(spec, radius)
            assert rep.bound == 2 * math.ceil((radius + rep.rho) / 2) + 2 * rep.rho + 1

    def test_off_center(self):
        spec = TransformSpec.build(2)
        rep = xform.discrete_box(spec, 2, center=(5, -7, 1, 0))
        assert all(e <= rep.bound for e in rep.extents)


class TestTransformSpec:
    def test_build_validates_d(self):
        with pytest.raises(ValueError):
            TransformSpec.build(3)
        with pytest.raises(ValueError):
            TransformSpec.build(1)

    def test_from_hadamard(self):
        spec = TransformSpec.from_hadamard(hadamard.sylvester(2))
        assert spec.d == 2 and spec.code.volume == 2

    def test_leader_table_size_matches_volume(self):
        for d in (2, 4):
            spec = TransformSpec.build(d)
            assert spec.table.size == spec.code.volume
