import math

import numpy as np
import pytest

from harmconv import (ConvolutionSpec, DomainError, ParameterError,
                      conv_derivatives, conv_dilatation, conv_dilatation_f0,
                      conv_parts_f1, conv_value, hadamard, make_mapping,
                      series_derivative, series_div, series_eval,
                      taylor_of_mapping)

RNG = np.random.default_rng(31)


def disk(count, radius):
    r = radius * np.sqrt(RNG.uniform(size=count))
    return r * np.exp(2j * math.pi * RNG.uniform(size=count))


def oracle_series(a, right, N=256):
    """Hadamard-product series of the convolved parts and their data."""
    ha, ga = taylor_of_mapping(make_mapping("Fa", a=a), N)
    hr, gr = taylor_of_mapping(right, N)
    return hadamard(ha, hr), hadamard(ga, gr)


class TestF0ClosedForm:
    def test_zero(self):
        assert conv_dilatation_f0(0.7, 0) == 0

    def test_hand_value(self):
        assert conv_dilatation_f0(0.0, 0.5) == pytest.approx(-4 / 11)

    def test_bounded_by_one(self):
        z = disk(2000, 0.999)
        for a in (-0.9, -0.4, 0.0, 0.4, 0.9):
            assert np.max(np.abs(conv_dilatation_f0(a, z))) < 1


class TestPartsF1:
    def test_origin(self):
        assert conv_parts_f1(0.5, math.pi / 6, 0) == (0, 0)

    def test_rejects_theta_pi(self):
        with pytest.raises(ParameterError):
            conv_parts_f1(0.5, math.pi, 0.3)

    def test_rejects_bad_a(self):
        with pytest.raises(ParameterError):
            conv_parts_f1(1.0, math.pi / 6, 0.3)

    @pytest.mark.parametrize("a,theta", [
        (0.5, math.pi / 6), (0.0, 0.0), (-0.6, math.pi / 3),
        (0.8, -math.pi / 2), (0.3, 5 * math.pi / 6),
    ])
    def test_against_series(self, a, theta):
        H, G = oracle_series(a, make_mapping("F1", theta=theta))
        for z in (0.4, 0.35 + 0.4j, -0.5j, -0.62 + 0.1j):
            got_h, got_g = conv_parts_f1(a, theta, z)
            assert got_h == pytest.approx(series_eval(H, z), abs=1e-12)
            assert got_g == pytest.approx(series_eval(G, z), abs=1e-12)


class TestDerivatives:
    def test_origin_normalization(self):
        for right in (make_mapping("F0"),
                      make_mapping("F1", theta=0.3),
                      make_mapping("Fn", n=3, theta=math.pi)):
            Hp, Gp = conv_derivatives(ConvolutionSpec(0.4, right), 0)
            assert Hp == pytest.approx(1.0, abs=1e-12)
            assert Gp == pytest.approx(0.0, abs=1e-12)

    def test_against_series_derivative(self):
        a = 0.5
        right = make_mapping("Fn", n=2, theta=math.pi)
        H, G = oracle_series(a, right)
        Hp, Gp = conv_derivatives(ConvolutionSpec(a, right), 0.3)
        assert Hp == pytest.approx(series_eval(series_derivative(H), 0.3), abs=1e-12)
        assert Gp == pytest.approx(series_eval(series_derivative(G), 0.3), abs=1e-12)

    def test_f0_ratio_matches_closed_form(self):
        spec = ConvolutionSpec(0.25, make_mapping("F0"))
        z = disk(300, 0.95)
        Hp, Gp = conv_derivatives(spec, z)
        assert np.max(np.abs(Gp / Hp - conv_dilatation_f0(0.25, z))) < 1e-12

    def test_small_z_branch_is_continuous(self):
        # the series fallback below 1e-4 must join the direct formula
        spec = ConvolutionSpec(-0.3, make_mapping("Fn", n=3, theta=0.8))
        for mag in (9e-5, 1.1e-4):
            for ph in (0.0, 2.1, 4.0):
                z = mag * np.exp(1j * ph)
                Hp, Gp = conv_derivatives(spec, z)
                H, G = oracle_series(-0.3, spec.right, N=16)
                assert Hp == pytest.approx(
                    series_eval(series_derivative(H), z), abs=1e-12)
                assert Gp == pytest.approx(
                    series_eval(series_derivative(G), z), abs=1e-12)


class TestDilatation:
    def test_origin(self):
        spec = ConvolutionSpec(0.5, make_mapping("Fn", n=2, theta=math.pi))
        assert conv_dilatation(spec, 0) == 0

    def test_first_table_entries(self):
        spec = ConvolutionSpec(0.5, make_mapping("Fn", n=2, theta=math.pi))
        got = abs(conv_dilatation(spec, 0.99 * np.exp(1j * math.pi / 3)))
        assert got == pytest.approx(1.06019, abs=1e-4)
        spec2 = ConvolutionSpec(0.5, make_mapping("Fn", n=2, theta=math.pi / 8))
        got2 = abs(conv_dilatation(spec2, 0.99 * np.exp(1j * math.pi / 2)))
        assert got2 == pytest.approx(1.16334, abs=1e-4)

    def test_fn1_equals_f0_form(self):
        spec = ConvolutionSpec(0.35, make_mapping("Fn", n=1, theta=math.pi))
        z = disk(1000, 0.99)
        assert np.max(np.abs(conv_dilatation(spec, z)
                             - conv_dilatation_f0(0.35, z))) < 1e-12

    def test_real_parameters_give_real_values(self):
        x = np.linspace(-0.9, 0.9, 41).astype(complex)
        for right in (make_mapping("F0"),
                      make_mapping("F1", theta=0.0),
                      make_mapping("Fn", n=2, theta=math.pi)):
            w = conv_dilatation(ConvolutionSpec(0.2, right), x)
            assert np.max(np.abs(w.imag)) < 1e-13

    def test_rejects_bad_right_family(self):
        with pytest.raises(ParameterError):
            ConvolutionSpec(0.5, make_mapping("Fa", a=0.5))
        with pytest.raises(ParameterError):
            ConvolutionSpec(1.2, make_mapping("F0"))


class TestValues:
    def test_origin(self):
        for right in (make_mapping("F1", theta=0.5),
                      make_mapping("Fn", n=2, theta=math.pi)):
            assert conv_value(ConvolutionSpec(0.1, right), 0) == 0

    def test_f1_against_series(self):
        a, th = 0.5, math.pi / 6
        H, G = oracle_series(a, make_mapping("F1", theta=th))
        spec = ConvolutionSpec(a, make_mapping("F1", theta=th))
        z = 0.5
        want = series_eval(H, z) + np.conj(series_eval(G, z))
        assert conv_value(spec, z) == pytest.approx(want, abs=1e-12)

    def test_real_axis_symmetry(self):
        spec = ConvolutionSpec(0.0, make_mapping("F1", theta=0.0))
        x = np.linspace(-0.7, 0.7, 15).astype(complex)
        vals = conv_value(spec, x)
        assert np.max(np.abs(vals.imag)) < 1e-12

    def test_quadrature_against_series(self):
        a = 0.5
        right = make_mapping("Fn", n=2, theta=math.pi)
        H, G = oracle_series(a, right, N=300)
        spec = ConvolutionSpec(a, right)
        for z in (0.6, 0.3 + 0.45j, -0.7j, -0.55 + 0.2j):
            want = series_eval(H, z) + np.conj(series_eval(G, z))
            assert conv_value(spec, z) == pytest.approx(want, abs=1e-9)

    def test_quadrature_general_theta(self):
        a = -0.4
        right = make_mapping("Fn", n=3, theta=math.pi / 5)
        H, G = oracle_series(a, right, N=300)
        spec = ConvolutionSpec(a, right)
        z = 0.45 - 0.3j
        want = series_eval(H, z) + np.conj(series_eval(G, z))
        assert conv_value(spec, z) == pytest.approx(want, abs=1e-9)

    def test_radius_cap(self):
        spec = ConvolutionSpec(0.5, make_mapping("F1", theta=0.5))
        with pytest.raises(DomainError):
            conv_value(spec, 0.9995)
