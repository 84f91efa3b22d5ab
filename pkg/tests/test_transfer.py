"""
Tests para las matrices de transferencia - Arquitectura limpia
Criterio Phi, clasificación B/I/O, curvas cerradas, regiones y decaimiento
"""

import math

import numpy as np
import pytest

from sincpro_hopping_spectra.domain import (
    CurveOptions,
    OutOfDomainError,
    ParameterOutOfRangeError,
    Region,
    RegionParams,
    SignWord,
)
from sincpro_hopping_spectra.domain.errors import SpectraError
from sincpro_hopping_spectra.infrastructure.seqcore import c_iterate_word
from sincpro_hopping_spectra.infrastructure.transfer import (
    TransferService,
    classify,
    curve_residual,
    decay_check,
    denseness_grid,
    paired_member,
    phi,
    region_masks,
    region_tests,
    required_decay_depth,
    rho_curve,
    rho_polyline,
    star_distance,
    transfer_matrix,
)


class TestTransferMatrix:
    """Tests para T_p = X_p ··· X_1"""

    def setup_method(self):
        self.service = TransferService()

    def test_palabra_de_un_signo(self):
        """Test T = [[0, 1], [-sigma, lam]] para [+sigma]"""
        lam = 0.7 - 0.2j
        matrix = transfer_matrix(SignWord((1,), 0.5), lam).to_array()

        assert np.allclose(matrix, [[0, 1], [-0.5, lam]])

    def test_palabra_alternada(self):
        """Test T = [[sigma, lam], [sigma·lam, -sigma + lam²]] para [+, -]"""
        sigma, lam = 0.5, 0.3 + 1.1j
        matrix = transfer_matrix(SignWord.from_label("+-", sigma), lam).to_array()

        expected = [[sigma, lam], [sigma * lam, -sigma + lam**2]]
        assert np.allclose(matrix, expected)

    def test_traza_y_determinante(self):
        """Test tau = lam² y gamma = -sigma² para [+, -]"""
        sigma, lam = 0.5, 1.3 - 0.4j
        data = self.service.trace_det(SignWord.from_label("+-", sigma), lam)

        assert data.tau == pytest.approx(lam**2)
        assert data.gamma == pytest.approx(-(sigma**2))
        assert data.p == 2

    def test_determinante_es_producto_de_coeficientes(self):
        """Test det(T_p) = c_1···c_p para una palabra cualquiera"""
        word = SignWord.from_label("+--+-", 0.7)
        matrix = transfer_matrix(word, 0.4 + 0.9j)

        assert matrix.det == pytest.approx(word.sign_product() * 0.7**5)


class TestPhi:
    """Tests para el criterio Phi(tau, gamma)"""

    def test_valores_de_referencia(self):
        """Test Phi(1.5, 0.5) = 1 y Phi(0, gamma) = 0"""
        assert phi(1.5, 0.5) == pytest.approx(1.0)
        assert phi(0, -0.3) == 0.0

    def test_parte_imaginaria(self):
        """Test la contribución de Im(tau)"""
        assert phi(0.5j, 0.5) == pytest.approx(1.0)

    def test_fuera_de_dominio(self):
        """Test que |gamma| >= 1 no está en el dominio"""
        with pytest.raises(OutOfDomainError):
            phi(1.0, 1.0)


class TestClassify:
    """Tests para la clasificación B/I/O"""

    def test_clases_para_sigma_medio(self):
        """Test [+0.5]: lam = 0 en I, lam = 3 en O, lam = 1.5 en B"""
        word = SignWord((1,), 0.5)

        assert classify(word, 0).region == Region.I
        assert classify(word, 3).region == Region.O
        assert classify(word, 1.5).region == Region.B

    def test_modulos_de_raices(self):
        """Test que |z1| >= |z2| y su producto es |gamma|"""
        result = classify(SignWord.from_label("+-+", 0.5), 0.2 + 0.1j)

        assert result.z1_abs >= result.z2_abs
        assert result.z1_abs * result.z2_abs == pytest.approx(0.125)

    def test_gamma_unitario(self):
        """Test sigma = 1: nunca hay interior estricto"""
        word = SignWord((1,), 1.0)

        assert classify(word, 0).region == Region.B
        assert classify(word, 3).region == Region.O
        assert math.isnan(classify(word, 0).phi)

    def test_tolerancia_invalida(self):
        """Test que la tolerancia debe ser positiva"""
        with pytest.raises(SpectraError):
            classify(SignWord((1,), 0.5), 0, tol=0)

    def test_pertenencia_emparejada(self):
        """Test lam en la clausura de I_c y fuera de E_{-sigma}"""
        word = SignWord((1,), 0.5)

        assert paired_member(word, "-", 0.6)
        assert not paired_member(word, "-", 0)


class TestClosedCurves:
    """Tests para las curvas rho_n^±"""

    def test_extremos_de_rho_cero(self):
        """Test rho_0^+(0) = 1 + sigma y rho_0^+(pi/2) = 1 - sigma"""
        sigma = 0.5

        assert rho_curve(0, "+", 0.0, sigma) == pytest.approx(1.5)
        assert rho_curve(0, "+", math.pi / 2, sigma) == pytest.approx(0.5)

    def test_rama_menos_es_rotacion(self):
        """Test rho^-(theta) = rho^+(theta + pi/2^(n+1))"""
        theta = np.linspace(0, 2 * math.pi, 50)
        for n in range(3):
            shift = math.pi / 2 ** (n + 1)
            assert np.allclose(
                rho_curve(n, "-", theta, 0.6), rho_curve(n, "+", theta + shift, 0.6)
            )

    def test_sigma_uno_fuera_de_dominio(self):
        """Test que la curva cerrada necesita sigma < 1"""
        with pytest.raises(OutOfDomainError):
            rho_curve(0, "+", 0.0, 1.0)

    def test_polilinea_sobre_la_curva(self):
        """Test que la polilínea cae sobre la curva y respeta el paso máximo"""
        options = CurveOptions(samples=64, max_step=0.05, max_refinements=10)
        polyline = rho_polyline(1, "+", 0.5, options)
        closed = np.append(polyline, polyline[0])

        assert np.max(curve_residual(polyline, 1, "+", 0.5)) < 1e-12
        assert np.max(np.abs(np.diff(closed))) <= 0.05

    def test_r_sigma(self):
        """Test r_sigma(0.5) = 0.670820"""
        assert RegionParams(0.5).r_sigma == pytest.approx(0.670820, abs=1e-6)


class TestRegions:
    """Tests para elipses, agujero, anillo y diamante"""

    def test_origen_en_el_agujero(self):
        """Test lam = 0 está en H_sigma y en el diamante pero no en el anillo"""
        membership = region_tests(0, RegionParams(0.5))

        assert membership.in_E_plus
        assert membership.in_E_minus
        assert membership.in_H
        assert not membership.in_annulus
        assert membership.in_diamond

    def test_punto_del_anillo(self):
        """Test lam = 1.2 está en el anillo y en E_+ pero no en E_-"""
        membership = region_tests(1.2, RegionParams(0.5))

        assert membership.in_annulus
        assert membership.in_E_plus
        assert not membership.in_E_minus
        assert not membership.in_H


class TestDecay:
    """Tests para el decaimiento de las soluciones con c = sigma·c̃"""

    def test_profundidad_requerida(self):
        """Test sigma = 0.5 necesita d = 3"""
        assert required_decay_depth(0.5) == 3

    def test_tasa_en_el_origen(self):
        """Test la tasa en lam = 0 es sqrt(sigma)"""
        report = decay_check(0, 0.5, 3)

        assert report.rate == pytest.approx(math.sqrt(0.5), abs=1e-3)
        assert report.decays
        assert report.guaranteed
        assert len(report.rates) == 2
        assert all(isinstance(rate, float) for rate in report.rates)
        assert report.rate == max(report.rates)

    def test_dentro_y_fuera(self):
        """Test decaimiento dentro del disco y crecimiento fuera"""
        inside = decay_check(0.8, 0.5, 3)
        outside = decay_check(1.2, 0.5, 3)

        assert inside.decays
        assert inside.guaranteed
        assert not outside.decays
        assert not outside.guaranteed
        assert inside.m == 8

    def test_profundidad_insuficiente(self):
        """Test que un d demasiado pequeño informa el d necesario"""
        with pytest.raises(ParameterOutOfRangeError) as error:
            decay_check(0.5, 0.9, 3)

        assert error.value.required_d == 5


class TestStar:
    """Tests para la estrella de sigma = 1"""

    def test_puntas_sobre_la_estrella(self):
        """Test que las puntas 2^(1/2^m)·e^(i·pi·j/2^m) están a distancia 0"""
        m = 2
        tips = 2 ** (1 / 2**m) * np.exp(1j * math.pi * np.arange(2 ** (m + 1)) / 2**m)

        assert np.max(star_distance(tips, m)) < 1e-12

    def test_punto_exterior(self):
        """Test distancia de lam = 3 a la estrella de nivel 0"""
        assert star_distance(3.0, 0)[0] == pytest.approx(1.0)

    def test_malla_de_densidad(self):
        """Test tamaño y radios de la malla de densidad"""
        grid = denseness_grid(1)
        top = 2 ** 0.5

        assert grid.size == 16
        assert set(np.round(np.abs(grid), 12)) == {round(top / 2, 12), round(top, 12)}


class TestInvariants:
    """Tests de invariantes sobre muestras aleatorias y curvas completas"""

    SIGMAS = (0.5, 0.9025)

    def setup_method(self):
        self.service = TransferService()
        self.rng = np.random.default_rng(1729)

    def random_word(self, max_period: int, sigma: float) -> SignWord:
        p = int(self.rng.integers(1, max_period + 1))
        return SignWord(tuple(int(s) for s in self.rng.choice([-1, 1], size=p)), sigma)

    def random_lambda(self, radius: float) -> complex:
        r = radius * math.sqrt(self.rng.random())
        return complex(r * np.exp(2j * math.pi * self.rng.random()))

    def test_producto_de_raices(self):
        """Test |z1|·|z2| = sigma^p para palabras aleatorias con p <= 16"""
        for _ in range(500):
            sigma = float(self.rng.choice([0.3, 0.5, 0.9025, 1.0]))
            word = self.random_word(16, sigma)
            result = classify(word, self.random_lambda(3.0))

            expected = sigma**word.period
            assert result.z1_abs * result.z2_abs == pytest.approx(expected, rel=1e-12)

    def test_phi_coincide_con_raices(self):
        """Test que la decisión por Phi coincide con |z1| < 1 en 10^4 muestras"""
        counts = {Region.I: 0, Region.O: 0}
        for k in range(10_000):
            sigma = float(self.rng.choice(self.SIGMAS))
            word = self.random_word(16, sigma)
            result = classify(word, self.random_lambda(3.0))
            if abs(result.phi - 1.0) <= 1e-6:
                continue

            inside = result.phi < 1.0
            assert inside == (result.z1_abs < 1.0), f"muestra {k}"
            assert result.region == (Region.I if inside else Region.O), f"muestra {k}"
            counts[result.region] += 1

        assert counts[Region.I] > 0
        assert counts[Region.O] > 0

    def test_curva_cerrada_es_frontera(self):
        """Test classify(c^(n,±), rho_n^±(theta)·e^(i·theta)) = B en 720 ángulos"""
        theta = np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False)
        for sigma in self.SIGMAS:
            for n in range(4):
                for branch in ("+", "-"):
                    word = c_iterate_word(n, branch, sigma)
                    points = rho_curve(n, branch, theta, sigma) * np.exp(1j * theta)
                    regions = [self.service.classify(word, lam).region for lam in points]
                    off_curve = [r for r in regions if r != Region.B]
                    assert not off_curve, f"n={n}{branch} sigma={sigma}"

    def test_anidamiento_de_rho_inferior(self):
        """Test rho_lower(n) <= min_theta rho_n^±(theta) para n <= 4"""
        theta = np.linspace(0.0, 2.0 * math.pi, 2880, endpoint=False)
        for sigma in (0.3,) + self.SIGMAS:
            params = RegionParams(sigma)
            for n in range(5):
                for branch in ("+", "-"):
                    lowest = float(np.min(rho_curve(n, branch, theta, sigma)))
                    assert params.rho_lower(n) <= lowest + 1e-12, f"n={n}{branch}"

    def test_rho_inferior_creciente_y_acotado(self):
        """Test 0 < 1 - sigma <= r_sigma <= 1 y rho_lower creciente por debajo de 1"""
        for sigma in (0.3,) + self.SIGMAS:
            params = RegionParams(sigma)
            lowers = [params.rho_lower(n) for n in range(5)]

            assert 0.0 < params.annulus_inner <= params.r_sigma <= 1.0
            assert all(a <= b for a, b in zip(lowers, lowers[1:]))
            assert lowers[-1] < 1.0

    def test_agujero_entre_discos(self):
        """Test |lam| < 1 - sigma implica H_sigma, y H_sigma implica |lam| <= r_sigma"""
        for sigma in (0.3, 0.5, 0.9):
            params = RegionParams(sigma)
            radius = (1.0 - sigma) * np.sqrt(self.rng.random(2000)) * (1.0 - 1e-9)
            disc = radius * np.exp(2j * math.pi * self.rng.random(2000))
            half = 1.5 * params.r_sigma
            box = half * (2.0 * self.rng.random(2000) - 1.0)
            box = box + 1j * half * (2.0 * self.rng.random(2000) - 1.0)

            assert np.all(region_masks(disc, sigma)["in_H"])
            in_hole = box[region_masks(box, sigma)["in_H"]]
            assert in_hole.size > 0
            assert np.all(np.abs(in_hole) <= params.r_sigma + 1e-12)
            assert region_tests(complex(disc[0]), params).in_H
