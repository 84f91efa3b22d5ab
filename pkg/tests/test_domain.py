"""
Tests para los tipos de dominio - Arquitectura limpia
Palabras de signos, ventanas, polinomios exactos, nubes y configuración
"""

import math

import numpy as np
import pytest

from sincpro_hopping_spectra.domain import (
    CheckResult,
    ConfigurationError,
    DenseMatrix,
    DiagWord,
    IntPolynomial,
    InvalidWordError,
    RegionParams,
    RunConfig,
    SeqWindow,
    SignWord,
    SpectrumCloud,
    Transfer2x2,
    WindowError,
)
from sincpro_hopping_spectra.domain.errors import SpectraError


class TestSignWord:
    """Tests para las palabras periódicas de signos"""

    def test_coeficientes_empiezan_en_c1(self):
        """Test que coefficients devuelve c_1..c_N con c_0 en la posición 0"""
        word = SignWord.from_label("+-", 0.5)

        assert list(word.coefficients()) == [-0.5, 0.5]
        assert word.value(0) == 0.5
        assert word.value(2) == 0.5

    def test_etiqueta_y_periodo(self):
        """Test etiqueta y período de una palabra"""
        word = SignWord((1, -1, -1), 1.0)

        assert word.label == "+--"
        assert word.period == 3
        assert word.sign_product() == 1

    def test_signo_invalido(self):
        """Test que un signo distinto de ±1 se rechaza"""
        with pytest.raises(InvalidWordError):
            SignWord((1, 0, -1))

    def test_palabra_vacia(self):
        """Test que la palabra vacía se rechaza"""
        with pytest.raises(InvalidWordError):
            SignWord(())

    def test_sigma_fuera_de_rango(self):
        """Test que sigma debe estar en (0, 1]"""
        with pytest.raises(InvalidWordError):
            SignWord((1,), 0.0)
        with pytest.raises(InvalidWordError):
            SignWord((1,), 1.5)

    def test_etiqueta_invalida(self):
        """Test que una etiqueta con caracteres extraños falla"""
        with pytest.raises(InvalidWordError):
            SignWord.from_label("+x-")

    def test_periodo_minimo(self):
        """Test reducción al período mínimo"""
        word = SignWord.from_label("+-+-")

        assert word.minimal_period() == 2
        assert word.reduced().label == "+-"

    def test_rotacion_canonica(self):
        """Test rotación lexicográficamente mínima"""
        assert SignWord.from_label("+-").canonical().label == "-+"
        assert SignWord.from_label("+--").canonical().label == "--+"

    def test_rotar_y_negar(self):
        """Test rotación y negación de signos"""
        word = SignWord.from_label("++-")

        assert word.rotate(1).label == "+-+"
        assert word.negate().label == "--+"
        assert word.repeat(2).label == "++-++-"


class TestSeqWindow:
    """Tests para las ventanas finitas de secuencias"""

    def test_ventana_constante(self):
        """Test ventana constante y sus límites"""
        window = SeqWindow.constant(-2, 3, -1, 0.5)

        assert window.lo == -2
        assert window.hi == 3
        assert window[0] == -0.5

    def test_indice_fuera_de_ventana(self):
        """Test que leer fuera de la ventana falla"""
        window = SeqWindow.constant(0, 2, 1)

        with pytest.raises(WindowError):
            window.sign(5)

    def test_restringir_fuera_de_rango(self):
        """Test que restrict no puede ampliar la ventana"""
        window = SeqWindow.constant(0, 2, 1)

        assert window.restrict(1, 2).signs == (1, 1)
        with pytest.raises(WindowError):
            window.restrict(-1, 2)

    def test_ventana_vacia(self):
        """Test que una ventana vacía se rechaza"""
        with pytest.raises(WindowError):
            SeqWindow.constant(3, 1, 1)


class TestDiagWord:
    """Tests para la diagonal de M_b"""

    def test_entradas_validas(self):
        """Test que las entradas 0 y ±2σ se aceptan"""
        word = DiagWord((0.0, 1.0, -1.0), 0.5)

        assert word.period == 3
        assert word.sub == -0.25

    def test_entrada_invalida(self):
        """Test que otra entrada diagonal se rechaza"""
        with pytest.raises(InvalidWordError):
            DiagWord((0.3,), 0.5)


class TestIntPolynomial:
    """Tests para el polinomio exacto con coeficientes enteros"""

    def test_producto(self):
        """Test (λ+1)(λ-1) = λ²-1"""
        lam = IntPolynomial.monomial(1)

        assert (lam + 1) * (lam - 1) == IntPolynomial((-1, 0, 1))

    def test_normalizacion_de_ceros(self):
        """Test que los ceros finales se eliminan"""
        poly = IntPolynomial((1, 2, 0, 0))

        assert poly.degree == 1
        assert IntPolynomial().degree == -1
        assert IntPolynomial((0, 0)).is_zero()

    def test_composicion_cuadrada(self):
        """Test p(λ²) para p = λ + 3"""
        assert IntPolynomial((3, 1)).compose_square() == IntPolynomial((3, 0, 1))

    def test_paridad(self):
        """Test polinomios pares e impares"""
        assert IntPolynomial((-1, 0, 1)).is_even()
        assert IntPolynomial((0, 1, 0, 1)).is_odd()
        assert not IntPolynomial((1, 1)).is_even()

    def test_evaluacion(self):
        """Test evaluación de Horner"""
        poly = IntPolynomial.from_terms({4: 1, 2: 1, 0: -1})

        assert poly.eval_at(2) == 19
        assert poly.eval_at(1j) == -1

    def test_texto(self):
        """Test representación legible"""
        assert str(IntPolynomial.from_terms({2: 1, 0: -1})) == "λ^2 - 1"
        assert str(IntPolynomial()) == "0"
        assert str(IntPolynomial.from_terms({3: -2, 1: 1})) == "-2λ^3 + λ"

    def test_enteros_grandes(self):
        """Test que los coeficientes no se desbordan"""
        poly = IntPolynomial.constant(2**70) * IntPolynomial.constant(2**70)

        assert poly[0] == 2**140


class TestTransfer2x2:
    """Tests para la matriz 2x2 de transferencia"""

    def test_paso_y_determinante(self):
        """Test que det(X_n) = c_n"""
        step = Transfer2x2.step(-0.5, 2.0)

        assert step.det == pytest.approx(-0.5)
        assert step.trace == 2.0

    def test_producto_con_identidad(self):
        """Test producto por la identidad"""
        step = Transfer2x2.step(0.3, 1 + 1j)

        assert Transfer2x2.identity() @ step == step


class TestRegionParams:
    """Tests para las constantes de las regiones"""

    def test_constantes(self):
        """Test anillo, diamante y r_sigma para sigma = 0.5"""
        params = RegionParams(0.5)

        assert params.annulus_inner == 0.5
        assert params.annulus_outer == 1.5
        assert params.diamond_bound == pytest.approx(math.sqrt(2.5))
        assert params.r_sigma == pytest.approx(0.670820, abs=1e-6)

    def test_rho_inferior(self):
        """Test rho_{sigma,0} = 1 - sigma"""
        assert RegionParams(0.5).rho_lower(0) == pytest.approx(0.5)

    def test_sigma_invalido(self):
        """Test que sigma fuera de (0, 1] se rechaza"""
        with pytest.raises(InvalidWordError):
            RegionParams(0.0)


class TestDenseMatrix:
    """Tests para la matriz densa inmutable"""

    def test_matriz_no_cuadrada(self):
        """Test que una matriz no cuadrada se rechaza"""
        with pytest.raises(ValueError):
            DenseMatrix(np.zeros((2, 3)))

    def test_entradas_no_finitas(self):
        """Test que NaN se rechaza"""
        with pytest.raises(ValueError):
            DenseMatrix([[np.nan]])

    def test_entradas_de_solo_lectura(self):
        """Test que las entradas no se pueden modificar"""
        matrix = DenseMatrix(np.eye(2))

        with pytest.raises(ValueError):
            matrix.entries[0, 0] = 5
        copy = matrix.to_array()
        copy[0, 0] = 5
        assert matrix.entries[0, 0] == 1


class TestSpectrumCloud:
    """Tests para la nube de puntos etiquetada"""

    def test_metadatos_incompletos(self):
        """Test que cada punto necesita sus metadatos"""
        with pytest.raises(SpectraError):
            SpectrumCloud(
                points=[1, 2], n_sizes=[1], word_ids=["+"], alphas=[1], sigma=0.5
            )

    def test_orden_determinista(self):
        """Test orden por parte real y luego imaginaria"""
        cloud = SpectrumCloud.from_eigenvalues([1 + 1j, -1, 1 - 1j], 3, "+-+", 1.0, 0.5)

        assert list(cloud.sorted().points) == [-1, 1 - 1j, 1 + 1j]

    def test_concat_conserva_etiquetas(self):
        """Test que concat une puntos y etiquetas"""
        a = SpectrumCloud.from_eigenvalues([1, 2], 2, "+", 1.0, 0.5)
        b = SpectrumCloud.from_eigenvalues([3], 1, "-", -1.0, 0.5)
        cloud = SpectrumCloud.concat([a, b], 0.5, source="test")

        assert len(cloud) == 3
        assert cloud.word_ids == ["+", "+", "-"]
        assert cloud.params == {"source": "test"}

    def test_nube_vacia(self):
        """Test nube vacía"""
        cloud = SpectrumCloud.empty(0.5)

        assert len(cloud) == 0
        assert len(cloud.sorted()) == 0


class TestCheckResult:
    """Tests para el estado de una comprobación"""

    def test_estados(self):
        """Test PASS, FAIL y SKIP"""
        assert CheckResult("a", True, 0.0).status == "PASS"
        assert CheckResult("a", False, 1.0).status == "FAIL"
        assert CheckResult("a", True, 0.0, skipped=True).status == "SKIP"


class TestRunConfig:
    """Tests para la validación de la configuración"""

    def test_configuracion_valida(self):
        """Test configuración mínima válida"""
        config = RunConfig(command="pi-union", sigma=0.5, nmax=3).validate()

        assert config.spectra_options().alpha_count == 512

    def test_sigma_invalido(self):
        """Test sigma fuera de rango"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="pi-union", sigma=1.5).validate()

    def test_semilla_obligatoria(self):
        """Test que los comandos aleatorios necesitan semilla"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="sample").validate()
        RunConfig(command="sample", seed=1).validate()

    def test_finite_periodica_pequena(self):
        """Test que la matriz periódica necesita N >= 3"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="finite", seed=1, n=2, shape="periodic").validate()
        RunConfig(command="finite", seed=1, n=2, shape="open").validate()

    def test_curva_cerrada_con_sigma_uno(self):
        """Test que la curva cerrada no existe para sigma = 1"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="curve", sigma=1.0, mode="both").validate()
        RunConfig(command="curve", sigma=1.0, mode="bloch").validate()

    def test_overlay_desconocido(self):
        """Test que un overlay desconocido se rechaza"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="pi-union", overlay=("annulus", "circle")).validate()

    def test_probabilidad_invalida(self):
        """Test que p_sigma debe estar en (0, 1)"""
        with pytest.raises(ConfigurationError):
            RunConfig(command="sample", seed=1, p_sigma=1.0).validate()
