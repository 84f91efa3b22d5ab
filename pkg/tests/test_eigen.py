"""
Tests para el solver de autovalores - Arquitectura limpia
QR desplazado con deflación, oráculo de raíces simultáneas y emparejamiento
"""

import numpy as np
import pytest

from sincpro_hopping_spectra.domain import (
    DenseMatrix,
    ParameterOutOfRangeError,
    SolverFailureError,
    SolverOptions,
)
from sincpro_hopping_spectra.infrastructure import eigen as eigen_module
from sincpro_hopping_spectra.infrastructure.eigen import (
    QRSolver,
    balance,
    char_poly_coefficients,
    cluster_tolerance,
    determinant,
    eigvals,
    eigvals_batch,
    hessenberg,
    match_distance,
    match_within,
    oracle_eigvals,
    sort_eigenvalues,
)
from sincpro_hopping_spectra.infrastructure.spectra import build_finite, build_periodic


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


class TestEigvals:
    """Tests para eigvals sobre casos con respuesta conocida"""

    def test_matriz_nula(self):
        """Test matriz nula n=4"""
        assert np.all(eigvals(DenseMatrix(np.zeros((4, 4)))) == 0)

    def test_circulante_de_unos(self):
        """Test N=3, c=(1,1,1), alpha=1: {2, -1, -1}"""
        values = eigvals(build_periodic([1.0, 1.0, 1.0], 1.0))

        assert match_distance(values, [2, -1, -1]) < 1e-10

    def test_circulante_con_sigma(self):
        """Test N=3, c=(sigma,sigma,sigma): lam_j = omega_j + sigma·omega_j²"""
        sigma = 0.5
        omega = np.exp(2j * np.pi * np.arange(3) / 3)
        values = eigvals(build_periodic([sigma] * 3, 1.0))

        assert match_distance(values, omega + sigma * omega**2) < 1e-10

    def test_companera(self):
        """Test compañera de lam² - 2: ±sqrt(2)"""
        values = eigvals(DenseMatrix([[0, 2], [1, 0]]))

        assert match_distance(values, [np.sqrt(2), -np.sqrt(2)]) < 1e-12

    def test_escalar(self):
        """Test n=1"""
        assert eigvals(DenseMatrix([[7 + 1j]]))[0] == 7 + 1j

    def test_orden_determinista(self):
        """Test salida ordenada por parte real y luego imaginaria"""
        values = eigvals(DenseMatrix(np.diag([3, -1, 1j, -1j])))

        assert np.allclose(values, [-1, -1j, 1j, 3])

    def test_traza_y_determinante(self):
        """Test suma = traza y producto = determinante para matrices aleatorias"""
        rng = np.random.default_rng(11)
        for n in (5, 17, 50):
            a = random_complex(rng, n)
            values = eigvals(DenseMatrix(a))

            assert abs(values.sum() - np.trace(a)) <= 1e-9 * n * np.max(np.abs(a))
            det = determinant(DenseMatrix(a))
            assert abs(np.prod(values) - det) <= 1e-8 * abs(det)

    def test_invariancia_por_similaridad(self):
        """Test eigvals(P^-1 M P) = eigvals(M) con P diagonal"""
        rng = np.random.default_rng(5)
        a = random_complex(rng, 12)
        p = np.diag(rng.uniform(0.5, 2.0, 12))
        similar = np.linalg.inv(p) @ a @ p

        assert match_distance(eigvals(DenseMatrix(a)), eigvals(DenseMatrix(similar))) < 1e-8

    def test_backend_lapack(self):
        """Test que el backend de numpy coincide con el QR propio"""
        rng = np.random.default_rng(3)
        matrix = DenseMatrix(random_complex(rng, 20))
        lapack = QRSolver(SolverOptions(backend="lapack")).eigvals(matrix)

        assert match_distance(eigvals(matrix), lapack) < 1e-8

    def test_presupuesto_agotado(self):
        """Test que el solver informa la falta de convergencia"""
        rng = np.random.default_rng(1)
        solver = QRSolver(SolverOptions(budget_factor=1))

        with pytest.raises(SolverFailureError) as error:
            solver.eigvals(DenseMatrix(random_complex(rng, 20)))

        assert error.value.iterations > 20

    def test_lote_conserva_el_orden(self):
        """Test que eigvals_batch devuelve un resultado por matriz en orden"""
        matrices = [DenseMatrix(np.diag([k, -k])) for k in (1, 2, 3)]
        results = eigvals_batch(matrices)

        assert [float(np.max(r.real)) for r in results] == [1.0, 2.0, 3.0]


class TestReductions:
    """Tests para balanceo y Hessenberg"""

    def test_hessenberg_conserva_espectro(self):
        """Test forma de Hessenberg y similaridad"""
        rng = np.random.default_rng(2)
        a = random_complex(rng, 8)
        h = hessenberg(a)

        assert np.allclose(np.tril(h, -2), 0)
        assert match_distance(np.linalg.eigvals(h), np.linalg.eigvals(a)) < 1e-10

    def test_balanceo_conserva_espectro(self):
        """Test que el balanceo es una similaridad"""
        a = np.array([[1, 1e6, 0], [1e-6, 2, 1e4], [0, 1e-4, 3]], dtype=complex)
        b = balance(a)

        assert match_distance(np.linalg.eigvals(a), np.linalg.eigvals(b)) < 1e-8
        assert np.max(np.abs(b)) < np.max(np.abs(a))

    def test_balanceo_en_una_pasada(self):
        """Test una sola pasada: la fila 0 no se vuelve a escalar tras escalar la fila 1"""
        a = np.array([[0, 1, 0], [1, 0, 16], [0, 1, 0]], dtype=complex)
        expected = np.array([[0, 4, 0], [0.25, 0, 4], [0, 4, 0]], dtype=complex)

        assert np.array_equal(balance(a), expected)


class TestOracle:
    """Tests para el oráculo independiente"""

    def test_companera(self):
        """Test compañera de lam² - 2"""
        values = oracle_eigvals(DenseMatrix([[0, 2], [1, 0]]))

        assert match_distance(values, [np.sqrt(2), -np.sqrt(2)]) < 1e-10

    def test_escalar(self):
        """Test n=1 con entrada 7+i"""
        assert match_distance(oracle_eigvals(DenseMatrix([[7 + 1j]])), [7 + 1j]) < 1e-12

    def test_mismos_ejemplos_que_eigvals(self):
        """Test acuerdo con eigvals en las matrices circulantes"""
        for c in ([1.0, 1.0, 1.0], [0.5, 0.5, 0.5]):
            matrix = build_periodic(c, 1.0)
            assert match_within(eigvals(matrix), oracle_eigvals(matrix))

    def test_tamano_maximo(self):
        """Test que el oráculo solo admite n <= 16"""
        with pytest.raises(ParameterOutOfRangeError):
            oracle_eigvals(DenseMatrix(np.eye(17)))

    def test_polinomio_caracteristico_de_matriz_llena(self):
        """Test det(lam·I - A) = lam³ - 6lam² + 9lam - 4 para una matriz no Hessenberg"""
        a = DenseMatrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])

        assert np.allclose(char_poly_coefficients(a), [-4, 9, -6, 1], atol=1e-10)

    def test_independiente_de_hessenberg(self, monkeypatch):
        """Test que el oráculo no usa la reducción de Hessenberg del solver"""

        def no_disponible(_):
            raise AssertionError("hessenberg no debe usarse en el oráculo")

        monkeypatch.setattr(eigen_module, "hessenberg", no_disponible)
        rng = np.random.default_rng(11)
        a = random_complex(rng, 6)

        assert match_distance(oracle_eigvals(DenseMatrix(a)), np.linalg.eigvals(a)) < 1e-8

    def test_matrices_de_signos_aleatorias(self):
        """Test acuerdo con el oráculo para matrices de signos n <= 10"""
        rng = np.random.default_rng(2024)
        for k in range(200):
            n = int(rng.integers(3, 11))
            sigma = float(rng.choice([0.5, 0.9025, 1.0]))
            c = sigma * rng.choice([-1.0, 1.0], size=n)
            if k % 2:
                matrix = build_periodic(c, np.exp(2j * np.pi * rng.random()))
            else:
                matrix = build_finite(c[:-1])
            assert match_within(eigvals(matrix), oracle_eigvals(matrix)), f"muestra {k}"


class TestMatching:
    """Tests para el emparejamiento de multiconjuntos"""

    def test_distancia_de_emparejamiento(self):
        """Test emparejamiento óptimo independiente del orden"""
        assert match_distance([1, 2, 3], [3.1, 1, 2]) == pytest.approx(0.1)

    def test_tamanos_distintos(self):
        """Test que tamaños distintos no emparejan"""
        assert not match_within([1, 2], [1])

    def test_tolerancia_de_grupos(self):
        """Test que un autovalor triple se acepta hasta eps^(1/3)"""
        eps = np.finfo(float).eps

        assert cluster_tolerance(1) == 1e-8
        assert cluster_tolerance(3) == pytest.approx(10 * eps ** (1 / 3))
        cluster = 5e-6 * np.exp(2j * np.pi * np.arange(3) / 3)
        assert match_within(cluster, np.zeros(3))
        assert not match_within([5e-6, 1.0, 2.0], [0.0, 1.0, 2.0])

    def test_autovalor_defectivo(self):
        """Test N=3, c=(1,-1) abierta: cero triple no diagonalizable"""
        matrix = build_finite([1.0, -1.0])

        assert match_within(eigvals(matrix), np.zeros(3))

    def test_orden_con_multiplicidad(self):
        """Test que el orden conserva repeticiones"""
        assert list(sort_eigenvalues([1j, 0, 1j, -1])) == [-1, 0, 1j, 1j]
