"""
Infraestructura - Autovalores de matrices densas complejas no simétricas

Balanceo, reducción de Hessenberg por Householder e iteración QR compleja
con un desplazamiento (Wilkinson, excepcional tras estancamiento) y deflación.
Incluye un oráculo independiente para n pequeño: polinomio característico por
determinantes LU sobre la matriz original e iteración simultánea de Durand-Kerner.
"""

import cmath
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..domain.config import SolverOptions
from ..domain.errors import ParameterOutOfRangeError, SolverFailureError, SpectraError
from ..domain.operators import DenseMatrix, EigenSolverProtocol

logger = logging.getLogger(__name__)

RADIX = 2.0
ORACLE_MAX_N = 16
ORACLE_TOL = 1e-12
ORACLE_MAX_ITER = 5000


def sort_eigenvalues(values) -> np.ndarray:
    """Orden (re redondeado a 1e-10, im) con multiplicidad"""
    values = np.asarray(values, dtype=complex).ravel()
    order = np.lexsort((values.imag, np.round(values.real, 10)))
    return values[order]


def balance(a: np.ndarray) -> np.ndarray:
    """Una pasada de similaridad diagonal en potencias de 2 sobre filas y columnas"""
    a = np.array(a, dtype=complex, copy=True)
    n = a.shape[0]
    sqrdx = RADIX * RADIX
    for i in range(n):
        c = np.sum(np.abs(a[:, i])) - abs(a[i, i])
        r = np.sum(np.abs(a[i, :])) - abs(a[i, i])
        if c == 0.0 or r == 0.0:
            continue
        g = r / RADIX
        f = 1.0
        s = c + r
        while c < g:
            f *= RADIX
            c *= sqrdx
        g = r * RADIX
        while c > g:
            f /= RADIX
            c /= sqrdx
        if (c + r) / f < 0.95 * s:
            a[i, :] /= f
            a[:, i] *= f
    return a


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Reducción de Householder a forma de Hessenberg superior (similaridad unitaria)"""
    h = np.array(a, dtype=complex, copy=True)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0 or np.all(x[1:] == 0):
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        h[k + 2 :, k] = 0.0
    return h


def _eig2x2(a: complex, b: complex, c: complex, d: complex) -> Tuple[complex, complex]:
    """Autovalores de [[a, b], [c, d]]; el primero es el más alejado de d"""
    p = 0.5 * (a - d)
    disc = cmath.sqrt(p * p + b * c)
    if (p.conjugate() * disc).real < 0:
        disc = -disc
    top = p + disc
    first = d + top
    second = d - (b * c) / top if top != 0 else d + p - disc
    return first, second


def _wilkinson_shift(block: np.ndarray) -> complex:
    a, b = block[-2, -2], block[-2, -1]
    c, d = block[-1, -2], block[-1, -1]
    first, second = _eig2x2(a, b, c, d)
    return first if abs(first - d) < abs(second - d) else second


def _qr_step(block: np.ndarray, mu: complex) -> None:
    """Un paso H - mu·I = QR, H <- RQ + mu·I con rotaciones de Givens, in situ"""
    m = block.shape[0]
    idx = np.arange(m)
    block[idx, idx] -= mu
    rotations = []
    for k in range(m - 1):
        a, b = block[k, k], block[k + 1, k]
        r = math.hypot(abs(a), abs(b))
        if r == 0.0:
            c, s = 1.0 + 0j, 0j
        else:
            c, s = a / r, b / r
        x = block[k, k:].copy()
        y = block[k + 1, k:]
        block[k, k:] = c.conjugate() * x + s.conjugate() * y
        block[k + 1, k:] = -s * x + c * y
        block[k + 1, k] = 0.0
        rotations.append((c, s))
    for k, (c, s) in enumerate(rotations):
        x = block[: k + 2, k].copy()
        y = block[: k + 2, k + 1].copy()
        block[: k + 2, k] = c * x + s * y
        block[: k + 2, k + 1] = -s.conjugate() * x + c.conjugate() * y
    block[idx, idx] += mu


def hessenberg_qr_eigvals(h: np.ndarray, options: Optional[SolverOptions] = None) -> np.ndarray:
    """Autovalores de una matriz de Hessenberg por QR desplazado con deflación"""
    options = options or SolverOptions()
    h = np.array(h, dtype=complex, copy=True)
    n = h.shape[0]
    eig = np.zeros(n, dtype=complex)
    scale = float(np.max(np.abs(h))) if n else 0.0
    budget = options.budget_factor * n
    total = 0
    stalled = 0
    hi = n - 1

    while hi >= 0:
        if hi == 0:
            eig[0] = h[0, 0]
            break
        lo = hi
        while lo > 0:
            neighbours = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if neighbours == 0.0:
                neighbours = scale
            if abs(h[lo, lo - 1]) <= options.tolerance * neighbours:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1

        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            stalled = 0
            continue
        if lo == hi - 1:
            eig[hi - 1], eig[hi] = _eig2x2(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
            hi -= 2
            stalled = 0
            continue

        total += 1
        stalled += 1
        if total > budget:
            raise SolverFailureError(
                f"QR no convergió tras {total} iteraciones (índice {hi})",
                index=hi,
                iterations=total,
            )
        block = h[lo : hi + 1, lo : hi + 1]
        if stalled % options.stall_limit == 0:
            mu = h[hi, hi] + abs(h[hi, hi - 1].real) + abs(h[hi - 1, hi - 2].real) * 1j
            logger.debug(f"Desplazamiento excepcional en el índice {hi} tras {stalled} pasos")
        else:
            mu = _wilkinson_shift(block)
        _qr_step(block, mu)

    logger.debug(f"QR: n={n}, {total} iteraciones")
    return eig


class QRSolver(EigenSolverProtocol):
    """Solver de autovalores densos: QR propio o LAPACK vía numpy"""

    def __init__(self, options: Optional[SolverOptions] = None):
        self.options = options or SolverOptions()

    def eigvals(self, matrix: DenseMatrix) -> np.ndarray:
        if self.options.backend == "lapack":
            return sort_eigenvalues(np.linalg.eigvals(matrix.entries))
        if matrix.n == 1:
            return matrix.to_array().ravel()
        h = hessenberg(balance(matrix.entries))
        return sort_eigenvalues(hessenberg_qr_eigvals(h, self.options))

    def eigvals_batch(self, matrices: Sequence[DenseMatrix], workers: int = 1) -> List[np.ndarray]:
        """Mapa determinista: el resultado i corresponde a la matriz i"""
        if workers <= 1 or len(matrices) < 2:
            return [self.eigvals(m) for m in matrices]
        arrays = [m.entries for m in matrices]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_eigvals_worker, arrays, [self.options] * len(arrays)))


def _eigvals_worker(entries: np.ndarray, options: SolverOptions) -> np.ndarray:
    return QRSolver(options).eigvals(DenseMatrix(entries))


def eigvals(matrix: DenseMatrix, options: Optional[SolverOptions] = None) -> np.ndarray:
    return QRSolver(options).eigvals(matrix)


def eigvals_batch(
    matrices: Sequence[DenseMatrix], options: Optional[SolverOptions] = None, workers: int = 1
) -> List[np.ndarray]:
    return QRSolver(options).eigvals_batch(matrices, workers)


def determinant(matrix: DenseMatrix) -> complex:
    """Determinante por LU"""
    return complex(np.linalg.det(matrix.entries))


def char_poly_coefficients(matrix: DenseMatrix) -> np.ndarray:
    """Coeficientes a_0..a_n de det(lam·I - A) por interpolación en raíces de la unidad"""
    a = matrix.entries
    n = matrix.n
    nodes = np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    identity = np.eye(n, dtype=complex)
    values = np.array([np.linalg.det(z * identity - a) for z in nodes])
    coeffs = np.fft.fft(values) / (n + 1)
    coeffs[n] = 1.0
    return coeffs


def _durand_kerner(coeffs: np.ndarray) -> np.ndarray:
    n = coeffs.size - 1
    poly = coeffs[::-1]
    bound = 1.0 + float(np.max(np.abs(coeffs[:-1]))) if n else 1.0
    roots = bound * (0.4 + 0.9j) ** np.arange(n)
    magnitudes = np.abs(poly)
    for iteration in range(1, ORACLE_MAX_ITER + 1):
        previous = roots.copy()
        for i in range(n):
            others = np.delete(roots, i)
            denom = np.prod(roots[i] - others)
            value = np.polyval(poly, roots[i])
            if denom != 0:
                roots[i] -= value / denom
        step = np.max(np.abs(roots - previous) / np.maximum(1.0, np.abs(roots)))
        residual = np.abs(np.polyval(poly, roots))
        scale = np.polyval(magnitudes, np.abs(roots))
        if step < ORACLE_TOL or np.all(residual <= 4 * n * np.finfo(float).eps * scale):
            logger.debug(f"Durand-Kerner convergió en {iteration} iteraciones")
            return roots
    raise SolverFailureError(
        f"Durand-Kerner no convergió en {ORACLE_MAX_ITER} iteraciones",
        iterations=ORACLE_MAX_ITER,
    )


def oracle_eigvals(matrix: DenseMatrix) -> np.ndarray:
    """Oráculo independiente para n <= 16 (solo para pruebas)"""
    n = matrix.n
    if n > ORACLE_MAX_N:
        raise ParameterOutOfRangeError(f"El oráculo solo admite n <= {ORACLE_MAX_N}, n = {n}")
    coeffs = char_poly_coefficients(matrix)
    threshold = 1e-14 * max(1.0, float(np.max(np.abs(coeffs))))
    zeros = 0
    while zeros < n and abs(coeffs[zeros]) <= threshold:
        zeros += 1
    remaining = coeffs[zeros:]
    roots = _durand_kerner(remaining) if remaining.size > 1 else np.zeros(0, dtype=complex)
    return sort_eigenvalues(np.concatenate([np.zeros(zeros, dtype=complex), roots]))


def match_distance(a, b) -> float:
    """Distancia máxima del emparejamiento bipartito óptimo entre dos multiconjuntos"""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        raise SpectraError(f"Multiconjuntos de distinto tamaño: {a.size} y {b.size}")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols]))


def cluster_tolerance(k: int, scale: float = 1.0, tol: float = 1e-8) -> float:
    """Un autovalor defectivo de multiplicidad k solo se determina hasta eps^(1/k)"""
    if k <= 1:
        return tol
    return max(tol, 10.0 * scale * np.finfo(float).eps ** (1.0 / k))


def match_within(a, b, tol: float = 1e-8, cluster_radius: float = 1e-3) -> bool:
    """Emparejamiento óptimo con tolerancia tol, relajada dentro de grupos de autovalores múltiples"""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        return False
    if a.size == 0:
        return True
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    scale = max(1.0, float(np.max(np.abs(b))))
    for i, j in zip(rows, cols):
        k = max(
            int(np.count_nonzero(np.abs(a - a[i]) <= cluster_radius)),
            int(np.count_nonzero(np.abs(b - b[j]) <= cluster_radius)),
        )
        if cost[i, j] > cluster_tolerance(k, scale, tol):
            return False
    return True
