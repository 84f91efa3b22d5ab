"""
Infraestructura - Transformaciones de secuencias de signos: Gamma, inversión, c̃
"""

import logging
import math
import threading
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..domain.errors import (
    InvalidAmplitudeError,
    ParameterOutOfRangeError,
    SpectraError,
    WindowError,
)
from ..domain.sequences import (
    DiagWord,
    GammaImage,
    SeqWindow,
    SequenceTransformProtocol,
    SignWord,
)

logger = logging.getLogger(__name__)

AMPLITUDE_RTOL = 1e-12


def _check_amplitude(b_sigma: float, sigma: float) -> None:
    if not math.isclose(b_sigma, sigma * sigma, rel_tol=AMPLITUDE_RTOL, abs_tol=1e-15):
        raise InvalidAmplitudeError(
            f"La amplitud de b ({b_sigma}) no es sigma² = {sigma * sigma} para sigma = {sigma}"
        )


def _gamma_signs(signs: Tuple[int, ...], start: int) -> Tuple[int, ...]:
    """Los 4N signos s_0..s_{4N-1} de Gamma_± sobre una palabra de período N"""
    n_period = len(signs)
    out = [0] * (4 * n_period)
    out[0] = start
    for n in range(1, 2 * n_period):
        out[2 * n - 1] = -out[2 * n - 2]
        out[2 * n] = signs[n % n_period] * out[2 * n - 1]
    out[-1] = -out[-2]
    return tuple(out)


class CTildeTable:
    """
    Tabla memoizada de c̃_n.

    c̃_1 = 1, c̃_{2n} = c̃_{2n-1}·c̃_n, c̃_{2n+1} = -c̃_{2n}. La tabla crece de
    abajo hacia arriba bajo un lock; las lecturas ya calculadas no lo toman.
    Los overrides reemplazan el valor devuelto sin alterar la recurrencia.
    """

    def __init__(self, overrides: Optional[Dict[int, int]] = None):
        self._values: List[int] = [0, 1]
        self._lock = threading.Lock()
        self.overrides: Dict[int, int] = {}
        for n, value in (overrides or {}).items():
            if n < 1 or value not in (1, -1):
                raise SpectraError(f"Override inválido de c̃: {n} -> {value}")
            self.overrides[n] = value
        if self.overrides:
            logger.warning(f"Tabla c̃ con valores alterados en n = {sorted(self.overrides)}")

    @classmethod
    def with_flip(cls, n: int) -> "CTildeTable":
        """Tabla con c̃_n invertido (inyección de fallos)"""
        return cls(overrides={n: -CTildeTable().value(n)})

    def _extend(self, n: int) -> None:
        with self._lock:
            values = self._values
            for k in range(len(values), n + 1):
                if k % 2 == 0:
                    values.append(values[k - 1] * values[k // 2])
                else:
                    values.append(-values[k - 1])

    def value(self, n: int) -> int:
        if n <= 0:
            raise ParameterOutOfRangeError(f"c̃_n solo está definido para n >= 1, n = {n}")
        if n >= len(self._values):
            self._extend(n)
        return self.overrides.get(n, self._values[n])

    __call__ = value

    def values(self, n_max: int) -> np.ndarray:
        """c̃_1..c̃_{n_max} como arreglo de enteros"""
        if n_max < 1:
            return np.zeros(0, dtype=np.int64)
        self.value(n_max)
        out = np.array(self._values[1 : n_max + 1], dtype=np.int64)
        for n, v in self.overrides.items():
            if n <= n_max:
                out[n - 1] = v
        return out

    def product(self, n_max: int) -> int:
        """∏_{r=1..n_max} c̃_r"""
        return int(np.prod(self.values(n_max))) if n_max >= 1 else 1


DEFAULT_C_TILDE = CTildeTable()


class SequenceTransforms(SequenceTransformProtocol):
    """Mapas Gamma, inversión espacial, punto fijo c₊ e iterados c^(m,±)"""

    def __init__(self, c_table: Optional[CTildeTable] = None):
        self.c_table = c_table or DEFAULT_C_TILDE

    def gamma_plus_word(self, b: SignWord, sigma: float) -> GammaImage:
        """
        Aplica Gamma_{sigma,+} a una palabra periódica de amplitud sigma².

        Devuelve la palabra reducida a su período mínimo junto con el
        período sin reducir 4N.
        """
        return self._gamma_word(b, sigma, start=1)

    def gamma_minus_word(self, b: SignWord, sigma: float) -> GammaImage:
        """Gamma_{sigma,-}: igual que Gamma_+ pero con c_0 = -sigma"""
        return self._gamma_word(b, sigma, start=-1)

    def _gamma_word(self, b: SignWord, sigma: float, start: int) -> GammaImage:
        _check_amplitude(b.sigma, sigma)
        raw = SignWord(_gamma_signs(b.signs, start), sigma)
        reduced = raw.reduced()
        if reduced.period != raw.period:
            logger.debug(
                f"Gamma({b.label}): período {raw.period} reducido a {reduced.period}"
            )
        return GammaImage(word=reduced, raw_period=raw.period)

    def gamma_raw_word(self, b: SignWord, sigma: float) -> SignWord:
        """Palabra 4N sin reducir de Gamma_{sigma,+}(b)"""
        _check_amplitude(b.sigma, sigma)
        return SignWord(_gamma_signs(b.signs, 1), sigma)

    def gamma_plus_window(self, b: SeqWindow, sigma: float = 1.0) -> SeqWindow:
        return self.gamma_window(b, sigma, sign=1)

    def gamma_window(self, b: SeqWindow, sigma: float = 1.0, sign: int = 1) -> SeqWindow:
        """
        Relaciones de Gamma_± sobre una ventana finita.

        b en [lo, hi] con lo <= 0 <= hi determina c exactamente en
        [2·lo, 2·hi + 1]; fuera de esa ventana no se adivina nada.
        """
        if not b.contains(0):
            raise WindowError(f"La ventana [{b.lo}, {b.hi}] no contiene el índice 0")
        if sign not in (1, -1):
            raise SpectraError(f"Signo inicial inválido: {sign}")
        _check_amplitude(b.sigma, sigma)

        lo, hi = b.lo, b.hi
        offset = -2 * lo
        s = [0] * (2 * (hi - lo) + 2)
        s[offset] = sign
        for n in range(1, hi + 1):
            s[offset + 2 * n - 1] = -s[offset + 2 * n - 2]
            s[offset + 2 * n] = b.sign(n) * s[offset + 2 * n - 1]
        s[offset + 2 * hi + 1] = -s[offset + 2 * hi]
        for n in range(0, lo, -1):
            s[offset + 2 * n - 1] = b.sign(n) * s[offset + 2 * n]
            s[offset + 2 * n - 2] = -s[offset + 2 * n - 1]
        return SeqWindow(2 * lo, tuple(s), sigma)

    def hat_inversion(self, b: SeqWindow) -> SeqWindow:
        """b̂_n = b_{1-n}; la ventana [lo, hi] pasa a [1-hi, 1-lo]"""
        return SeqWindow(1 - b.hi, tuple(reversed(b.signs)), b.sigma)

    def fixed_point_window(self, n: int, sigma: float = 1.0) -> SeqWindow:
        """
        sigma·c₊ en [2-2^n, 2^n-1].

        Itera Gamma_+ n veces desde las ventanas constantes +1 y -1 sobre
        [-1, 1]; ambas deben coincidir en la ventana de acuerdo.
        """
        if n < 1:
            raise ParameterOutOfRangeError(f"fixed_point_window necesita n >= 1, n = {n}")
        lo, hi = 2 - 2**n, 2**n - 1
        results = []
        for start in (1, -1):
            window = SeqWindow.constant(-1, 1, start)
            for _ in range(n):
                window = self.gamma_plus_window(window)
            results.append(window.restrict(lo, hi))
        if results[0].signs != results[1].signs:
            raise SpectraError(
                f"Los iterados de Gamma_+ no coinciden en [{lo}, {hi}] tras {n} pasos"
            )
        return results[0].scaled(sigma)

    def c_tilde(self, n: int) -> int:
        return self.c_table.value(n)

    def c_tilde_word(self, m: int, sigma: float = 1.0) -> SignWord:
        """Palabra de período m con c_n = sigma·c̃_n para 1 <= n <= m"""
        if m < 1:
            raise ParameterOutOfRangeError(f"El período debe ser >= 1, m = {m}")
        values = self.c_table.values(m)
        signs = (int(values[-1]),) + tuple(int(v) for v in values[:-1])
        return SignWord(signs, sigma)

    def c_iterate_word(self, m: int, branch: str = "+", sigma: float = 1.0) -> SignWord:
        """sigma·c^(m,±): m aplicaciones de Gamma_+ a la palabra constante ±1"""
        if m < 0:
            raise ParameterOutOfRangeError(f"m debe ser >= 0, m = {m}")
        if branch not in ("+", "-"):
            raise SpectraError(f"Rama inválida: {branch!r}")
        word = SignWord((1 if branch == "+" else -1,))
        for _ in range(m):
            word = self.gamma_plus_word(word, 1.0).word
        return word.with_sigma(sigma)

    def m_word(self, b: SignWord, sigma: float) -> DiagWord:
        """Diagonal de M_b: diag[k] = c_{2k+1} + c_{2k+2} con c = Gamma_{sigma,+}(b), período 2N"""
        c = self.gamma_raw_word(b, sigma)
        diag = tuple(c.value(2 * k + 1) + c.value(2 * k + 2) for k in range(c.period // 2))
        return DiagWord(diag, sigma)

    def uflip_check(self, c: SeqWindow, lam: complex) -> float:
        """
        Máxima discrepancia relativa entre |û_n| y |u_{-n}|.

        u y û son las soluciones con u_0 = 0, u_1 = 1 para c y ĉ, propagadas
        hacia adelante y hacia atrás sobre los signos de la ventana.
        """
        if not c.contains(0) or not c.contains(1):
            raise WindowError("La ventana debe contener los índices 0 y 1")
        u = solve_on_window(c, lam)
        u_hat = solve_on_window(self.hat_inversion(c), lam)
        worst = 0.0
        for n in range(-c.hi, 2 - c.lo):
            if n in u_hat and -n in u:
                a, b = abs(u_hat[n]), abs(u[-n])
                worst = max(worst, abs(a - b) / max(1.0, a, b))
        return worst

    def uevenodd_check(self, n: int, lam: complex) -> Tuple[float, float]:
        """
        Discrepancias (max |u_+ - u_e|, max ||u_-| - |u_e||) en la ventana de c₊.

        c₋ = ĉ₊ y c_e coincide con c₊ salvo c_{e,1} = +1.
        """
        c_plus = self.fixed_point_window(n)
        c_minus = self.hat_inversion(c_plus)
        signs = list(c_plus.signs)
        signs[1 - c_plus.lo] = 1
        c_e = SeqWindow(c_plus.lo, tuple(signs))
        u_plus = solve_on_window(c_plus, lam)
        u_minus = solve_on_window(c_minus, lam)
        u_e = solve_on_window(c_e, lam)
        common = set(u_plus) & set(u_minus) & set(u_e)
        same = max(abs(u_plus[k] - u_e[k]) / max(1.0, abs(u_e[k])) for k in common)
        mirrored = max(
            abs(abs(u_minus[k]) - abs(u_e[k])) / max(1.0, abs(u_e[k])) for k in common
        )
        return same, mirrored


def solve_on_window(c: SeqWindow, lam: complex) -> Dict[int, complex]:
    """u_{n+1} + c_n u_{n-1} = lam·u_n con u_0 = 0, u_1 = 1, usando solo los signos"""
    u: Dict[int, complex] = {0: 0j, 1: 1 + 0j}
    for n in range(1, c.hi + 1):
        u[n + 1] = lam * u[n] - c.sign(n) * u[n - 1]
    for n in range(0, c.lo - 1, -1):
        u[n - 1] = (lam * u[n] - u[n + 1]) / c.sign(n)
    return u


def necklaces(n: int) -> Iterator[SignWord]:
    """Representantes (rotación lexicográfica mínima) de las palabras ±1 de largo n"""
    if n < 1:
        raise ParameterOutOfRangeError(f"Largo de palabra inválido: {n}")
    seen = set()
    for signs in product((-1, 1), repeat=n):
        if signs in seen:
            continue
        rotations = {signs[k:] + signs[:k] for k in range(n)}
        seen.update(rotations)
        yield SignWord(min(rotations))


def canonical_rotation(word: SignWord) -> SignWord:
    return word.canonical()


_DEFAULT = SequenceTransforms()


def gamma_plus_word(b: SignWord, sigma: float) -> GammaImage:
    """Función de conveniencia sobre la instancia por defecto"""
    return _DEFAULT.gamma_plus_word(b, sigma)


def gamma_plus_window(b: SeqWindow, sigma: float = 1.0) -> SeqWindow:
    return _DEFAULT.gamma_plus_window(b, sigma)


def hat_inversion(b: SeqWindow) -> SeqWindow:
    return _DEFAULT.hat_inversion(b)


def fixed_point_window(n: int, sigma: float = 1.0) -> SeqWindow:
    return _DEFAULT.fixed_point_window(n, sigma)


def c_tilde(n: int) -> int:
    return DEFAULT_C_TILDE.value(n)


def c_iterate_word(m: int, branch: str = "+", sigma: float = 1.0) -> SignWord:
    return _DEFAULT.c_iterate_word(m, branch, sigma)


def m_word(b: SignWord, sigma: float) -> DiagWord:
    return _DEFAULT.m_word(b, sigma)
