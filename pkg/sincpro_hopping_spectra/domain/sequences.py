"""
Dominio - Tipos de secuencias de signos y contratos de sus transformaciones
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Protocol, Tuple

import numpy as np

from .errors import InvalidWordError, WindowError

SIGN_CHARS = {1: "+", -1: "-"}


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not (0.0 < sigma <= 1.0) or math.isnan(sigma):
        raise InvalidWordError(f"Amplitud sigma fuera de (0, 1]: {sigma}")
    return sigma


def _check_signs(signs: Iterable[int]) -> Tuple[int, ...]:
    checked = []
    for s in signs:
        if s not in (1, -1) or isinstance(s, bool):
            raise InvalidWordError(f"Entrada de signo inválida: {s!r} (se espera +1 o -1)")
        checked.append(int(s))
    return tuple(checked)


@dataclass(frozen=True)
class SignWord:
    """
    Palabra periódica de signos con amplitud sigma.

    Representa la secuencia N-periódica c_n = sigma * signs[n mod N], con el
    índice n=0 en la posición 0. La fase se guarda tal cual: nunca se rota
    al construir.
    """

    signs: Tuple[int, ...]
    sigma: float = 1.0

    def __post_init__(self):
        signs = _check_signs(self.signs)
        if not signs:
            raise InvalidWordError("Una palabra necesita al menos un signo")
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "sigma", _check_sigma(self.sigma))

    @classmethod
    def from_label(cls, label: str, sigma: float = 1.0) -> "SignWord":
        """Construye desde una etiqueta como '+--+'"""
        mapping = {"+": 1, "-": -1}
        try:
            return cls(tuple(mapping[ch] for ch in label), sigma)
        except KeyError as e:
            raise InvalidWordError(f"Etiqueta de palabra inválida: {label!r}") from e

    @property
    def period(self) -> int:
        return len(self.signs)

    @property
    def label(self) -> str:
        return "".join(SIGN_CHARS[s] for s in self.signs)

    def sign(self, n: int) -> int:
        return self.signs[n % self.period]

    def value(self, n: int) -> float:
        return self.sigma * self.signs[n % self.period]

    def coefficients(self) -> np.ndarray:
        """Valores c_1..c_N de un período (el orden que usan T_p y A^(N,per))"""
        n = self.period
        return np.array([self.value(k) for k in range(1, n + 1)], dtype=float)

    def sign_product(self) -> int:
        return int(np.prod(self.signs))

    def rotate(self, shift: int) -> "SignWord":
        k = shift % self.period
        return SignWord(self.signs[k:] + self.signs[:k], self.sigma)

    def repeat(self, times: int) -> "SignWord":
        return SignWord(self.signs * times, self.sigma)

    def negate(self) -> "SignWord":
        return SignWord(tuple(-s for s in self.signs), self.sigma)

    def with_sigma(self, sigma: float) -> "SignWord":
        return SignWord(self.signs, sigma)

    def minimal_period(self) -> int:
        n = self.period
        for d in range(1, n + 1):
            if n % d == 0 and all(self.signs[i] == self.signs[i % d] for i in range(n)):
                return d
        return n

    def reduced(self) -> "SignWord":
        """Palabra de período mínimo que genera la misma secuencia"""
        return SignWord(self.signs[: self.minimal_period()], self.sigma)

    def canonical(self) -> "SignWord":
        """Rotación lexicográficamente mínima (solo para deduplicar)"""
        rotations = [self.signs[k:] + self.signs[:k] for k in range(self.period)]
        return SignWord(min(rotations), self.sigma)


@dataclass(frozen=True)
class SeqWindow:
    """Ventana finita c_lo..c_hi de una secuencia bi-infinita de valores ±sigma"""

    lo: int
    signs: Tuple[int, ...]
    sigma: float = 1.0

    def __post_init__(self):
        signs = _check_signs(self.signs)
        if not signs:
            raise WindowError("La ventana debe contener al menos un índice")
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "sigma", _check_sigma(self.sigma))

    @classmethod
    def constant(cls, lo: int, hi: int, sign: int, sigma: float = 1.0) -> "SeqWindow":
        if hi < lo:
            raise WindowError(f"Ventana vacía: [{lo}, {hi}]")
        return cls(lo, (sign,) * (hi - lo + 1), sigma)

    @classmethod
    def from_word(cls, word: SignWord, lo: int, hi: int) -> "SeqWindow":
        if hi < lo:
            raise WindowError(f"Ventana vacía: [{lo}, {hi}]")
        return cls(lo, tuple(word.sign(n) for n in range(lo, hi + 1)), word.sigma)

    @property
    def hi(self) -> int:
        return self.lo + len(self.signs) - 1

    @property
    def values(self) -> List[float]:
        return [self.sigma * s for s in self.signs]

    def contains(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def sign(self, n: int) -> int:
        if not self.contains(n):
            raise WindowError(f"Índice {n} fuera de la ventana [{self.lo}, {self.hi}]")
        return self.signs[n - self.lo]

    def __getitem__(self, n: int) -> float:
        return self.sigma * self.sign(n)

    def restrict(self, lo: int, hi: int) -> "SeqWindow":
        if lo < self.lo or hi > self.hi or hi < lo:
            raise WindowError(
                f"[{lo}, {hi}] no está contenida en [{self.lo}, {self.hi}]"
            )
        return SeqWindow(lo, self.signs[lo - self.lo : hi - self.lo + 1], self.sigma)

    def scaled(self, sigma: float) -> "SeqWindow":
        return SeqWindow(self.lo, self.signs, sigma)


@dataclass(frozen=True)
class DiagWord:
    """
    Palabra periódica de la diagonal de M_b.

    diag[k] = c_{2k+1} + c_{2k+2} con c = Gamma_{sigma,+}(b). La subdiagonal es
    la constante -sigma² (bloque impar de A_c²) y la superdiagonal +1.
    """

    diag: Tuple[float, ...]
    sigma: float = 1.0
    sup: float = field(default=1.0, init=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma", _check_sigma(self.sigma))
        diag = tuple(float(d) for d in self.diag)
        if not diag:
            raise InvalidWordError("DiagWord vacía")
        allowed = (0.0, 2.0 * self.sigma)
        for d in diag:
            if not any(math.isclose(abs(d), a, abs_tol=1e-12) for a in allowed):
                raise InvalidWordError(f"Entrada diagonal {d} no está en {{0, ±2σ}}")
        object.__setattr__(self, "diag", diag)

    @property
    def sub(self) -> float:
        return -self.sigma**2

    @property
    def period(self) -> int:
        return len(self.diag)

    def repeat(self, times: int) -> "DiagWord":
        return DiagWord(self.diag * times, self.sigma)


@dataclass(frozen=True)
class GammaImage:
    """Resultado de Gamma_{sigma,+}: palabra reducida y factor de reducción"""

    word: SignWord
    raw_period: int

    @property
    def reduction_factor(self) -> int:
        return self.raw_period // self.word.period


class SequenceTransformProtocol(Protocol):
    """Contrato de las transformaciones de secuencias (Gamma, inversión, c̃)"""

    def gamma_plus_word(self, b: SignWord, sigma: float) -> GammaImage:
        """Aplica Gamma_{sigma,+} a una palabra periódica"""
        ...

    def gamma_plus_window(self, b: SeqWindow, sigma: float = 1.0) -> SeqWindow:
        """Aplica las relaciones de Gamma_+ sobre una ventana finita"""
        ...

    def hat_inversion(self, b: SeqWindow) -> SeqWindow:
        """Inversión espacial b_n -> b_{1-n}"""
        ...

    def c_tilde(self, n: int) -> int:
        """Valor c̃_n"""
        ...
