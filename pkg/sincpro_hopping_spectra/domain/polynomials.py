"""
Dominio - Polinomio denso con coeficientes enteros de precisión arbitraria
"""

from typing import Iterable, Tuple, Union

COEFFICIENT_ALERT = 2**62

Scalar = Union[int, "IntPolynomial"]


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class IntPolynomial:
    """
    Polinomio en lambda con coeficientes enteros exactos.

    coeffs[k] es el coeficiente de lambda^k. La forma normalizada no tiene
    ceros finales y el polinomio cero tiene la lista vacía.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: Tuple[int, ...] = _normalize(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("Grado negativo")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def from_terms(cls, terms: dict) -> "IntPolynomial":
        """Construye desde {grado: coeficiente}"""
        if not terms:
            return cls()
        top = max(terms)
        coeffs = [0] * (top + 1)
        for degree, value in terms.items():
            coeffs[degree] += value
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Grado; -1 para el polinomio cero"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("Exponente negativo")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: Scalar) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b) :])

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial.constant(other) - self

    def __mul__(self, other: Scalar) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        right = [(j, y) for j, y in enumerate(other.coeffs) if y]
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in right:
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, by: int) -> "IntPolynomial":
        """Multiplica por lambda^by"""
        if by < 0:
            raise ValueError("Desplazamiento negativo")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * by + self.coeffs)

    def eval_at(self, lam: complex) -> complex:
        """Evaluación de Horner en dobles complejos"""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def compose_square(self) -> "IntPolynomial":
        """p(lambda²)"""
        if self.is_zero():
            return self
        out = [0] * (2 * len(self.coeffs) - 1)
        out[::2] = self.coeffs
        return IntPolynomial(out)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def max_abs_coefficient(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def nonzero_terms(self) -> dict:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
