"""
Infraestructura - Polinomios u_n, v_n exactos, tabla p_{i,j} e identidades de traza y determinante
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..domain.errors import ParameterOutOfRangeError
from ..domain.polynomials import COEFFICIENT_ALERT, IntPolynomial
from .seqcore import DEFAULT_C_TILDE, CTildeTable

logger = logging.getLogger(__name__)

LAMBDA = IntPolynomial.monomial(1)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


class UVRecurrence:
    """
    u_{n+1} = lam·u_n - c̃_n·u_{n-1}, u_0 = 0, u_1 = 1; v igual con v_0 = 1, v_1 = 0.

    Las filas se calculan una vez y se reutilizan; la tabla crece bajo demanda.
    """

    def __init__(self, c_table: Optional[CTildeTable] = None):
        self.c_table = c_table or DEFAULT_C_TILDE
        self._u: List[IntPolynomial] = [IntPolynomial(), IntPolynomial.constant(1)]
        self._v: List[IntPolynomial] = [IntPolynomial.constant(1), IntPolynomial()]

    def extend(self, n: int) -> None:
        u, v = self._u, self._v
        while len(u) <= n:
            k = len(u) - 1
            c_k = self.c_table.value(k)
            u_next = u[k].shift(1) - u[k - 1] * c_k
            v_next = v[k].shift(1) - v[k - 1] * c_k
            if max(u_next.max_abs_coefficient(), v_next.max_abs_coefficient()) > COEFFICIENT_ALERT:
                logger.warning(f"Coeficiente mayor que 2^62 en la fila {k + 1}")
            u.append(u_next)
            v.append(v_next)

    def u(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ParameterOutOfRangeError(f"Índice negativo: {n}")
        self.extend(n)
        return self._u[n]

    def v(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ParameterOutOfRangeError(f"Índice negativo: {n}")
        self.extend(n)
        return self._v[n]

    def iter_uv(self, n_max: Optional[int] = None) -> Iterator[Tuple[int, IntPolynomial, IntPolynomial]]:
        """Genera (n, u_n, v_n) desde n = 0; sin n_max no se detiene"""
        n = 0
        while n_max is None or n <= n_max:
            yield n, self.u(n), self.v(n)
            n += 1

    def trace_poly(self, n: int) -> IntPolynomial:
        """tr(T_n) = v_n + u_{n+1}"""
        if n < 1:
            raise ParameterOutOfRangeError(f"trace_poly necesita n >= 1, n = {n}")
        return self.v(n) + self.u(n + 1)

    def det_poly(self, n: int) -> IntPolynomial:
        """det(T_n) = v_n·u_{n+1} - u_n·v_{n+1}"""
        if n < 1:
            raise ParameterOutOfRangeError(f"det_poly necesita n >= 1, n = {n}")
        return self.v(n) * self.u(n + 1) - self.u(n) * self.v(n + 1)


def uv_polys(
    n_max: int, c_table: Optional[CTildeTable] = None
) -> Tuple[List[IntPolynomial], List[IntPolynomial]]:
    """u_0..u_{n_max+1} y v_0..v_{n_max+1}"""
    if n_max < 1:
        raise ParameterOutOfRangeError(f"uv_polys necesita n_max >= 1, n_max = {n_max}")
    table = UVRecurrence(c_table)
    table.extend(n_max + 1)
    return [table.u(k) for k in range(n_max + 2)], [table.v(k) for k in range(n_max + 2)]


def trace_poly(n: int, c_table: Optional[CTildeTable] = None) -> IntPolynomial:
    return UVRecurrence(c_table).trace_poly(n)


def gamma_constant(i: int, c_table: Optional[CTildeTable] = None) -> int:
    """u_i(0): 0 para i par, ∏_{r=1..k} (-c̃_{2r}) para i = 2k+1"""
    if i < 1:
        raise ParameterOutOfRangeError(f"gamma_constant necesita i >= 1, i = {i}")
    if i % 2 == 0:
        return 0
    table = c_table or DEFAULT_C_TILDE
    result = 1
    for r in range(1, (i - 1) // 2 + 1):
        result *= -table.value(2 * r)
    return result


@dataclass
class PTable:
    """Tabla dispersa p_{i,j}: rows[i] = {j: signo}, u_i = Σ_j p_{i,j}·lam^(j-1)"""

    rows: List[Dict[int, int]] = field(default_factory=list)

    @property
    def i_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.rows[i].get(j, 0)

    def support(self, i: int) -> List[int]:
        return sorted(self.rows[i])

    def polynomial(self, i: int) -> IntPolynomial:
        return IntPolynomial.from_terms({j - 1: s for j, s in self.rows[i].items()})


def p_table(i_max: int, c_table: Optional[CTildeTable] = None) -> PTable:
    """
    Construye p_{i,j} solo con las reglas de soporte, sin la recurrencia de u.

    (1) p_{1,1} = 1; (2) p_{2k,2j} = p_{k,j};
    (3) p_{2k+1,2j-1} = p_{k+1,j}; (4) p_{2k+1,2j-1} = -c̃_{2k}·p_{k,j}.
    El término constante de las filas impares es gamma_{2k+1} = ∏ (-c̃_{2r}).
    """
    if i_max < 1:
        raise ParameterOutOfRangeError(f"p_table necesita i_max >= 1, i_max = {i_max}")
    table = c_table or DEFAULT_C_TILDE
    rows: List[Dict[int, int]] = [{}, {1: 1}]
    gamma = 1
    for i in range(2, i_max + 1):
        k = i // 2
        row: Dict[int, int] = {}
        if i % 2 == 0:
            for j, s in rows[k].items():
                row[2 * j] = s
        else:
            s_k = -table.value(2 * k)
            gamma *= s_k
            for j, s in rows[k + 1].items():
                if j > 1:
                    row[2 * j - 1] = s
            for j, s in rows[k].items():
                if j > 1:
                    row[2 * j - 1] = row.get(2 * j - 1, 0) + s_k * s
            row[1] = gamma
            row = {j: s for j, s in row.items() if s}
        rows.append(row)
    return PTable(rows)


@dataclass(frozen=True)
class IdentityCheck:
    """Resultado de una identidad exacta para m = 2^r"""

    r: int
    check: str
    status: str
    detail: str = ""
    max_error: float = 0.0


@dataclass
class VerificationReport:
    """Lista ordenada de comprobaciones con render de ancho fijo"""

    checks: List[IdentityCheck] = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if c.status == FAIL]

    def render(self) -> str:
        lines = []
        for c in self.checks:
            line = f"r={c.r:<3d} {c.check:<12s} {c.status}"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        return "\n".join(lines)


def _first_mismatch(got: IntPolynomial, expected: IntPolynomial) -> Tuple[str, float]:
    top = max(got.degree, expected.degree)
    worst = 0
    first = ""
    for k in range(top + 1):
        diff = got[k] - expected[k]
        if diff:
            worst = max(worst, abs(diff))
            if not first:
                first = f"lam^{k}: esperado {expected[k]}, obtenido {got[k]}"
    return first, float(worst)


def _compare(r: int, name: str, got: IntPolynomial, expected: IntPolynomial) -> IdentityCheck:
    detail, worst = _first_mismatch(got, expected)
    return IdentityCheck(r, name, FAIL if detail else PASS, detail, worst)


def _ufortau_shape(r: int, u_next: IntPolynomial) -> IdentityCheck:
    """u_{m+1} = -1 + lam^(m/2)·Σ_{s=0}^{m/4} alpha_s·lam^(2s) con alpha_s en {-1, 0, 1}"""
    m = 2**r
    if r < 2:
        return IdentityCheck(r, "ufortau", SKIP, "forma sin sentido para m = 2")
    rest = u_next + 1
    half = m // 2
    allowed = {half + 2 * s for s in range(m // 4 + 1)}
    for k, c in rest.nonzero_terms().items():
        if k not in allowed:
            return IdentityCheck(r, "ufortau", FAIL, f"término lam^{k} fuera de la forma", abs(c))
        if abs(c) > 1:
            return IdentityCheck(r, "ufortau", FAIL, f"alpha en lam^{k} vale {c}", abs(c) - 1)
    return IdentityCheck(r, "ufortau", PASS)


def verify_identities(r_max: int, c_table: Optional[CTildeTable] = None) -> VerificationReport:
    """
    Comprueba para cada r <= r_max y m = 2^r, en aritmética exacta:
    (a) tr(T_m) = lam^m - 2; (b) det(T_m) = 1 y ∏ c̃_1..c̃_m = 1;
    (c) u_m = lam^(m-1); (d) forma de u_{m+1}.
    """
    if r_max < 1:
        raise ParameterOutOfRangeError(f"verify_identities necesita r_max >= 1, r_max = {r_max}")
    started = time.perf_counter()
    table = c_table or DEFAULT_C_TILDE
    uv = UVRecurrence(table)
    uv.extend(2**r_max + 1)
    report = VerificationReport()
    one = IntPolynomial.constant(1)

    for r in range(1, r_max + 1):
        m = 2**r
        report.checks.append(
            _compare(r, "trace", uv.trace_poly(m), IntPolynomial.monomial(m) - 2)
        )
        det_check = _compare(r, "det", uv.det_poly(m), one)
        sign_product = table.product(m)
        if det_check.status == PASS and sign_product != 1:
            det_check = IdentityCheck(r, "det", FAIL, f"∏ c̃_1..c̃_{m} = {sign_product}", 2.0)
        report.checks.append(det_check)
        report.checks.append(_compare(r, "u_m", uv.u(m), IntPolynomial.monomial(m - 1)))
        report.checks.append(_ufortau_shape(r, uv.u(m + 1)))

    report.runtime_ms = (time.perf_counter() - started) * 1000.0
    failures = report.failures()
    if failures:
        logger.error(f"{len(failures)} identidades fallaron; primera en r = {failures[0].r}")
    else:
        logger.info(f"Identidades exactas verificadas hasta r = {r_max}")
    return report
