"""
Gestión de recursos: tablas de referencia exactas.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

from ..domain.errors import SpectraError
from ..domain.polynomials import IntPolynomial
from . import GOLDEN_DIR, RESOURCES_DIR


@dataclass(frozen=True)
class GoldenRow:
    """Fila de la tabla de c̃_n, u_n y v_n"""

    n: int
    c_tilde: int
    u: IntPolynomial
    v: IntPolynomial


def parse_polynomial(text: str) -> IntPolynomial:
    """'4:1 2:1 0:-1' -> lam^4 + lam^2 - 1; '-' es el polinomio cero"""
    text = text.strip()
    if text == "-":
        return IntPolynomial()
    terms: Dict[int, int] = {}
    for token in text.split():
        degree, _, coefficient = token.partition(":")
        try:
            terms[int(degree)] = terms.get(int(degree), 0) + int(coefficient)
        except ValueError as e:
            raise SpectraError(f"Término de polinomio inválido: {token!r}") from e
    return IntPolynomial.from_terms(terms)


class ResourceManager:
    """Gestiona los recursos del paquete."""

    @staticmethod
    def _read_rows(name: str) -> List[List[str]]:
        table_file = GOLDEN_DIR / f"{name}.txt"

        if not table_file.exists():
            raise FileNotFoundError(f"Tabla '{name}' no encontrada")

        rows = []
        with open(table_file, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                # Ignorar líneas vacías y comentarios
                if line and not line.startswith("#"):
                    rows.append([field.strip() for field in line.split("|")])

        return rows

    @staticmethod
    def load_uv_table() -> List[GoldenRow]:
        """
        Carga la tabla de c̃_n, u_n y v_n.

        Returns:
            Filas ordenadas por n
        """
        rows = []
        for fields in ResourceManager._read_rows("table1"):
            if len(fields) != 4:
                raise SpectraError(f"Fila inválida en table1: {fields}")
            n, c_tilde, u, v = fields
            rows.append(GoldenRow(int(n), int(c_tilde), parse_polynomial(u), parse_polynomial(v)))
        return sorted(rows, key=lambda r: r.n)

    @staticmethod
    def load_trace_table() -> Dict[int, IntPolynomial]:
        """
        Carga la tabla de trazas tr(T_n).

        Returns:
            Diccionario n -> polinomio
        """
        table = {}
        for fields in ResourceManager._read_rows("table2"):
            if len(fields) != 2:
                raise SpectraError(f"Fila inválida en table2: {fields}")
            table[int(fields[0])] = parse_polynomial(fields[1])
        return table

    @staticmethod
    def list_available_tables() -> List[str]:
        return sorted(p.stem for p in GOLDEN_DIR.glob("*.txt"))

    @staticmethod
    def get_resource_path(resource_path: str) -> Path:
        """
        Obtiene la ruta absoluta de un recurso.

        Args:
            resource_path: Ruta relativa del recurso desde RESOURCES_DIR

        Returns:
            Ruta absoluta del recurso
        """
        return RESOURCES_DIR / resource_path


def load_uv_table() -> List[GoldenRow]:
    """Función de conveniencia para cargar la tabla de u_n y v_n"""
    return ResourceManager.load_uv_table()


def load_trace_table() -> Dict[int, IntPolynomial]:
    """Función de conveniencia para cargar la tabla de trazas"""
    return ResourceManager.load_trace_table()
