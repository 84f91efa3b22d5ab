"""
Infraestructura - Escritura y lectura de nubes espectrales en CSV
"""

import csv
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from .. import __version__
from ..domain.errors import SpectraError
from ..domain.spectra import SpectrumCloud

logger = logging.getLogger(__name__)

COLUMNS = ("re", "im", "N", "word_id", "alpha_re", "alpha_im")
FLOAT_FORMAT = ".17g"


def _fmt(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def header_lines(cloud: SpectrumCloud, command_line: str = "") -> List[str]:
    """Cabecera '#': versión, comando, semilla, sigma y parámetros en JSON ordenado"""
    lines = [
        f"# sincpro-hopping-spectra {__version__}",
        f"# command: {command_line}",
        f"# seed: {'' if cloud.seed is None else cloud.seed}",
        f"# sigma: {_fmt(cloud.sigma)}",
        f"# points: {len(cloud)}",
        f"# params: {json.dumps(cloud.params, sort_keys=True, default=str)}",
    ]
    return lines


class CloudWriter:
    """Escribe una nube como CSV con una fila por punto"""

    def write(self, cloud: SpectrumCloud, path: Path, command_line: str = "") -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="") as f:
                for line in header_lines(cloud, command_line):
                    f.write(line + "\n")
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(COLUMNS)
                for z, n, word_id, alpha in zip(
                    cloud.points, cloud.n_sizes, cloud.word_ids, cloud.alphas
                ):
                    writer.writerow(
                        [_fmt(z.real), _fmt(z.imag), int(n), word_id, _fmt(alpha.real), _fmt(alpha.imag)]
                    )
        except OSError as e:
            logger.error(f"Error escribiendo {path}: {e}")
            raise
        logger.info(f"CSV escrito: {path} ({len(cloud)} puntos)")
        return path


class CloudReader:
    """Lee el CSV de CloudWriter de vuelta a una SpectrumCloud"""

    def read(self, path: Path) -> SpectrumCloud:
        path = Path(path)
        meta: Dict[str, str] = {}
        rows: List[List[str]] = []
        with open(path, "r", encoding="utf-8", newline="") as f:
            data_lines = []
            for line in f:
                if line.startswith("#"):
                    key, _, value = line[1:].strip().partition(":")
                    meta[key.strip()] = value.strip()
                else:
                    data_lines.append(line)
        reader = csv.reader(data_lines)
        header = next(reader, None)
        if header is None or tuple(header) != COLUMNS:
            raise SpectraError(f"Cabecera CSV inesperada en {path}: {header}")
        rows = [row for row in reader if row]

        if "sigma" not in meta:
            raise SpectraError(f"Falta la línea '# sigma' en {path}")
        seed: Optional[int] = int(meta["seed"]) if meta.get("seed") else None
        params = json.loads(meta["params"]) if meta.get("params") else {}
        return SpectrumCloud(
            points=np.array([complex(float(r[0]), float(r[1])) for r in rows], dtype=complex),
            n_sizes=np.array([int(r[2]) for r in rows], dtype=np.int64),
            word_ids=[r[3] for r in rows],
            alphas=np.array([complex(float(r[4]), float(r[5])) for r in rows], dtype=complex),
            sigma=float(meta["sigma"]),
            seed=seed,
            params=params,
        )


def write_cloud(cloud: SpectrumCloud, path: Path, command_line: str = "") -> Path:
    return CloudWriter().write(cloud, path, command_line)


def read_cloud(path: Path) -> SpectrumCloud:
    return CloudReader().read(path)
