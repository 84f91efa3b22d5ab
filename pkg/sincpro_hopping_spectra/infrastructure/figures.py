"""
Infraestructura - Figuras SVG de nubes espectrales con guías de inclusión
"""

import logging
import math
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ..domain.config import OVERLAYS  # noqa: E402
from ..domain.operators import RegionParams  # noqa: E402
from ..domain.spectra import SpectrumCloud  # noqa: E402

logger = logging.getLogger(__name__)

HASH_SALT = "sincpro-hopping-spectra"
GUIDE_SAMPLES = 2000


def thin_indices(size: int, max_points: int) -> np.ndarray:
    """Submuestreo determinista con paso uniforme; los datos completos quedan en el CSV"""
    if size <= max_points:
        return np.arange(size)
    return np.unique(np.linspace(0, size - 1, max_points).round().astype(np.int64))


def _ellipses(sigma: float) -> Tuple[np.ndarray, np.ndarray]:
    t = np.linspace(0.0, 2.0 * math.pi, GUIDE_SAMPLES)
    a, b = 1.0 + sigma, 1.0 - sigma
    plus = a * np.cos(t) + 1j * b * np.sin(t)
    minus = b * np.cos(t) + 1j * a * np.sin(t)
    return plus, minus


def _masked(points: np.ndarray, mask: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    x = np.where(mask, points.real, np.nan)
    y = np.where(mask, points.imag, np.nan)
    return x, y


def _draw_guides(ax, sigma: float, overlays: Iterable[str], shape: str) -> None:
    overlays = set(overlays)
    params = RegionParams(sigma)
    t = np.linspace(0.0, 2.0 * math.pi, GUIDE_SAMPLES)
    circle = np.exp(1j * t)

    if "annulus" in overlays and shape != "open":
        for radius in (params.annulus_inner, params.annulus_outer):
            if radius > 0.0:
                ax.plot(radius * circle.real, radius * circle.imag, color="0.55", lw=0.6)

    if "diamond" in overlays:
        bound = 2.0 * math.sqrt(sigma) if shape == "open" else params.diamond_bound
        xs = [bound, 0.0, -bound, 0.0, bound]
        ys = [0.0, bound, 0.0, -bound, 0.0]
        ax.plot(xs, ys, color="0.35", lw=0.6, ls="--")

    plus, minus = _ellipses(sigma)
    if "ellipses" in overlays:
        ax.plot(plus.real, plus.imag, color="tab:blue", lw=0.6)
        ax.plot(minus.real, minus.imag, color="tab:blue", lw=0.6)

    if "hole" in overlays and sigma < 1.0:
        a, b = params.annulus_outer, params.annulus_inner
        inside_minus = plus.real**2 / b**2 + plus.imag**2 / a**2 <= 1.0
        inside_plus = minus.real**2 / a**2 + minus.imag**2 / b**2 <= 1.0
        for points, mask in ((plus, inside_minus), (minus, inside_plus)):
            x, y = _masked(points, mask)
            ax.plot(x, y, color="tab:red", lw=1.8)


class FigureRenderer:
    """Dibuja nubes y curvas en un SVG reproducible (sin fecha, hash fijo)"""

    def __init__(self, max_points: int = 20000):
        self.max_points = max_points

    def render(
        self,
        path: Path,
        sigma: float,
        clouds: Sequence[Tuple[SpectrumCloud, str]] = (),
        curves: Sequence[Tuple[np.ndarray, str]] = (),
        overlays: Iterable[str] = OVERLAYS,
        shape: str = "periodic",
        title: str = "",
        command_line: str = "",
        seed: Optional[int] = None,
    ) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with plt.rc_context({"svg.hashsalt": HASH_SALT, "svg.fonttype": "none"}):
            fig, ax = plt.subplots(figsize=(6.0, 6.0))
            try:
                _draw_guides(ax, sigma, overlays, shape)
                for cloud, label in clouds:
                    keep = thin_indices(len(cloud), self.max_points)
                    if keep.size < len(cloud):
                        logger.debug(f"{label}: {keep.size} de {len(cloud)} puntos en la figura")
                    z = cloud.points[keep]
                    ax.plot(z.real, z.imag, ".", ms=1.0, label=label, rasterized=False)
                for polyline, label in curves:
                    closed = np.append(polyline, polyline[:1])
                    ax.plot(closed.real, closed.imag, lw=0.9, label=label)
                ax.set_aspect("equal")
                ax.set_xlabel("Re λ")
                ax.set_ylabel("Im λ")
                if title:
                    ax.set_title(title)
                if len(clouds) + len(curves) > 1:
                    ax.legend(loc="upper right", fontsize="small")
                metadata = {"Date": None}
                if command_line:
                    metadata["Description"] = command_line
                fig.savefig(path, format="svg", metadata=metadata)
            finally:
                plt.close(fig)
        self._embed_comment(path, command_line, seed)
        logger.info(f"SVG escrito: {path}")
        return path

    @staticmethod
    def _embed_comment(path: Path, command_line: str, seed: Optional[int]) -> None:
        # "--" -> "- -"
        safe = command_line
        while "--" in safe:
            safe = safe.replace("--", "- -")
        comment = f"<!-- sincpro-spectra command: {safe} | seed: {seed} -->\n"
        text = path.read_text(encoding="utf-8")
        head, sep, rest = text.partition("\n")
        if head.startswith("<?xml"):
            text = head + sep + comment + rest
        else:
            text = comment + text
        path.write_text(text, encoding="utf-8")


def render_cloud(
    path: Path,
    cloud: SpectrumCloud,
    overlays: Iterable[str] = OVERLAYS,
    shape: str = "periodic",
    max_points: int = 20000,
    command_line: str = "",
    title: str = "",
) -> Path:
    return FigureRenderer(max_points).render(
        path,
        cloud.sigma,
        clouds=[(cloud, title or "espectro")],
        overlays=overlays,
        shape=shape,
        title=title,
        command_line=command_line,
        seed=cloud.seed,
    )
