#!/usr/bin/env python3
"""
CLI para SincPro Hopping Spectra - Arquitectura limpia
"""

import argparse
import logging
import shlex
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .domain.config import BACKENDS, MODES, OVERLAYS, RunConfig
from .domain.errors import (
    ConfigurationError,
    ParameterOutOfRangeError,
    SolverFailureError,
    SpectraError,
)
from .domain.spectra import SpectrumCloud

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_SOLVER = 3

CURVE_TOL = 1e-6
INCLUSION_SLACK = 1e-9

logger = logging.getLogger(__name__)


def _overlay_list(text: str) -> tuple:
    return tuple(item.strip() for item in text.split(",") if item.strip())


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", type=float, default=0.5, help="Amplitud sigma en (0, 1] (default: 0.5)")
    common.add_argument(
        "--alpha-count", type=int, default=512, help="Puntos de la malla de alpha (default: 512)"
    )
    common.add_argument("--out-csv", help="Archivo CSV de salida")
    common.add_argument("--out-svg", help="Archivo SVG de salida")
    common.add_argument(
        "--overlay",
        type=_overlay_list,
        default=OVERLAYS,
        help="Guías separadas por comas: annulus,diamond,hole,ellipses (default: todas)",
    )
    common.add_argument("--tol", type=float, help="Tolerancia de las comprobaciones")
    common.add_argument(
        "--solver", choices=list(BACKENDS), default="qr", help="Solver de autovalores (default: qr)"
    )
    common.add_argument("--workers", type=int, default=1, help="Procesos en paralelo (default: 1)")
    common.add_argument(
        "--max-points", type=int, default=20000, help="Puntos máximos dibujados en el SVG"
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Mostrar información detallada"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="sincpro-spectra",
        description="SincPro Hopping Spectra - Espectros de operadores de salto con signos aleatorios",
        epilog="Ejemplo: sincpro-spectra pi-union --sigma 0.5 --nmax 8 --out-svg pi8.svg",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("pi-union", parents=[common], help="Unión de espectros de período <= N")
    pi.add_argument("--nmax", type=int, default=2, help="Período máximo (default: 2)")

    sample = sub.add_parser("sample", parents=[common], help="Muestras aleatorias periodizadas")
    sample.add_argument("--seed", type=int, help="Semilla (obligatoria)")
    sample.add_argument("--count", type=int, default=1000, help="Número de muestras")
    sample.add_argument("--nmax", type=int, default=100, help="N máximo (default: 100)")
    sample.add_argument("--n-min", type=int, default=1, help="N mínimo (default: 1)")
    sample.add_argument("--p-sigma", type=float, default=0.5, help="P(c_j = +sigma)")

    finite = sub.add_parser("finite", parents=[common], help="Una matriz aleatoria de tamaño N")
    finite.add_argument("--n", type=int, required=True, help="Tamaño N de la matriz")
    finite.add_argument("--seed", type=int, help="Semilla (obligatoria)")
    finite.add_argument("--p-sigma", type=float, default=0.5, help="P(c_j = +sigma)")
    shape = finite.add_mutually_exclusive_group()
    shape.add_argument("--periodic", dest="shape", action="store_const", const="periodic")
    shape.add_argument("--open", dest="shape", action="store_const", const="open")
    shape.add_argument("--pair", dest="shape", action="store_const", const="pair")
    finite.set_defaults(shape="pair")
    finite.add_argument(
        "--alpha-angle", type=float, help="Ángulo de alpha en radianes (default: 0)"
    )

    curve = sub.add_parser("curve", parents=[common], help="Curva cerrada y nube de Bloch de c^(n,±)")
    curve.add_argument("--n", type=int, default=0, help="Nivel n de la iteración")
    curve.add_argument("--branch", choices=["+", "-"], default="+", help="Rama (default: +)")
    curve.add_argument("--mode", choices=list(MODES), default="both", help="Salida a generar")

    verify = sub.add_parser("verify", parents=[common], help="Suites de verificación")
    verify.add_argument("--json", dest="out_json", help="Resumen JSON de salida")
    verify.add_argument("--r-max", type=int, default=10, help="r máximo de las identidades")
    verify.add_argument("--seed", type=int, help=argparse.SUPPRESS)
    verify.add_argument("--inject-fault", type=int, help=argparse.SUPPRESS)
    return parser


def config_from_args(args: argparse.Namespace, argv: Sequence[str]) -> RunConfig:
    tol = args.tol
    if tol is None:
        tol = CURVE_TOL if args.command == "curve" else INCLUSION_SLACK
    fields = dict(
        command=args.command,
        sigma=args.sigma,
        alpha_count=args.alpha_count,
        out_csv=args.out_csv,
        out_svg=args.out_svg,
        overlay=tuple(args.overlay),
        tol=tol,
        solver=args.solver,
        workers=args.workers,
        max_points=args.max_points,
        command_line=" ".join(["sincpro-spectra", shlex.join(list(argv))]),
    )
    for name in ("nmax", "n", "n_min", "seed", "p_sigma", "count", "branch", "mode", "shape",
                 "alpha_angle", "out_json", "r_max", "inject_fault"):
        if hasattr(args, name) and getattr(args, name) is not None:
            fields[name] = getattr(args, name)
    if args.command == "sample":
        fields.setdefault("n_min", 1)
    return RunConfig(**fields).validate()


def _report_inclusion(cloud: SpectrumCloud, config: RunConfig, shape: str = "periodic") -> bool:
    from .infrastructure.spectra import inclusion_violations

    report = inclusion_violations(cloud, config.sigma, shape=shape, slack=config.tol)
    if report.ok:
        print(f"🎉 {report.total} puntos dentro de las cotas de inclusión ({shape})")
    else:
        print(
            f"❌ Cotas violadas: anillo {report.annulus_violations}, "
            f"diamante {report.diamond_violations}, exceso máximo {report.worst_excess:.3e}"
        )
    if shape == "periodic" and config.sigma < 1.0:
        print(f"📋 Puntos en H_sigma: {report.hole_points}")
        print(f"📋 Distancia mínima a la clausura de H_sigma: {report.hole_distance:.6f}")
    return report.ok


def _write_outputs(
    cloud: SpectrumCloud,
    config: RunConfig,
    csv_path: Optional[str],
    svg_path: Optional[str],
    shape: str = "periodic",
    title: str = "",
    curves: Sequence = (),
) -> None:
    from .infrastructure.cloud_io import write_cloud
    from .infrastructure.figures import FigureRenderer

    if csv_path:
        write_cloud(cloud, Path(csv_path), config.command_line)
        print(f"📁 CSV: {csv_path}")
    if svg_path:
        clouds = [(cloud, title or config.command)] if len(cloud) else []
        FigureRenderer(config.max_points).render(
            Path(svg_path),
            config.sigma,
            clouds=clouds,
            curves=curves,
            overlays=config.overlay,
            shape=shape,
            title=title,
            command_line=config.command_line,
            seed=cloud.seed,
        )
        print(f"📁 SVG: {svg_path}")


def _suffixed(path: Optional[str], tag: str) -> Optional[str]:
    if not path:
        return None
    p = Path(path)
    return str(p.with_name(f"{p.stem}.{tag}{p.suffix}"))


def cmd_pi_union(config: RunConfig) -> int:
    from .infrastructure.spectra import SpectraService

    service = SpectraService(config.spectra_options())
    cloud = service.pi_union(config.nmax, config.sigma, config.alpha_count)
    raw = cloud.params["raw_counts"]
    dedup = cloud.params["dedup_counts"]
    print(f"📋 pi_{config.nmax}: {len(cloud)} puntos")
    for n in sorted(raw):
        print(f"  - N={n}: {raw[n]} palabras, {dedup[n]} clases por rotación")
    ok = _report_inclusion(cloud, config)
    _write_outputs(
        cloud, config, config.out_csv, config.out_svg, title=f"pi_{config.nmax}, sigma={config.sigma:g}"
    )
    return EXIT_OK if ok else EXIT_FAILED


def cmd_sample(config: RunConfig) -> int:
    from .infrastructure.spectra import SpectraService

    service = SpectraService(config.spectra_options())
    cloud = service.random_periodic_sample(
        config.count, (config.n_min, config.nmax), config.p_sigma, config.sigma, config.seed
    )
    print(f"📋 {config.count} muestras, {len(cloud)} autovalores (semilla {config.seed})")
    ok = _report_inclusion(cloud, config)
    _write_outputs(cloud, config, config.out_csv, config.out_svg, title=f"sigma={config.sigma:g}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_finite(config: RunConfig) -> int:
    from .infrastructure.spectra import SpectraService

    service = SpectraService(config.spectra_options())
    alpha = complex(np.exp(1j * (config.alpha_angle or 0.0)))
    if config.shape == "pair":
        open_cloud, periodic_cloud = service.random_finite_pair(
            config.n, config.p_sigma, config.sigma, config.seed, alpha
        )
        runs = [
            (open_cloud, "open", _suffixed(config.out_csv, "open"), _suffixed(config.out_svg, "open")),
            (
                periodic_cloud,
                "periodic",
                _suffixed(config.out_csv, "periodic"),
                _suffixed(config.out_svg, "periodic"),
            ),
        ]
    else:
        cloud = service.random_finite_sample(
            config.n, config.p_sigma, config.sigma, config.seed, config.shape == "periodic", alpha
        )
        runs = [(cloud, config.shape, config.out_csv, config.out_svg)]

    ok = True
    for cloud, shape, csv_path, svg_path in runs:
        print(f"📋 Matriz {shape} N={config.n}: {len(cloud)} autovalores")
        ok = _report_inclusion(cloud, config, shape=shape) and ok
        _write_outputs(
            cloud, config, csv_path, svg_path, shape=shape, title=f"{shape}, N={config.n}"
        )
    return EXIT_OK if ok else EXIT_FAILED


def cmd_curve(config: RunConfig) -> int:
    from .infrastructure.seqcore import c_iterate_word
    from .infrastructure.spectra import SpectraService, directed_hausdorff
    from .infrastructure.transfer import curve_residual, rho_polyline, star_distance

    n, branch, sigma = config.n, config.branch, config.sigma
    pieces: List[SpectrumCloud] = []
    curves = []
    polyline = None
    cloud = None
    if config.mode in ("closed-form", "both") and sigma < 1.0:
        polyline = rho_polyline(n, branch, sigma)
        curves.append((polyline, f"rho_{n}^{branch}"))
        pieces.append(
            SpectrumCloud.from_eigenvalues(polyline, 0, f"rho{n}{branch}", 1.0, sigma)
        )
    if config.mode in ("bloch", "both"):
        word = c_iterate_word(n, branch, sigma)
        cloud = SpectraService(config.spectra_options()).bloch_spectrum(word, config.alpha_count)
        pieces.append(cloud)

    ok = True
    if cloud is not None and polyline is not None:
        to_curve = float(np.max(curve_residual(cloud.points, n, branch, sigma)))
        to_cloud = directed_hausdorff(polyline, cloud.points)
        ok = to_curve <= config.tol
        glyph = "🎉" if ok else "❌"
        print(f"{glyph} Distancia nube -> curva: {to_curve:.3e} (tol {config.tol:.1e})")
        print(f"📋 Distancia curva -> nube: {to_cloud:.3e}")
    elif cloud is not None and sigma >= 1.0:
        worst = float(np.max(star_distance(cloud.points, n, branch)))
        ok = worst <= config.tol
        glyph = "🎉" if ok else "❌"
        print(f"{glyph} Distancia máxima a la estrella de nivel {n}: {worst:.3e}")

    combined = SpectrumCloud.concat(pieces, sigma, n=n, branch=branch, mode=config.mode)
    _write_outputs(
        cloud if cloud is not None else SpectrumCloud.empty(sigma),
        config,
        None,
        config.out_svg,
        title=f"c^({n},{branch}), sigma={sigma:g}",
        curves=curves,
    )
    if config.out_csv:
        from .infrastructure.cloud_io import write_cloud

        write_cloud(combined, Path(config.out_csv), config.command_line)
        print(f"📁 CSV: {config.out_csv}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(config: RunConfig) -> int:
    from .infrastructure.seqcore import CTildeTable
    from .infrastructure.verification import VerificationSuite, VerifyOptions

    options = VerifyOptions(r_max=config.r_max)
    if config.seed is not None:
        options = VerifyOptions(r_max=config.r_max, seed=config.seed)
    table = CTildeTable()
    if config.inject_fault is not None:
        table = CTildeTable.with_flip(config.inject_fault)
        print(f"⚠️  c̃_{config.inject_fault} invertido para inyección de fallos")

    report = VerificationSuite(options, table, config.spectra_options()).run()
    print(report.render())
    if config.out_json:
        report.write_json(Path(config.out_json))
        print(f"📁 JSON: {config.out_json}")
    if report.passed:
        print(f"🎉 {len(report.results)} comprobaciones superadas")
        return EXIT_OK
    print(f"❌ {len(report.failures())} comprobaciones fallaron")
    return EXIT_FAILED


COMMAND_HANDLERS = {
    "pi-union": cmd_pi_union,
    "sample": cmd_sample,
    "finite": cmd_finite,
    "curve": cmd_curve,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada principal para el CLI"""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configurar nivel de logging
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s - %(message)s")
    else:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s - %(message)s")

    try:
        config = config_from_args(args, argv)
        return COMMAND_HANDLERS[config.command](config)
    except (ConfigurationError, ParameterOutOfRangeError) as e:
        logger.error(str(e))
        print(f"❌ Configuración inválida: {e}")
        return EXIT_CONFIG
    except SolverFailureError as e:
        logger.error(str(e))
        print(f"❌ El solver no convergió: {e}")
        return EXIT_SOLVER
    except OSError as e:
        logger.error(str(e))
        print(f"❌ Error de E/S: {e}")
        return EXIT_CONFIG
    except SpectraError as e:
        logger.error(str(e))
        print(f"❌ {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
