"""
Infraestructura - Orquestador de las suites de verificación

Reúne identidades exactas, tablas de referencia, cotas de u_e, espectros del
cuadrado, simetrías, decaimiento, curvas cerradas y el oráculo de autovalores
en una sola lista de CheckResult con resumen JSON y tabla legible.
"""

import json
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional

import numpy as np

from ..domain.config import SpectraOptions
from ..domain.sequences import SignWord
from ..domain.spectra import CheckResult
from ..resources.resource_manager import ResourceManager
from .eigen import QRSolver, match_distance, match_within, oracle_eigvals
from .polyalg import FAIL, SKIP, UVRecurrence, verify_identities
from .seqcore import CTildeTable, necklaces
from .spectra import (
    SpectraService,
    build_finite,
    build_periodic,
    closed_form_check,
    square_bound_check,
    square_spectrum_check,
    symmetry_check,
    ue_bound_check,
)
from .transfer import decay_check

DECAY_SIGMA = 0.5
DECAY_DEPTH = 3
DECAY_RADIUS = 0.8
DECAY_OUTSIDE = 1.2


@dataclass(frozen=True)
class VerifyOptions:
    """Tamaños de las suites de `verify`"""

    r_max: int = 10
    alpha_count: int = 64
    seed: int = 20240101
    ue_samples: int = 20
    ue_steps: int = 10_000
    square_max_period: int = 2
    symmetry_nmax: int = 3
    eigen_samples: int = 40
    decay_grid: int = 25


@dataclass
class SuiteReport:
    """Resultados ordenados de todas las suites"""

    results: List[CheckResult] = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed or r.skipped for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not (r.passed or r.skipped)]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "runtime_ms": round(self.runtime_ms, 3),
            "checks": [
                {
                    "check": r.check,
                    "status": r.status,
                    "max_error": r.max_error,
                    "runtime_ms": round(r.runtime_ms, 3),
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }

    def write_json(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
        return path

    def render(self) -> str:
        lines = [f"{'check':<32s} {'status':<6s} {'max_error':>12s} {'ms':>10s}"]
        for r in self.results:
            line = f"{r.check:<32s} {r.status:<6s} {r.max_error:>12.3e} {r.runtime_ms:>10.1f}"
            if r.detail and r.status != "PASS":
                line += f"  {r.detail}"
            lines.append(line)
        return "\n".join(lines)


def _timed(check: str, fn: Callable[[], tuple]) -> CheckResult:
    started = time.perf_counter()
    passed, max_error, detail = fn()
    return CheckResult(
        check=check,
        passed=bool(passed),
        max_error=float(max_error),
        detail=detail,
        runtime_ms=(time.perf_counter() - started) * 1000.0,
    )


class VerificationSuite:
    """
    Ejecuta todas las suites con una tabla c̃ compartida.

    Con una tabla alterada (inyección de fallos) las identidades exactas y las
    tablas de referencia deben fallar; el resto de suites no usa c̃.
    """

    def __init__(
        self,
        options: Optional[VerifyOptions] = None,
        c_table: Optional[CTildeTable] = None,
        spectra_options: Optional[SpectraOptions] = None,
    ):
        self.logger = logging.getLogger(__name__)
        self.options = options or VerifyOptions()
        self.c_table = c_table or CTildeTable()
        self.spectra_options = spectra_options or SpectraOptions(alpha_count=self.options.alpha_count)

    def run(self) -> SuiteReport:
        started = time.perf_counter()
        report = SuiteReport()
        suites = [
            ("identidades", self.identities),
            ("tablas", self.golden_tables),
            ("u_e", self.ue_grid),
            ("cuadrado", self.square_suite),
            ("simetría", self.symmetry),
            ("decaimiento", self.decay_grid),
            ("curvas", self.closed_forms),
            ("autovalores", self.eigen_oracle),
        ]
        for name, suite in suites:
            self.logger.info(f"Suite {name}...")
            results = suite()
            report.results.extend(results)
            bad = [r for r in results if not (r.passed or r.skipped)]
            if bad:
                self.logger.error(f"Suite {name}: {len(bad)} comprobaciones fallaron")
        report.runtime_ms = (time.perf_counter() - started) * 1000.0
        return report

    def identities(self) -> List[CheckResult]:
        identity_report = verify_identities(self.options.r_max, self.c_table)
        return [
            CheckResult(
                check=f"identity.{c.check}.r{c.r}",
                passed=c.status != FAIL,
                max_error=c.max_error,
                detail=c.detail,
                skipped=c.status == SKIP,
            )
            for c in identity_report.checks
        ]

    def golden_tables(self) -> List[CheckResult]:
        uv = UVRecurrence(self.c_table)

        def table1():
            rows = ResourceManager.load_uv_table()
            for row in rows:
                got = (self.c_table.value(row.n), uv.u(row.n), uv.v(row.n))
                expected = (row.c_tilde, row.u, row.v)
                if got != expected:
                    return False, 1.0, f"n={row.n}: u={got[1]}, v={got[2]}, c̃={got[0]}"
            return True, 0.0, f"{len(rows)} filas"

        def table2():
            traces = ResourceManager.load_trace_table()
            for n, expected in sorted(traces.items()):
                got = uv.trace_poly(n)
                if got != expected:
                    return False, 1.0, f"n={n}: esperado {expected}, obtenido {got}"
            return True, 0.0, f"{len(traces)} filas"

        return [_timed("golden.table1", table1), _timed("golden.table2", table2)]

    def ue_grid(self) -> List[CheckResult]:
        rng = np.random.default_rng(self.options.seed)
        count = self.options.ue_samples
        radius = 0.9 * np.sqrt(rng.random(count))
        lams = radius * np.exp(2j * np.pi * rng.random(count))

        def run():
            reports = ue_bound_check(lams, self.options.ue_steps, self.c_table)
            excess = max(r.max_abs - r.bound for r in reports)
            bad = [r for r in reports if not r.passed]
            detail = f"lam={bad[0].lam:.4f}" if bad else f"{len(reports)} valores de lam"
            return not bad, max(excess, 0.0), detail

        return [_timed("ue_bound.grid", run)]

    def square_suite(self) -> List[CheckResult]:
        results = []
        for sigma in (0.5, 0.9):
            for period in range(1, self.options.square_max_period + 1):
                for word in necklaces(period):
                    b = word.with_sigma(sigma**2)

                    def run(b=b, sigma=sigma):
                        r = square_spectrum_check(
                            b, sigma, self.options.alpha_count, options=self.spectra_options.solver
                        )
                        return r.passed, max(r.squared_vs_b, r.mb_vs_b), ""

                    results.append(_timed(f"square.s{sigma**2:g}.{b.label}", run))
        return results

    def symmetry(self) -> List[CheckResult]:
        def run():
            cloud = SpectraService(self.spectra_options).pi_union(
                self.options.symmetry_nmax, 0.5, self.options.alpha_count
            )
            report = symmetry_check(cloud)
            worst = max(report.distances["conj"], report.distances["rot"])
            return report.passed("conj", "rot"), worst, ""

        def single():
            word = SignWord.from_label("++-", 0.5)
            cloud = SpectraService(self.spectra_options).bloch_spectrum(word, self.options.alpha_count)
            report = symmetry_check(cloud)
            worst = max(report.distances["conj"], report.distances["neg"])
            return report.passed("conj", "neg"), worst, ""

        return [_timed("symmetry.pi_union", run), _timed("symmetry.single_word", single)]

    def decay_grid(self) -> List[CheckResult]:
        side = int(math.isqrt(self.options.decay_grid))

        def inside():
            worst = 0.0
            for r in np.linspace(0.0, DECAY_RADIUS, side):
                for t in np.linspace(0.0, 2.0 * math.pi, side, endpoint=False):
                    report = decay_check(r * np.exp(1j * t), DECAY_SIGMA, DECAY_DEPTH)
                    worst = max(worst, report.rate)
            return worst < 1.0, max(worst - 1.0, 0.0), f"tasa máxima {worst:.4f}"

        def outside():
            report = decay_check(DECAY_OUTSIDE, DECAY_SIGMA, DECAY_DEPTH)
            return report.rate > 1.0, max(1.0 - report.rate, 0.0), f"tasa {report.rate:.4f}"

        return [_timed("decay.inside", inside), _timed("decay.outside", outside)]

    def closed_forms(self) -> List[CheckResult]:
        results = []
        for n in (0, 1):
            for branch in ("+", "-"):

                def run(n=n, branch=branch):
                    r = closed_form_check(
                        n, branch, 0.5, self.options.alpha_count, options=self.spectra_options
                    )
                    return r.passed, r.cloud_to_curve, f"cobertura {r.curve_to_cloud:.2e}"

                results.append(_timed(f"closed_form.n{n}{branch}", run))
        for n in (1, 2):
            results.append(square_bound_check(n, 16, self.spectra_options))
        return results

    def eigen_oracle(self) -> List[CheckResult]:
        rng = np.random.default_rng(self.options.seed + 1)
        solver = QRSolver(self.spectra_options.solver)

        def run():
            worst = 0.0
            for k in range(self.options.eigen_samples):
                n = int(rng.integers(3, 11))
                sigma = float(rng.choice([0.5, 0.9025, 1.0]))
                c = sigma * rng.choice([-1.0, 1.0], size=n)
                if k % 2:
                    matrix = build_periodic(c, np.exp(2j * np.pi * rng.random()))
                else:
                    matrix = build_finite(c[:-1])
                got, expected = solver.eigvals(matrix), oracle_eigvals(matrix)
                worst = max(worst, match_distance(got, expected))
                if not match_within(got, expected):
                    return False, worst, f"muestra {k}, n={n}"
            return True, worst, f"{self.options.eigen_samples} matrices"

        return [_timed("eigen.oracle", run)]


def run_verification(
    r_max: int = 10, fault_index: Optional[int] = None, options: Optional[VerifyOptions] = None
) -> SuiteReport:
    """Atajo: suites por defecto, opcionalmente con c̃_{fault_index} invertido"""
    options = options or VerifyOptions(r_max=r_max)
    table = CTildeTable.with_flip(fault_index) if fault_index else CTildeTable()
    return VerificationSuite(options, table).run()
