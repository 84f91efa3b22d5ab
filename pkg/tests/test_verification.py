"""
Tests para el orquestador de verificación - Arquitectura limpia
Suites reducidas, inyección de fallos y resumen JSON
"""

import json
import shutil
import tempfile
from pathlib import Path

from sincpro_hopping_spectra.infrastructure.seqcore import CTildeTable
from sincpro_hopping_spectra.infrastructure.verification import (
    VerificationSuite,
    VerifyOptions,
    run_verification,
)

SMALL = VerifyOptions(
    r_max=3,
    alpha_count=16,
    ue_samples=4,
    ue_steps=500,
    square_max_period=1,
    symmetry_nmax=2,
    eigen_samples=6,
    decay_grid=9,
)


class TestVerificationSuite:
    """Tests para la corrida completa con tamaños pequeños"""

    @classmethod
    def setup_class(cls):
        cls.report = VerificationSuite(SMALL).run()

    def test_todas_las_suites_pasan(self):
        """Test que la tabla c̃ correcta no produce fallos"""
        assert self.report.passed, self.report.render()
        assert self.report.failures() == []

    def test_nombres_de_comprobaciones(self):
        """Test que cada suite aporta sus comprobaciones"""
        names = [r.check for r in self.report.results]

        assert "identity.trace.r1" in names
        assert "golden.table1" in names
        assert "golden.table2" in names
        assert "ue_bound.grid" in names
        assert "symmetry.pi_union" in names
        assert "decay.inside" in names
        assert "closed_form.n1-" in names
        assert "square_bound.n2" in names
        assert "eigen.oracle" in names
        assert sum(name.startswith("square.") for name in names) == 4

    def test_omitidas(self):
        """Test que la forma de u_{m+1} en r = 1 se reporta como SKIP"""
        statuses = {r.check: r.status for r in self.report.results}

        assert statuses["identity.ufortau.r1"] == "SKIP"

    def test_resumen_json(self):
        """Test campos check, status, max_error y runtime_ms"""
        temp_dir = Path(tempfile.mkdtemp())
        try:
            path = self.report.write_json(temp_dir / "verify.json")
            data = json.loads(path.read_text(encoding="utf-8"))
        finally:
            shutil.rmtree(temp_dir)

        assert data["passed"] is True
        assert len(data["checks"]) == len(self.report.results)
        assert set(data["checks"][0]) >= {"check", "status", "max_error", "runtime_ms"}

    def test_tabla_legible(self):
        """Test una línea por comprobación más la cabecera"""
        lines = self.report.render().splitlines()

        assert len(lines) == len(self.report.results) + 1
        assert lines[0].split()[:2] == ["check", "status"]


class TestFaultInjection:
    """Tests para la inversión deliberada de un valor de c̃"""

    @classmethod
    def setup_class(cls):
        cls.report = VerificationSuite(SMALL, CTildeTable.with_flip(3)).run()

    def test_la_corrida_falla(self):
        """Test que el resumen global falla"""
        assert not self.report.passed

    def test_fallan_identidades_y_tablas(self):
        """Test traza en r = 2 y tabla de u, v"""
        failed = {r.check for r in self.report.failures()}

        assert "identity.trace.r2" in failed
        assert "golden.table1" in failed
        assert "identity.trace.r1" not in failed

    def test_suites_independientes_de_c_tilde(self):
        """Test que decaimiento, curvas y autovalores siguen pasando"""
        for result in self.report.results:
            if result.check.split(".")[0] in {"decay", "closed_form", "eigen", "square_bound"}:
                assert result.passed, result.check

    def test_detalle_del_fallo(self):
        """Test que el fallo nombra el primer coeficiente distinto"""
        table1 = next(r for r in self.report.results if r.check == "golden.table1")

        assert table1.detail.startswith("n=3")


class TestRunVerification:
    """Tests para el atajo run_verification"""

    def test_sin_fallo(self):
        """Test que fault_index None usa la tabla correcta"""
        report = run_verification(options=SMALL)

        assert report.passed
