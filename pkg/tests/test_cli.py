import json

import pytest
from click.testing import CliRunner

from algebra.hoop_core import godel_chain
from cli import cli
from tests.conftest import heyting_no_prelineal
from utils.formato_utils import documento_hoop, escribir

KITE6 = ["godel:2", "--I", "2", "--lambda", "0", "--rho", "1"]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def kite6_json(runner, tmp_path):
    ruta = tmp_path / "kite6.json"
    resultado = runner.invoke(cli, ["kite", *KITE6, "--out", str(ruta)])
    assert resultado.exit_code == 0, resultado.output
    return ruta


def test_kite_resume_las_propiedades(runner):
    resultado = runner.invoke(cli, ["kite", *KITE6])
    assert resultado.exit_code == 0
    lineas = resultado.output.splitlines()
    for esperado in ["size: 6", "good: no", "MV: no", "components: 1", "class: ChainN1N(1)",
                     "subdirectly irreducible: yes", "BL axioms: FAILED meet-division, divisibility"]:
        assert esperado in lineas


def test_kite_sobre_hoop_trivial(runner):
    resultado = runner.invoke(cli, ["kite", "trivial", "--I", "2", "--lambda", "0", "--rho", "1"])
    assert resultado.exit_code == 0
    assert "size: 2" in resultado.output
    assert "BL axioms: passed" in resultado.output
    assert "subdirectly irreducible: n/a (trivial hoop)" in resultado.output


def test_kite_escribe_el_documento(kite6_json):
    documento = json.loads(kite6_json.read_text(encoding="utf-8"))
    assert documento["kind"] == "bl"
    assert documento["size"] == 6


def test_analyze(runner, kite6_json):
    resultado = runner.invoke(cli, ["analyze", str(kite6_json), "--filters", "--monolith", "--witness", "good"])
    assert resultado.exit_code == 0
    assert "normal filters: 3" in resultado.output
    assert "monolith: A^I (4 elements)" in resultado.output
    assert "good: no, witness x = U:e0,e0" in resultado.output


def test_analyze_testigo_conmutativo_y_dot(runner, kite6_json, tmp_path):
    ruta_dot = tmp_path / "orden.dot"
    resultado = runner.invoke(cli, ["analyze", str(kite6_json), "--witness", "comm", "--dot", str(ruta_dot)])
    assert resultado.exit_code == 0
    assert "non-commutative witness: (L:e0, U:e0,1)" in resultado.output
    assert ruta_dot.read_text(encoding="utf-8").startswith("digraph orden {")


def test_analyze_respeta_la_cota(runner, kite6_json):
    resultado = runner.invoke(cli, ["analyze", str(kite6_json), "--filters"], env={"KITEBL_ENUM_BOUND": "4"})
    assert resultado.exit_code == 3
    resultado = runner.invoke(cli, ["analyze", str(kite6_json), "--filters"], env={"KITEBL_ENUM_BOUND": "x"})
    assert resultado.exit_code == 2


def test_analyze_exige_un_documento_bl(runner, tmp_path):
    ruta = tmp_path / "g2.json"
    escribir(ruta, documento_hoop(godel_chain(2)))
    assert runner.invoke(cli, ["analyze", str(ruta)]).exit_code == 2


def test_verify(runner, tmp_path, kite6_json):
    ruta = tmp_path / "g3.json"
    escribir(ruta, documento_hoop(godel_chain(3)))
    resultado = runner.invoke(cli, ["verify", str(ruta)])
    assert resultado.exit_code == 0
    assert "passed: yes" in resultado.output
    assert "basic: yes" in resultado.output
    assert runner.invoke(cli, ["verify", str(kite6_json), "--kind", "bl"]).exit_code == 1
    assert runner.invoke(cli, ["verify", str(kite6_json), "--kind", "hoop"]).exit_code == 2


def test_verify_detecta_el_fallo_y_escribe_el_informe(runner, tmp_path):
    g2 = godel_chain(2)
    corrupto = g2.model_copy(update={"mul": ((1, 0), (0, 1))})
    ruta, ruta_informe = tmp_path / "corrupto.json", tmp_path / "informe.json"
    escribir(ruta, documento_hoop(corrupto))
    resultado = runner.invoke(cli, ["verify", str(ruta), "--all-witnesses", "--report", str(ruta_informe)])
    assert resultado.exit_code == 1
    assert "passed: no" in resultado.output
    informe = json.loads(ruta_informe.read_text(encoding="utf-8"))
    assert informe["kind"] == "report" and informe["passed"] is False


def test_verify_archivo_inexistente_o_invalido(runner, tmp_path):
    assert runner.invoke(cli, ["verify", str(tmp_path / "no.json")]).exit_code == 2
    ruta = tmp_path / "roto.json"
    ruta.write_text("{", encoding="utf-8")
    assert runner.invoke(cli, ["verify", str(ruta)]).exit_code == 2


def test_errores_semanticos_y_de_uso(runner, tmp_path):
    assert runner.invoke(cli, ["kite", "godel:2", "--I", "2", "--lambda", "0,0", "--rho", "0,1"]).exit_code == 1
    assert runner.invoke(cli, ["kite", "cantor:3", "--I", "1"]).exit_code == 2
    assert runner.invoke(cli, ["kite", "godel:2", "--I", "1", "--lambda", "3", "--rho", "0"]).exit_code == 2
    assert runner.invoke(cli, ["kite", "godel:2", "--I", "2", "--lambda", "0", "--rho", ""]).exit_code == 2
    assert runner.invoke(cli, ["kite", "godel:2", "--I", "2", "--lambda", "a"]).exit_code == 2


def test_hoop_no_basico(runner, tmp_path):
    ruta = tmp_path / "h5.json"
    escribir(ruta, documento_hoop(heyting_no_prelineal()))
    argumentos = ["kite", str(ruta), "--I", "1", "--lambda", "0", "--rho", "0"]
    assert runner.invoke(cli, argumentos).exit_code == 1
    forzado = runner.invoke(cli, [*argumentos, "--force"])
    assert "verified: no (built with --force)" in forzado.output


def test_decompose_producto(runner, tmp_path):
    resultado = runner.invoke(
        cli,
        ["decompose", "product:godel:2*godel:2", "--I", "2", "--lambda", "0", "--rho", "1", "--out-dir", str(tmp_path)],
    )
    assert resultado.exit_code == 0
    assert "hoop factors: 2" in resultado.output
    assert "factors: 2" in resultado.output
    assert "joint map injective: yes" in resultado.output
    assert (tmp_path / "factor_0.json").exists() and (tmp_path / "factor_1.json").exists()
    assert "already subdirectly irreducible" not in resultado.output


def test_decompose_de_un_kite_irreducible(runner, tmp_path):
    resultado = runner.invoke(cli, ["decompose", *KITE6, "--out-dir", str(tmp_path)])
    assert resultado.exit_code == 0
    assert "already subdirectly irreducible" in resultado.output


def test_quiet_conserva_el_codigo(runner):
    resultado = runner.invoke(cli, ["--quiet", "kite", *KITE6])
    assert resultado.exit_code == 0
    assert resultado.output == ""


def test_catalogo(runner, tmp_path):
    listado = runner.invoke(cli, ["catalog", "list"])
    assert listado.exit_code == 0
    assert "godel:2\t2" in listado.output.splitlines()
    emitido = runner.invoke(cli, ["catalog", "emit", "lukasiewicz:3"])
    assert json.loads(emitido.output)["size"] == 3
    ruta = tmp_path / "l3.json"
    assert runner.invoke(cli, ["catalog", "emit", "lukasiewicz:3", "--out", str(ruta)]).exit_code == 0
    assert ruta.exists()
    assert runner.invoke(cli, ["catalog", "emit", "cantor:2"]).exit_code == 2


def test_verify_de_un_kite_sin_parte_inferior(runner, tmp_path):
    ruta = tmp_path / "kite_j0.json"
    construido = runner.invoke(cli, ["kite", "godel:2", "--I", "1", "--J", "0", "--out", str(ruta)])
    assert construido.exit_code == 0, construido.output
    assert "BL axioms: passed" in construido.output
    resultado = runner.invoke(cli, ["verify", str(ruta), "--kind", "bl"])
    assert resultado.exit_code == 0
    assert "passed: yes" in resultado.output


def test_verify_lista_los_axiomas_de_division_del_kite(runner, kite6_json):
    resultado = runner.invoke(cli, ["verify", str(kite6_json), "--kind", "bl"])
    assert resultado.exit_code == 1
    assert "passed: no" in resultado.output
    assert "divisibility" in resultado.output
    assert "meet-division" in resultado.output


def test_analyze_de_un_elemento(runner, kite6_json):
    resultado = runner.invoke(cli, ["analyze", str(kite6_json), "--element", "U:e0,1"])
    assert resultado.exit_code == 0
    lineas = resultado.output.splitlines()
    for esperado in ["element: U:e0,1 (index 3)", "x- = L:1", "x~ = L:e0", "dimension: 1"]:
        assert esperado in lineas
    por_indice = runner.invoke(cli, ["analyze", str(kite6_json), "--element", "U#0,0"])
    assert "element: U:e0,e0 (index 2)" in por_indice.output
    assert "dimension: 2" in por_indice.output


def test_analyze_con_literal_invalido(runner, kite6_json):
    assert runner.invoke(cli, ["analyze", str(kite6_json), "--element", "U:x,1"]).exit_code == 2
