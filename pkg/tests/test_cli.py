"""
Tests de la línea de comandos.
Ejecutar desde la raíz: python tests/test_cli.py
"""

import sys
import os
import io
import json
import shutil
import tempfile
from contextlib import redirect_stdout

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from cli_zeta import run, SALIDA_OK, SALIDA_FALLO, SALIDA_USO
from configuracion import obtener_configuracion
from generatrices import ErrorPrecondicion, GeneratricesZeta
from verificador import InformeVerificacion

IDENTIDADES = [
    "cor1", "cor2", "lemma4", "lemma5_antipode", "lemma6_symgene", "lemma7_symsum",
    "lq_3f2", "main", "oz_exp", "oz_gamma", "specializations", "t_independence",
]


def ejecutar(ruta_cache, *argv):
    """Ejecuta la CLI con una caché temporal y devuelve (código, stdout)."""
    salida = io.StringIO()
    with redirect_stdout(salida):
        codigo = run(["--cache", ruta_cache, *argv])
    return codigo, salida.getvalue()


def test_eval():
    """Test del comando eval en texto y JSON."""
    print("1. eval:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    try:
        codigo, salida = ejecutar(ruta, "eval", "--index", "2")
        assert codigo == SALIDA_OK
        assert salida.startswith("plain(2) = 1.644934066848")
        assert "±" in salida

        codigo, salida = ejecutar(ruta, "eval", "--index", "1,2", "--variant", "t",
                                  "--t", "1/3", "--format", "json")
        assert codigo == SALIDA_OK
        datos = json.loads(salida)
        assert datos["index"] == "1,2"
        assert datos["params"]["t"] == "1/3"
        # ζ^{1/3}(1,2) = 4/3·ζ(3)
        assert abs(float(datos["value"]) - 1.6027425375461257) < 1e-12

        codigo, salida = ejecutar(ruta, "eval", "--index", "1,2", "--variant", "t",
                                  "--symbolic-t", "--format", "json")
        assert codigo == SALIDA_OK
        assert json.loads(salida)["value"]["variable"] == "t"

        codigo, salida = ejecutar(ruta, "eval", "--index", "2,1", "--reg", "--symbolic-T",
                                  "--format", "json")
        assert codigo == SALIDA_OK
        assert json.loads(salida)["value"]["variable"] == "T"
        print(f"   ζ^reg(2,1) = {json.loads(salida)['value']}")
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ eval correcto\n")


def test_errores_uso():
    """Test de código 2 ante entradas inválidas."""
    print("2. Errores de uso:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    try:
        assert ejecutar(ruta, "eval", "--index", "2,1")[0] == SALIDA_USO
        assert ejecutar(ruta, "eval", "--index", "2,x")[0] == SALIDA_USO
        assert ejecutar(ruta, "eval", "--index", "2", "--variant", "doble")[0] == SALIDA_USO
        assert ejecutar(ruta, "eval", "--index", "2", "--eps", "0")[0] == SALIDA_USO
        assert ejecutar(ruta, "phi", "--variant", "plain", "--max-weight", "20")[0] == SALIDA_USO
        assert ejecutar(ruta, "verify", "--identity", "inexistente")[0] == SALIDA_USO
        assert ejecutar(ruta, "verify")[0] == SALIDA_USO
        assert ejecutar(ruta, "nada")[0] == SALIDA_USO
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Errores de uso detectados\n")


def test_phi_y_table():
    """Test de la tabla de coeficientes en CSV y JSON."""
    print("3. phi / table:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    try:
        codigo, salida = ejecutar(ruta, "table", "--variant", "plain", "--max-weight", "3")
        assert codigo == SALIDA_OK
        lineas = salida.strip().splitlines()
        assert lineas[0] == "i,j,k,coefficient,error_bound"
        assert any(l.startswith("0,0,1,1.644934066848") for l in lineas[1:])

        codigo, salida = ejecutar(ruta, "phi", "--variant", "ipmzv", "--t", "1/3", "--x", "2",
                                  "--y", "3", "--max-weight", "3", "--format", "json")
        assert codigo == SALIDA_OK
        datos = json.loads(salida)
        assert datos["params"] == {"variant": "ipmzv", "t": "1/3", "x": "2", "y": "3", "N": 3}
        assert datos["coefficients"]

        codigo, salida = ejecutar(ruta, "phi", "--variant", "ipmzv", "--max-weight", "3",
                                  "--all-indices", "--format", "csv")
        assert codigo == SALIDA_OK
        assert "0,0,0,1" in salida
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Tablas correctas\n")


def test_verify():
    """Test del comando verify."""
    print("4. verify:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    try:
        codigo, salida = ejecutar(ruta, "verify", "--list")
        assert codigo == SALIDA_OK
        assert "## lemma5_antipode" in salida

        codigo, salida = ejecutar(ruta, "verify", "--identity", "lemma5", "--max-weight", "4")
        assert codigo == SALIDA_OK
        informe = json.loads(salida)
        assert informe["identity"] == "lemma5_antipode"
        assert informe["pass"] is True
        assert "elapsed_ms" not in informe

        codigo, salida = ejecutar(ruta, "verify", "--identity", "main", "--max-weight", "3",
                                  "--t", "1/3", "--x", "2", "--y", "3", "--timings")
        assert codigo == SALIDA_OK
        assert "elapsed_ms" in json.loads(salida)

        # una tolerancia imposible hace fallar la verificación
        codigo, salida = ejecutar(ruta, "verify", "--identity", "oz_exp", "--max-weight", "3",
                                  "--tolerance", "1e-300")
        assert codigo == SALIDA_FALLO
        informe = json.loads(salida)
        assert informe["identity"] == "oz_exp"
        assert informe["pass"] is False

        # lo mismo con la tolerancia de la configuración
        tolerancias = obtener_configuracion()["tolerancias"]
        original = tolerancias["oz_exp"]
        tolerancias["oz_exp"] = 1e-300
        try:
            codigo, salida = ejecutar(ruta, "verify", "--identity", "oz_exp", "--max-weight", "3")
        finally:
            tolerancias["oz_exp"] = original
        assert codigo == SALIDA_FALLO
        assert InformeVerificacion.from_dict(json.loads(salida)).falla
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ verify correcto\n")


def test_cache():
    """Test de stats y clear sobre la caché."""
    print("5. cache:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    try:
        assert ejecutar(ruta, "eval", "--index", "3")[0] == SALIDA_OK
        codigo, salida = ejecutar(ruta, "cache", "stats")
        assert codigo == SALIDA_OK
        stats = json.loads(salida)
        assert stats["entradas"] >= 1

        codigo, salida = ejecutar(ruta, "cache", "clear")
        assert codigo == SALIDA_OK
        assert "eliminada" in salida
        assert json.loads(ejecutar(ruta, "cache", "stats")[1])["entradas"] == 0
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Caché gestionada\n")


def _lados_fuera_de_dominio(self, orden):
    raise ErrorPrecondicion("Γ fuera de dominio")


def test_verify_todas():
    """Test de verify --all: informe completo, código 1 y salida reproducible."""
    print("6. verify --all:")

    ruta = tempfile.mkdtemp(prefix="cli_zeta_")
    original = GeneratricesZeta.lados_cor2
    GeneratricesZeta.lados_cor2 = _lados_fuera_de_dominio
    try:
        argv = ("verify", "--all", "--max-weight", "3")
        codigo, primera = ejecutar(ruta, *argv)
        # la segunda ejecución lee los valores de la caché escrita por la primera
        codigo_repetido, segunda = ejecutar(ruta, *argv)
    finally:
        GeneratricesZeta.lados_cor2 = original
        shutil.rmtree(ruta, ignore_errors=True)

    assert codigo == SALIDA_FALLO
    assert codigo_repetido == SALIDA_FALLO
    assert primera == segunda

    datos = json.loads(primera)
    assert datos["pass"] is False
    assert [informe["identity"] for informe in datos["reports"]] == IDENTIDADES
    cor2 = next(informe for informe in datos["reports"] if informe["identity"] == "cor2")
    assert cor2["pass"] is False
    assert "Γ fuera de dominio" in cor2["note"]
    assert all("elapsed_ms" not in informe for informe in datos["reports"])

    # volver a emitir lo leído da los mismos bytes
    assert json.dumps(datos, indent=2, ensure_ascii=False, sort_keys=True) + "\n" == primera
    for informe in datos["reports"]:
        assert InformeVerificacion.from_dict(informe).to_dict() == informe

    print("   ✓ Informe completo y reproducible\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DE LA LÍNEA DE COMANDOS")
    print("="*60 + "\n")

    tests = [
        ("eval", test_eval),
        ("Errores de uso", test_errores_uso),
        ("phi / table", test_phi_y_table),
        ("verify", test_verify),
        ("cache", test_cache),
        ("verify --all", test_verify_todas),
    ]

    resultados = []
    for nombre, test_func in tests:
        try:
            test_func()
            resultados.append((nombre, True))
        except Exception as e:
            print(f"   ✗ EXCEPCIÓN: {e}\n")
            resultados.append((nombre, False))

    print("="*60)
    print("  RESUMEN")
    print("="*60)

    todos_ok = True
    for nombre, exito in resultados:
        estado = "✓" if exito else "✗"
        print(f"  {estado} {nombre}")
        if not exito:
            todos_ok = False

    print("="*60)
    if todos_ok:
        print("  ✓ TODOS LOS TESTS PASARON")
    else:
        print("  ✗ ALGUNOS TESTS FALLARON")
    print("="*60 + "\n")

    return todos_ok


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
