"""
Tests de la evaluación puntual de formas cerradas y de Φ por capas.
Ejecutar desde la raíz: python tests/test_puntuales.py
"""

import sys
import os
from fractions import Fraction

import mpmath
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from configuracion import cargar_configuracion
from generatrices import (
    EvaluadorPuntual, ErrorPrecondicion, PuntoR3,
    raices_suma_producto, raices_oz, raices_eta_xi,
)
from generatrices.raices import RAMA_NATURAL, RAMA_INTERCAMBIADA
from motor import MotorZeta
from verificador import EstadoInforme
from verificador.comprobaciones import comprobar_lq

_evaluador = None


def evaluador():
    global _evaluador
    if _evaluador is None:
        config = cargar_configuracion()
        config["puntual"]["peso_maximo"] = 8
        _evaluador = EvaluadorPuntual(MotorZeta(config=config), config)
    return _evaluador


def cerca(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1, abs(b))


def test_raices():
    """Test de raíces por suma y producto."""
    print("1. Raíces:")

    par = raices_suma_producto(3, 2)
    assert par.alfa == 2 and par.beta == 1
    assert par.rama == RAMA_NATURAL
    assert par.son_reales
    assert par.residuo() < mpmath.mpf("1e-18")

    cambiada = par.intercambiada()
    assert cambiada.alfa == 1 and cambiada.beta == 2
    assert cambiada.rama == RAMA_INTERCAMBIADA
    assert cambiada.intercambiada().rama == RAMA_NATURAL

    # β pequeña sin cancelación
    pequena = raices_suma_producto(1, mpmath.mpf("1e-12"))
    assert cerca(pequena.beta, mpmath.mpf("1e-12"), 1e-9)

    punto = PuntoR3.desde(("0.1", "0.2", "0.01"))
    assert cerca(raices_oz(punto).suma, mpmath.mpf("0.3"))
    assert cerca(raices_eta_xi(punto).producto, mpmath.mpf("-0.01"))
    assert not raices_oz(PuntoR3.desde(("0.1", "0.1", "0.5"))).son_reales
    print(f"   {par.to_dict()}")

    print("   ✓ Raíces correctas\n")


def test_ohno_zagier_puntual():
    """Test de Γ frente a la exponencial sumada."""
    print("2. Ohno-Zagier puntual:")

    ev = evaluador()
    punto = PuntoR3.desde(("0.1", "0.2", "0.01"))
    gamma = ev.oz_gamma(punto)
    exponencial = ev.oz_exp(punto)
    assert cerca(gamma.valor, exponencial.valor, 1e-9)
    assert gamma.notas == []
    print(f"   Γ: {mpmath.nstr(gamma.valor, 15)}  exp: {mpmath.nstr(exponencial.valor, 15)}")

    assert ev.oz_gamma(PuntoR3.desde(("0.1", "0.2", "0"))).valor == 0

    print("   ✓ Formas coherentes\n")


def test_limite_removible():
    """Test del punto XY = Z."""
    print("3. Límite removible:")

    ev = evaluador()
    punto = PuntoR3.desde(("0.1", "0.2", "0.02"))
    gamma = ev.oz_gamma(punto)
    exponencial = ev.oz_exp(punto)
    assert "limite_removible" in gamma.notas
    assert mpmath.isfinite(gamma.valor)
    assert cerca(gamma.valor, exponencial.valor, 1e-7)

    print("   ✓ Límite tomado\n")


def test_precondiciones():
    """Test de puntos fuera del dominio."""
    print("4. Precondiciones:")

    ev = evaluador()
    with pytest.raises(ErrorPrecondicion):
        ev.oz_gamma(PuntoR3.desde(("0.1", "0.1", "0.5")))
    with pytest.raises(ErrorPrecondicion):
        ev.hipergeometrica(mpmath.mpf(3), mpmath.mpf(1), mpmath.mpf(2), mpmath.mpf(2))
    with pytest.raises(ErrorPrecondicion):
        ev.suma_capas([mpmath.mpf(1), mpmath.mpf(2)])

    print("   ✓ Precondiciones detectadas\n")


def test_hipergeometrica():
    """Test de ₃F₂(a, b, 1; c, d; 1) frente a mpmath."""
    print("5. ₃F₂ en 1:")

    ev = evaluador()
    valor, terminos, cola = ev.hipergeometrica(
        mpmath.mpf("0.75"), mpmath.mpf("0.125"), mpmath.mpf(2), mpmath.mpf("2.5"))
    esperado = mpmath.hyp3f2(0.5, 0.25, 1, 2, 2.5, 1)
    assert cerca(valor, esperado, 1e-8)
    assert terminos > 10
    assert cola >= 0
    print(f"   ₃F₂ = {mpmath.nstr(valor, 15)} ({terminos} términos)")

    print("   ✓ ₃F₂ correcta\n")


def test_capas_y_cola():
    """Test de la suma por capas con cola geométrica."""
    print("6. Suma por capas:")

    ev = evaluador()
    resultado = ev.suma_capas([mpmath.mpf(1), mpmath.mpf("0.5"), mpmath.mpf("0.25")])
    assert cerca(resultado.valor, 2)
    assert cerca(resultado.cola, mpmath.mpf("0.25"))
    assert resultado.terminos == 3

    punto = PuntoR3.desde(("0.05", "0.05", "0.001"))
    fuerza_bruta = ev.phi_puntual(punto, 0, peso_maximo=8)
    gamma = ev.oz_gamma(punto)
    assert abs(fuerza_bruta.valor - gamma.valor) < 1e-9
    print(f"   Φ por capas: {mpmath.nstr(fuerza_bruta.valor, 12)}")

    print("   ✓ Capas coherentes\n")


def test_3f2_en_t_cero():
    """Test de la forma ₃F₂ en t = 0 frente a Ohno-Zagier."""
    print("7. ₃F₂ en t = 0:")

    ev = evaluador()
    punto = PuntoR3.desde(("0.1", "0.2", "0.01"))
    resultado = ev.lq_3f2(0, punto)
    assert resultado.rama == RAMA_NATURAL
    assert cerca(resultado.valor, ev.oz_gamma(punto).valor, 1e-6)

    print("   ✓ ₃F₂ coherente\n")


def test_capas_alternadas():
    """Test de la cola cuando una de cada dos capas se anula."""
    print("8. Capas alternadas:")

    ev = evaluador()
    mpf = mpmath.mpf
    capas = [mpf("0.1"), mpf("1e-33"), mpf("0.01"), mpf("1e-34"), mpf("0.001")]
    resultado = ev.suma_capas(capas)
    assert cerca(resultado.valor, mpf(1) / 9)

    # últimas capas de Φ en (-0.1, 0.1, -0.01)
    capas = [mpf("1.233e-32"), mpf("-1.0e-12"), mpf("1.252e-33"), mpf("-1.0e-14")]
    resultado = ev.suma_capas(capas)
    assert resultado.cola < 0
    assert abs(resultado.cola) < 1e-15

    with pytest.raises(ErrorPrecondicion):
        ev.suma_capas([mpf(1), mpf(0), mpf(2), mpf(0)])

    print("   ✓ Cola por paridad\n")


def test_puntos_configurados():
    """Test de Φ, ₃F₂ y ζ_S⋆ - ζ⋆ en los puntos de muestra de la configuración."""
    print("9. Puntos de muestra:")

    ev = evaluador()
    for coordenadas in [("0.1", "0.1", "0.005"), ("0.1", "-0.1", "0.01")]:
        punto = PuntoR3.desde(coordenadas)
        for t in (Fraction(0), Fraction(1, 4), Fraction(1)):
            assert mpmath.isfinite(ev.phi_puntual(punto, t).valor)
            assert mpmath.isfinite(ev.phi_puntual(punto, t, ponderada=False).valor)

            informe = comprobar_lq(ev, t, punto, 1e-4)
            assert informe.estado == EstadoInforme.PASA, str(informe)
            assert informe.ramas
            print(f"   t={t} {punto}: desviación {informe.desviaciones[0]['dev']}")

    punto = PuntoR3.desde(("0.1", "0.1", "0.01"))
    cadena = ev.cor2_cadena(punto)
    gamma = ev.cor2_gamma(punto)
    assert "limite_removible" in gamma.notas
    assert abs(cadena.valor - gamma.valor) < 1e-5
    print(f"   ζ_S⋆ - ζ⋆ en {punto}: {mpmath.nstr(cadena.valor, 12)}")

    print("   ✓ Puntos de muestra evaluados\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DE EVALUACIÓN PUNTUAL")
    print("="*60 + "\n")

    tests = [
        ("Raíces", test_raices),
        ("Ohno-Zagier puntual", test_ohno_zagier_puntual),
        ("Límite removible", test_limite_removible),
        ("Precondiciones", test_precondiciones),
        ("₃F₂", test_hipergeometrica),
        ("Capas", test_capas_y_cola),
        ("₃F₂ en t = 0", test_3f2_en_t_cero),
        ("Capas alternadas", test_capas_alternadas),
        ("Puntos de muestra", test_puntos_configurados),
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
