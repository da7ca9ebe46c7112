"""
Tests del motor de valores zeta múltiples.
Ejecutar desde la raíz: python tests/test_zeta.py
"""

import sys
import os
from fractions import Fraction

import mpmath
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import PolinomioT
from motor import MotorZeta, ModoT, ErrorIndice, ErrorPrecision

ZETA_2 = mpmath.mpf("1.6449340668482264364724")
ZETA_3 = mpmath.mpf("1.2020569031595942853997")
ZETA_5 = mpmath.mpf("1.0369277551433699263314")
ZETA_2_2 = mpmath.mpf("0.81174242528335364363")


def cerca(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1, abs(b))


_motor = None


def motor():
    global _motor
    if _motor is None:
        _motor = MotorZeta()
    return _motor


def test_valores_conocidos():
    """Test de ζ(2), ζ(3), ζ(5) y ζ(2,2)."""
    print("1. Valores conocidos:")

    m = motor()
    z2 = m.zeta_holder((2,))
    assert cerca(z2.valor, ZETA_2)
    assert z2.error <= 1e-12
    assert z2.algoritmo == "holder"
    assert cerca(m.zeta_holder((3,)).valor, ZETA_3)
    assert cerca(m.zeta_holder((5,)).valor, ZETA_5)
    assert cerca(m.zeta_holder((2, 2)).valor, ZETA_2_2)
    print(f"   ζ(2) = {z2}")

    # Euler: ζ(1,2) = ζ(3)
    assert cerca(m.zeta_holder((1, 2)).valor, ZETA_3)

    print("   ✓ Valores correctos\n")


def test_relaciones():
    """Test de producto armónico y de ζ(2,2) = (ζ(2)² - ζ(4))/2."""
    print("2. Relaciones entre valores:")

    m = motor()
    z = lambda *k: m.zeta_holder(k).valor
    assert cerca(z(2) * z(3), z(2, 3) + z(3, 2) + z(5))
    assert cerca(z(2, 2), (z(2) ** 2 - z(4)) / 2)
    assert cerca(z(1, 1, 2), z(4))

    print("   ✓ Relaciones correctas\n")


def test_oraculo_directo():
    """Test de acuerdo entre Hölder y la suma directa."""
    print("3. Oráculo directo:")

    m = motor()
    for indice in [(2,), (3,), (2, 2), (1, 3), (2, 3)]:
        directo = m.zeta_directo(indice)
        holder = m.zeta_holder(indice)
        assert directo.algoritmo == "direct"
        assert cerca(directo.valor, holder.valor, 1e-10)
        print(f"   {indice}: directo {directo.decimal(15)} holder {holder.decimal(15)}")

    print("   ✓ Oráculo coherente\n")


def test_errores_entrada():
    """Test de índices no admisibles y eps inválidos."""
    print("4. Errores de entrada:")

    m = motor()
    with pytest.raises(ErrorIndice):
        m.zeta_holder((2, 1))
    with pytest.raises(ErrorIndice):
        m.zeta_holder(())
    with pytest.raises(ErrorIndice):
        m.zeta_directo((1,))
    with pytest.raises(ErrorPrecision):
        m.zeta_holder((2,), eps=0)
    with pytest.raises(ErrorPrecision):
        MotorZeta(eps=-1.0)

    print("   ✓ Errores detectados\n")


def test_regularizados():
    """Test de ζ^reg con T constante y simbólico."""
    print("5. Valores regularizados:")

    m = motor()
    simbolico = m.zeta_reg((2, 1), ModoT.SIMBOLICO)
    assert simbolico.variable == "T"
    assert simbolico.grado == 1
    assert cerca(simbolico.coeficiente(0), -2 * ZETA_3)
    assert cerca(simbolico.coeficiente(1), ZETA_2)

    constante = m.zeta_reg((2, 1))
    assert constante.grado == 0
    assert cerca(constante.coeficiente(0), -2 * ZETA_3)

    uno = m.zeta_reg((1,), ModoT.SIMBOLICO)
    assert uno.coeficiente(0) == 0 and uno.coeficiente(1) == 1
    assert m.zeta_reg((1,)).es_cero()

    unos = m.zeta_reg((1, 1), ModoT.SIMBOLICO)
    assert cerca(unos.coeficiente(0), -ZETA_2 / 2)
    assert cerca(unos.coeficiente(2), 0.5)
    print(f"   ζ^reg(2,1) = {simbolico}")

    print("   ✓ Regularizados correctos\n")


def test_interpolados():
    """Test de ζ^t y ζ⋆."""
    print("6. Interpolación en t:")

    m = motor()
    assert cerca(m.zeta_t((1, 2), 0), ZETA_3)
    assert cerca(m.zeta_estrella((1, 2)), 2 * ZETA_3)
    assert cerca(m.zeta_t((1, 2), Fraction(1, 3)), ZETA_3 * 4 / 3)
    assert cerca(m.zeta_estrella((2,)), ZETA_2)
    assert m.zeta_t((), Fraction(1, 2)) == 1

    t = PolinomioT.generador("t")
    polinomio = m.zeta_t((1, 2), t)
    assert isinstance(polinomio, PolinomioT)
    assert cerca(polinomio.coeficiente(0), ZETA_3)
    assert cerca(polinomio.coeficiente(1), ZETA_3)

    # ζ⋆(2,2) = ζ(2,2) + ζ(4)
    assert cerca(m.zeta_estrella((2, 2)), ZETA_2_2 + m.zeta_holder((4,)).valor)

    print("   ✓ Interpolados correctos\n")


def test_polinomiales_y_simetricos():
    """Test de ζ^t_{x,y}, ζ_S y ζ_S⋆."""
    print("7. Versiones polinomial y simétrica:")

    m = motor()
    assert m.zeta_xy((), Fraction(1, 3), 2, 5) == 1
    assert cerca(m.zeta_xy((2,), 0, 1, 0), ZETA_2)
    assert cerca(m.zeta_xy((2,), 0, 2, 3), 13 * ZETA_2)
    assert cerca(m.zeta_s((2,)), 2 * ZETA_2)
    assert cerca(m.zeta_s((1, 2)), 3 * ZETA_3)
    assert cerca(m.zeta_xy((1, 2), 0, 1, -1), m.zeta_s((1, 2)))

    polinomio = m.zeta_xy_polinomio((2,), 0)
    assert cerca(polinomio.coeficiente(2, 0), ZETA_2)
    assert cerca(polinomio.coeficiente(0, 2), ZETA_2)

    # ζ_S no depende de T
    simbolico = m.zeta_s((1, 2), ModoT.SIMBOLICO)
    assert all(abs(simbolico.coeficiente(n)) < 1e-9 for n in range(1, simbolico.grado + 1))
    estrella = m.zeta_s_estrella((1, 1, 2), ModoT.SIMBOLICO)
    assert all(abs(estrella.coeficiente(n)) < 1e-9 for n in range(1, estrella.grado + 1))

    print("   ✓ Polinomiales y simétricos correctos\n")


def test_cotas_error():
    """Test de cotas de error propagadas."""
    print("8. Cotas de error:")

    m = motor()
    assert m.cota_reg(()) == 0
    assert 0 < m.cota_reg((2, 1)) < 1e-10
    assert 0 < m.cota_t((1, 2), Fraction(1, 3)) < 1e-10
    cota = m.cota_xy((1, 2), Fraction(1, 3), 2, 3)
    assert 0 < cota < 1e-8
    print(f"   cota ζ^(1/3)_(2,3)(1,2): {mpmath.nstr(cota, 3)}")

    print("   ✓ Cotas correctas\n")


def test_precision_local():
    """Test de que cada motor trabaja con sus dígitos sin tocar mpmath.mp."""
    print("9. Precisión local:")

    dps_global = mpmath.mp.dps
    fino = MotorZeta(dps=30)
    assert mpmath.mp.dps == dps_global

    valor = fino.zeta_holder((3,), eps=1e-25).valor
    assert mpmath.mp.dps == dps_global
    with mpmath.workdps(30):
        referencia = mpmath.zeta(3)
        assert abs(valor - referencia) <= 1e-24
    print(f"   ζ(3) a 30 dígitos: {mpmath.nstr(valor, 25)}")

    print("   ✓ mpmath.mp intacto\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DEL MOTOR ZETA")
    print("="*60 + "\n")

    tests = [
        ("Valores conocidos", test_valores_conocidos),
        ("Relaciones", test_relaciones),
        ("Oráculo directo", test_oraculo_directo),
        ("Errores de entrada", test_errores_entrada),
        ("Regularizados", test_regularizados),
        ("Interpolados", test_interpolados),
        ("Polinomiales y simétricos", test_polinomiales_y_simetricos),
        ("Cotas de error", test_cotas_error),
        ("Precisión local", test_precision_local),
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
