"""
Tests de polinomios y del álgebra armónica.
Ejecutar desde la raíz: python tests/test_algebra.py
"""

import sys
import os
from fractions import Fraction

import mpmath
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import (
    PolinomioT, PolinomioXY, a_mpf, es_cero, norma, dividir,
    ElementoH, PolinomioReg,
    producto_palabras, producto_armonico,
    regularizar, regularizar_elemento, evaluar_elemento, evaluar_reg,
)
from motor import GestorAleatorio


def test_polinomio_t_aritmetica():
    """Test de suma, producto y evaluación de polinomios en t."""
    print("1. Aritmética de PolinomioT:")

    t = PolinomioT.generador("t")
    p = (t + 1) * (t - 1)
    assert p.coefs == (-1, 0, 1)
    assert p.grado == 2
    assert p.evaluar(Fraction(1, 2)) == Fraction(-3, 4)
    assert (t ** 3).coefs == (0, 0, 0, 1)
    assert (2 - t).coefs == (2, -1)
    assert (3 * t).coefs == (0, 3)
    assert (t - t).es_cero()
    assert PolinomioT([0, 0]).grado == -1
    print(f"   (t+1)(t-1) = {p}")

    with pytest.raises(ValueError):
        t ** -1

    print("   ✓ Aritmética correcta\n")


def test_polinomio_t_mpf():
    """Test de mezcla con mpf sin pasar por float."""
    print("2. PolinomioT con coeficientes mpf:")

    t = PolinomioT.generador("t")
    z2 = mpmath.zeta(2)
    p = z2 * t + z2
    assert p.coeficiente(1) == z2
    assert abs(p.evaluar(1) - 2 * z2) < mpmath.mpf("1e-18")
    assert (p / 2).coeficiente(0) == z2 / 2
    assert norma(p) == z2

    exacto = PolinomioT([Fraction(1, 3), Fraction(2, 3)])
    convertido = a_mpf(exacto)
    assert isinstance(convertido.coeficiente(0), mpmath.mpf)
    assert dividir(1, 3) == Fraction(1, 3)

    print("   ✓ Coeficientes mpf correctos\n")


def test_polinomio_xy():
    """Test de polinomios en (x, y)."""
    print("3. PolinomioXY:")

    x = PolinomioXY.monomio(1, 0)
    y = PolinomioXY.monomio(0, 1)
    p = (x + y) * (x - y)
    assert p.coeficiente(2, 0) == 1
    assert p.coeficiente(0, 2) == -1
    assert p.coeficiente(1, 1) == 0
    assert p.evaluar(3, 2) == 5
    assert (p - p).es_cero()
    assert es_cero(PolinomioXY())

    print("   ✓ PolinomioXY correcto\n")


def test_producto_armonico():
    """Test del producto armónico de palabras."""
    print("4. Producto armónico:")

    z1z1 = producto_palabras((1,), (1,))
    assert z1z1.coeficiente((1, 1)) == 2
    assert z1z1.coeficiente((2,)) == 1
    assert len(z1z1) == 2

    z2z3 = producto_palabras((2,), (3,))
    assert z2z3 == ElementoH({(2, 3): 1, (3, 2): 1, (5,): 1})

    a = ElementoH.palabra((2,)) + ElementoH.palabra((1, 2), 3)
    b = ElementoH.palabra((3,))
    assert producto_armonico(a, b) == producto_armonico(b, a)
    assert (a * ElementoH.unidad()) == a
    print(f"   z2 ∗ z3 = {z2z3!r}")

    print("   ✓ Producto armónico correcto\n")


def test_propiedades_aleatorias():
    """Test de conmutatividad y asociatividad sobre palabras aleatorias."""
    print("5. Propiedades con muestras aleatorias:")

    gestor = GestorAleatorio(seed=2024)
    for _ in range(8):
        a = ElementoH.palabra(gestor.palabra(6), gestor.racional())
        b = ElementoH.palabra(gestor.palabra(6), gestor.racional())
        c = ElementoH.palabra(gestor.palabra(6))
        assert producto_armonico(a, b) == producto_armonico(b, a)
        assert producto_armonico(producto_armonico(a, b), c) == producto_armonico(a, producto_armonico(b, c))
        assert producto_armonico(a, b + c) == producto_armonico(a, b) + producto_armonico(a, c)

    print("   ✓ Propiedades verificadas\n")


def test_regularizacion():
    """Test de la regularización armónica."""
    print("6. Regularización:")

    assert regularizar((2,)) == PolinomioReg([ElementoH.palabra((2,))])
    assert regularizar((1,)) == PolinomioReg([ElementoH(), ElementoH.unidad()])

    reg_11 = regularizar((1, 1))
    assert reg_11.coeficiente(0) == ElementoH.palabra((2,), Fraction(-1, 2))
    assert reg_11.coeficiente(1).es_cero()
    assert reg_11.coeficiente(2) == ElementoH.unidad().escalar(Fraction(1, 2))

    reg_21 = regularizar((2, 1))
    assert reg_21.coeficiente(1) == ElementoH.palabra((2,))
    assert reg_21.coeficiente(0) == ElementoH({(1, 2): -1, (3,): -1})

    # la regularización es un morfismo para el producto armónico
    producto = regularizar_elemento(producto_palabras((1,), (2,)))
    assert producto == regularizar((1,)) * regularizar((2,))
    for c in producto.coeficientes:
        assert c.es_admisible()

    print(f"   reg(z2z1) = {reg_21!r}")
    print("   ✓ Regularización correcta\n")


def test_evaluacion_regularizada():
    """Test de evaluación con un evaluador de palabras."""
    print("7. Evaluación regularizada:")

    valores = {(): mpmath.mpf(1), (2,): mpmath.zeta(2), (3,): mpmath.zeta(3),
               (1, 2): mpmath.zeta(3)}
    evaluador = valores.__getitem__

    elemento = ElementoH.palabra((2,), 2) - ElementoH.palabra((3,))
    assert abs(evaluar_elemento(elemento, evaluador)
               - (2 * mpmath.zeta(2) - mpmath.zeta(3))) < mpmath.mpf("1e-18")

    constante = evaluar_reg(regularizar((2, 1)), evaluador)
    assert abs(constante + 2 * mpmath.zeta(3)) < mpmath.mpf("1e-18")

    simbolico = evaluar_reg(regularizar((2, 1)), evaluador, simbolico=True)
    assert simbolico.variable == "T"
    assert simbolico.coeficiente(1) == mpmath.zeta(2)
    print(f"   ζ^reg(2,1) = {simbolico}")

    print("   ✓ Evaluación correcta\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DEL ÁLGEBRA")
    print("="*60 + "\n")

    tests = [
        ("PolinomioT", test_polinomio_t_aritmetica),
        ("PolinomioT mpf", test_polinomio_t_mpf),
        ("PolinomioXY", test_polinomio_xy),
        ("Producto armónico", test_producto_armonico),
        ("Propiedades aleatorias", test_propiedades_aleatorias),
        ("Regularización", test_regularizacion),
        ("Evaluación", test_evaluacion_regularizada),
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
