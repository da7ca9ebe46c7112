"""
Tests de índices, particiones de conjuntos y utilidades del motor.
Ejecutar desde la raíz: python tests/test_indices.py
"""

import sys
import os
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from motor import (
    Indice, ErrorIndice, ExponentesU,
    estadisticas, es_admisible, monomio_u, grado_u,
    invertir, concatenar, contracciones, composiciones,
    enumerar_indices, enumerar_por_grado, parsear_indice, formatear_indice,
    particiones_conjunto, numero_bell, polinomio_c,
    normalizar_nombre, coincidencias_prefijo,
    GestorAleatorio,
)


def test_estadisticas_indice():
    """Test de peso, profundidad y altura."""
    print("1. Estadísticas de índices:")

    indice = Indice((1, 2, 3))
    assert estadisticas(indice) == (6, 3, 2)
    assert indice.es_admisible
    assert not es_admisible((2, 1))
    assert Indice().es_admisible
    assert Indice().es_vacio
    print(f"   {indice}: peso={indice.peso}, prof={indice.profundidad}, altura={indice.altura}")

    with pytest.raises(ErrorIndice):
        Indice((2, 0))

    print("   ✓ Estadísticas correctas\n")


def test_monomio_u():
    """Test del monomio X^(wt-dep-ht)·Y^(dep-ht)·Z^ht."""
    print("2. Monomio u_k:")

    assert monomio_u((2,)).como_tupla == (0, 0, 1)
    assert monomio_u((1, 2, 3)).como_tupla == (1, 1, 2)
    assert monomio_u((1, 1)).como_tupla == (0, 2, 0)
    assert grado_u((1, 2, 3)) == 4

    exponentes = monomio_u((3, 1, 4))
    assert exponentes.a_estadisticas() == (8, 3, 2)
    assert exponentes.peso == 8
    assert (ExponentesU(1, 0, 0) + ExponentesU(0, 1, 1)).como_tupla == (1, 1, 1)

    print("   ✓ Monomios correctos\n")


def test_operaciones_indices():
    """Test de inversión, concatenación y contracciones."""
    print("3. Operaciones sobre índices:")

    assert invertir((1, 2, 3)).partes == (3, 2, 1)
    assert concatenar((1,), (2, 3)).partes == (1, 2, 3)

    resultado = sorted((k.partes, f) for k, f in contracciones((1, 2, 3)))
    assert resultado == [((1, 2, 3), 0), ((1, 5), 1), ((3, 3), 1), ((6,), 2)]
    assert [(k.partes, f) for k, f in contracciones(())] == [((), 0)]
    print(f"   contracciones(1,2,3): {resultado}")

    print("   ✓ Operaciones correctas\n")


def test_enumeracion():
    """Test de enumeración por peso y por grado."""
    print("4. Enumeración de índices:")

    assert sorted(composiciones(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    # 2^(w-1) composiciones de peso w, más el vacío
    todos = list(enumerar_indices(4))
    assert len(todos) == 1 + 1 + 2 + 4 + 8

    # admisibles de peso w: 2^(w-2) para w ≥ 2
    admisibles = [k for k in enumerar_indices(5, solo_admisibles=True) if not k.es_vacio]
    assert len(admisibles) == 1 + 2 + 4 + 8
    assert all(k.es_admisible for k in admisibles)

    for indice in enumerar_por_grado(4):
        assert grado_u(indice) <= 4
    assert Indice((1, 1, 1, 1)) in enumerar_por_grado(4)
    assert Indice((2, 2, 2, 2)) in enumerar_por_grado(4)
    assert Indice((1, 1, 1, 1, 1)) not in enumerar_por_grado(4)

    print(f"   Índices de peso ≤ 4: {len(todos)}")
    print("   ✓ Enumeración correcta\n")


def test_parseo_indices():
    """Test de lectura y escritura de índices."""
    print("5. Parseo de índices:")

    assert parsear_indice("1,2").partes == (1, 2)
    assert parsear_indice(" (2,3) ").partes == (2, 3)
    assert parsear_indice("-").es_vacio
    assert formatear_indice(()) == "-"
    assert formatear_indice((1, 2, 3)) == "1,2,3"

    for texto in ("1,a", "0,2", "2,-1"):
        with pytest.raises(ErrorIndice):
            parsear_indice(texto)

    print("   ✓ Parseo correcto\n")


def test_particiones_conjunto():
    """Test de particiones de {1..r} y números de Bell."""
    print("6. Particiones de conjuntos:")

    assert [numero_bell(r) for r in range(1, 5)] == [1, 2, 5, 15]
    for r in range(1, 6):
        particiones = particiones_conjunto(r)
        assert len(particiones) == numero_bell(r)
        assert len({tuple(p.bloques) for p in particiones}) == len(particiones)

    tres = particiones_conjunto(3)
    assert sorted(p.numero_bloques for p in tres) == [1, 2, 2, 2, 3]
    print(f"   Particiones de {{1,2,3}}: {[str(p) for p in tres]}")

    with pytest.raises(ValueError):
        particiones_conjunto(0)

    print("   ✓ Particiones correctas\n")


def test_polinomio_c():
    """Test de c_r(t) = (r-1)!·(t^r - (t-1)^r)."""
    print("7. Polinomios c_r(t):")

    assert polinomio_c(1).coefs == (Fraction(1),)
    assert polinomio_c(2).evaluar(Fraction(0)) == -1
    assert polinomio_c(2).evaluar(Fraction(1, 2)) == 0
    assert polinomio_c(3).coefs == (Fraction(2), Fraction(-6), Fraction(6))

    for r in range(1, 6):
        t = Fraction(1, 3)
        esperado = Fraction(1)
        for n in range(1, r):
            esperado *= n
        esperado *= t ** r - (t - 1) ** r
        assert polinomio_c(r).evaluar(t) == esperado

    print("   ✓ c_r correctos\n")


def test_normalizar_nombre():
    """Test de normalización y coincidencia por prefijo."""
    print("8. Nombres y prefijos:")

    assert normalizar_nombre("Lemma5 Antipode") == "lemma5_antipode"
    assert normalizar_nombre("oz-gamma") == "oz_gamma"

    candidatos = ["oz_exp", "oz_gamma", "lemma5_antipode", "lemma4"]
    assert coincidencias_prefijo("lemma5", candidatos) == ["lemma5_antipode"]
    assert coincidencias_prefijo("oz", candidatos) == ["oz_exp", "oz_gamma"]
    assert coincidencias_prefijo("lemma4", candidatos) == ["lemma4"]
    assert coincidencias_prefijo("nada", candidatos) == []

    print("   ✓ Nombres correctos\n")


def test_muestreo_reproducible():
    """Test de reproducibilidad del gestor aleatorio."""
    print("9. Muestreo con semilla:")

    a = GestorAleatorio(seed=7)
    b = GestorAleatorio(seed=7)
    indices_a = [a.indice_admisible(6) for _ in range(5)]
    indices_b = [b.indice_admisible(6) for _ in range(5)]
    assert indices_a == indices_b
    assert all(k.es_admisible and 2 <= k.peso <= 6 for k in indices_a)

    palabra = a.palabra(5, 1)
    assert 1 <= sum(palabra) <= 5
    racional = a.racional(4)
    assert abs(racional.numerator) <= 4 and 1 <= racional.denominator <= 4
    print(f"   Índices: {[str(k) for k in indices_a]}")

    print("   ✓ Muestreo reproducible\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DE ÍNDICES Y COMBINATORIA")
    print("="*60 + "\n")

    tests = [
        ("Estadísticas", test_estadisticas_indice),
        ("Monomio u", test_monomio_u),
        ("Operaciones", test_operaciones_indices),
        ("Enumeración", test_enumeracion),
        ("Parseo", test_parseo_indices),
        ("Particiones", test_particiones_conjunto),
        ("Polinomios c_r", test_polinomio_c),
        ("Nombres", test_normalizar_nombre),
        ("Muestreo", test_muestreo_reproducible),
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
