"""
Tests de la caché persistente de valores zeta.
Ejecutar desde la raíz: python tests/test_cache.py
"""

import sys
import os
import json
import shutil
import tempfile

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from persistencia import (
    GestorCacheZeta, EntradaCacheZeta,
    ErrorCacheCorrupta, ErrorVersionCache, NOMBRE_ARCHIVO, borrar_cache,
)
from motor import MotorZeta


def entrada_prueba(indice="2", valor="1.6449340668482264365"):
    return EntradaCacheZeta(indice=indice, variante="plain", valor=valor,
                            error="1e-15", algoritmo="holder", version=1)


def test_guardar_y_recargar():
    """Test de ida y vuelta por disco."""
    print("1. Guardar y recargar:")

    ruta = tempfile.mkdtemp(prefix="cache_zeta_")
    try:
        gestor = GestorCacheZeta(ruta)
        assert gestor.obtener("2", "plain") is None
        gestor.guardar_entrada(entrada_prueba())
        gestor.guardar_entrada(entrada_prueba("1,2", "1.2020569031595942854"))
        assert gestor.estadisticas()["pendientes"] == 2
        assert gestor.volcar() == 2
        assert gestor.volcar() == 0

        otro = GestorCacheZeta(ruta)
        recuperada = otro.obtener("1,2", "plain")
        assert recuperada == entrada_prueba("1,2", "1.2020569031595942854")
        stats = otro.estadisticas()
        assert stats["entradas"] == 2
        assert stats["por_variante"] == {"plain": 2}
        assert stats["existe"]
        print(f"   Estadísticas: {stats}")

        with open(os.path.join(ruta, NOMBRE_ARCHIVO), encoding="utf-8") as f:
            lineas = [json.loads(l) for l in f if l.strip()]
        assert lineas[0] == {"index": "2", "variant": "plain",
                             "value": "1.6449340668482264365", "error": "1e-15",
                             "algo": "holder", "version": 1}
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Ida y vuelta correcta\n")


def test_cache_corrupta_y_version():
    """Test de errores explícitos ante archivos dañados."""
    print("2. Caché corrupta o de otra versión:")

    ruta = tempfile.mkdtemp(prefix="cache_zeta_")
    archivo = os.path.join(ruta, NOMBRE_ARCHIVO)
    try:
        with open(archivo, "w", encoding="utf-8") as f:
            f.write("{esto no es json\n")
        with pytest.raises(ErrorCacheCorrupta):
            GestorCacheZeta(ruta)

        # clear funciona sin leer el archivo
        assert borrar_cache(ruta)
        assert not os.path.exists(archivo)
        assert not borrar_cache(ruta)

        datos = entrada_prueba().to_dict()
        datos["version"] = 99
        with open(archivo, "w", encoding="utf-8") as f:
            f.write(json.dumps(datos) + "\n")
        with pytest.raises(ErrorVersionCache):
            GestorCacheZeta(ruta)
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Errores explícitos\n")


def test_limpiar():
    """Test de limpieza en memoria y en disco."""
    print("3. Limpiar:")

    ruta = tempfile.mkdtemp(prefix="cache_zeta_")
    try:
        gestor = GestorCacheZeta(ruta)
        gestor.guardar_entrada(entrada_prueba())
        gestor.volcar()
        assert gestor.limpiar()
        assert gestor.estadisticas()["entradas"] == 0
        assert not gestor.limpiar()
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Limpieza correcta\n")


def test_motor_con_cache():
    """Test de que el motor reutiliza valores de la caché."""
    print("4. Motor con caché:")

    ruta = tempfile.mkdtemp(prefix="cache_zeta_")
    try:
        motor = MotorZeta(cache=GestorCacheZeta(ruta))
        calculado = motor.zeta_holder((2, 3))
        assert motor.volcar_cache() >= 1

        cache = GestorCacheZeta(ruta)
        assert cache.obtener("2,3", "plain") is not None
        otro = MotorZeta(cache=cache)
        recuperado = otro.zeta_holder((2, 3))
        # el valor vuelve idéntico, sin redondeo
        assert recuperado.valor == calculado.valor
        assert recuperado.error == calculado.error
        assert otro.volcar_cache() == 0
    finally:
        shutil.rmtree(ruta, ignore_errors=True)

    print("   ✓ Caché reutilizada\n")


def main():
    """Ejecuta todos los tests."""
    print("\n" + "="*60)
    print("  TESTS DE LA CACHÉ")
    print("="*60 + "\n")

    tests = [
        ("Guardar y recargar", test_guardar_y_recargar),
        ("Corrupta y versión", test_cache_corrupta_y_version),
        ("Limpiar", test_limpiar),
        ("Motor con caché", test_motor_con_cache),
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
