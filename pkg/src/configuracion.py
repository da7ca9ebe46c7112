"""
Configuración del proyecto y registro de diagnósticos.

Lee config/proyecto.json, lo combina con los valores por defecto y
expone una instancia global. La variable de entorno MZV_CACHE_DIR tiene
prioridad sobre la ruta de caché configurada.

Uso:
    from configuracion import obtener_configuracion, configurar_registro
    config = obtener_configuracion()
    configurar_registro(verbose=True)
"""

import copy
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

VARIABLE_CACHE = "MZV_CACHE_DIR"


def _encontrar_raiz_proyecto() -> Path:
    """
    Encuentra el directorio raíz del proyecto.

    Busca hacia arriba desde este archivo hasta encontrar 'config/proyecto.json'.
    """
    directorio = Path(__file__).resolve().parent
    for _ in range(5):
        if (directorio / "config" / "proyecto.json").exists():
            return directorio
        directorio = directorio.parent
    return Path.cwd()


RAIZ_PROYECTO = _encontrar_raiz_proyecto()
RUTA_CONFIG = RAIZ_PROYECTO / "config" / "proyecto.json"


# Valores usados cuando el archivo falta o no define una clave
CONFIG_POR_DEFECTO: Dict[str, Any] = {
    "version": "1.0.0",
    "rutas": {"cache": "./storage/cache_zeta"},
    "precision": {
        "dps": 20,
        "eps_profundidad_baja": 1e-12,
        "eps_general": 1e-10,
        "eps_verificacion": 1e-15,
        "truncacion_directa": 4000,
    },
    "persistencia": {"version_formato": 1, "formato_informe": 1, "indentacion": 2},
    "tolerancias": {},
    "ordenes": {},
    "rejillas": {},
    "puntual": {
        "peso_maximo": 14,
        "eps_hipergeometrica": 1e-9,
        "max_terminos": 10_000_000,
    },
    "debug": {"modo_verbose": False},
}


class ErrorParametros(ValueError):
    """Parámetro de configuración o de línea de comandos inválido."""


# =============================================================================
# CARGA
# =============================================================================

def _combinar(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    """Combina diccionarios recursivamente; extra tiene prioridad."""
    resultado = copy.deepcopy(base)
    for clave, valor in extra.items():
        if isinstance(valor, dict) and isinstance(resultado.get(clave), dict):
            resultado[clave] = _combinar(resultado[clave], valor)
        else:
            resultado[clave] = valor
    return resultado


def cargar_configuracion(ruta: Optional[Path] = None) -> Dict[str, Any]:
    """
    Carga la configuración desde un archivo JSON.

    Args:
        ruta: Archivo a leer; por defecto config/proyecto.json.

    Returns:
        Configuración completa (valores por defecto + archivo).
    """
    ruta = Path(ruta) if ruta else RUTA_CONFIG
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            datos = json.load(f)
    except FileNotFoundError:
        datos = {}
    return _combinar(CONFIG_POR_DEFECTO, datos)


_configuracion: Optional[Dict[str, Any]] = None


def obtener_configuracion() -> Dict[str, Any]:
    """Obtiene o crea la configuración global."""
    global _configuracion
    if _configuracion is None:
        _configuracion = cargar_configuracion()
    return _configuracion


def ruta_cache(config: Optional[Dict[str, Any]] = None,
               explicita: Optional[str] = None) -> Path:
    """
    Directorio de la caché de valores.

    Prioridad: ruta explícita, variable MZV_CACHE_DIR, configuración.
    Las rutas relativas de la configuración se resuelven desde la raíz.
    """
    if explicita:
        return Path(explicita)
    entorno = os.environ.get(VARIABLE_CACHE)
    if entorno:
        return Path(entorno)
    config = config or obtener_configuracion()
    ruta = Path(config["rutas"]["cache"])
    if not ruta.is_absolute():
        ruta = RAIZ_PROYECTO / ruta
    return ruta


def tolerancia(nombre: str, config: Optional[Dict[str, Any]] = None) -> float:
    config = config or obtener_configuracion()
    return float(config["tolerancias"].get(nombre, 1e-8))


def orden(nombre: str, config: Optional[Dict[str, Any]] = None,
          por_defecto: int = 6) -> int:
    config = config or obtener_configuracion()
    return int(config["ordenes"].get(nombre, por_defecto))


def rejilla(nombre: str, config: Optional[Dict[str, Any]] = None,
            por_defecto: Any = None) -> Any:
    config = config or obtener_configuracion()
    return config["rejillas"].get(nombre, por_defecto)


# =============================================================================
# RACIONALES
# =============================================================================

def parsear_racional(texto: Any) -> Fraction:
    """
    Lee un racional exacto escrito como "p/q", entero o decimal.

    Raises:
        ErrorParametros: Si el texto no representa un racional.
    """
    if isinstance(texto, Fraction):
        return texto
    if isinstance(texto, int):
        return Fraction(texto)
    try:
        return Fraction(str(texto).strip())
    except (ValueError, ZeroDivisionError):
        raise ErrorParametros(
            f"Racional inválido: '{texto}'. Formato esperado: p/q"
        ) from None


def formatear_racional(valor: Fraction) -> str:
    valor = Fraction(valor)
    if valor.denominator == 1:
        return str(valor.numerator)
    return f"{valor.numerator}/{valor.denominator}"


# =============================================================================
# REGISTRO DE DIAGNÓSTICOS
# =============================================================================

FORMATO_REGISTRO = "nivel=%(levelname)s modulo=%(name)s mensaje=%(message)s"


def configurar_registro(verbose: bool = False) -> None:
    """
    Instala un único manejador en stderr con formato clave=valor.

    Args:
        verbose: Si True (o si la configuración activa modo_verbose),
            nivel DEBUG; si no, INFO.
    """
    config = obtener_configuracion()
    if config["debug"].get("modo_verbose"):
        verbose = True

    raiz = logging.getLogger()
    for manejador in list(raiz.handlers):
        if getattr(manejador, "_mzv", False):
            raiz.removeHandler(manejador)

    manejador = logging.StreamHandler(sys.stderr)
    manejador.setFormatter(logging.Formatter(FORMATO_REGISTRO))
    manejador._mzv = True
    raiz.addHandler(manejador)
    raiz.setLevel(logging.DEBUG if verbose else logging.INFO)
