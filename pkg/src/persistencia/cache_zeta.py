"""
Caché persistente de valores zeta.

Guarda los valores calculados en un archivo JSON Lines, una entrada por
línea:
    {"index": "1,2", "variant": "plain", "value": "1.2020569...",
     "error": "1e-18", "algo": "holder", "version": 1}

El valor se guarda como cadena decimal, así que ida y vuelta son exactas.
Una versión distinta o una línea ilegible se reportan como error explícito:
la caché no se reconstruye sola.

Versión de formato: 1
"""

import json
import logging
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

NOMBRE_ARCHIVO = "valores_zeta.jsonl"


class ErrorCacheCorrupta(ValueError):
    """Una línea del archivo de caché no se puede interpretar."""


class ErrorVersionCache(ValueError):
    """El archivo de caché fue escrito con otra versión de formato."""


@dataclass
class EntradaCacheZeta:
    """
    Valor zeta almacenado.

    Attributes:
        indice: Índice en formato "k1,...,kr" ("-" para el vacío).
        variante: Etiqueta de variante (plain, star, t, ...).
        valor: Cadena decimal del valor.
        error: Cadena decimal de la cota de error.
        algoritmo: Algoritmo que produjo el valor (holder, direct).
        version: Versión de formato de la caché.
    """
    indice: str
    variante: str
    valor: str
    error: str
    algoritmo: str
    version: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Convierte a diccionario con las claves del formato en disco."""
        return {
            "index": self.indice,
            "variant": self.variante,
            "value": self.valor,
            "error": self.error,
            "algo": self.algoritmo,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, datos: Dict[str, Any]) -> "EntradaCacheZeta":
        return cls(
            indice=str(datos["index"]),
            variante=str(datos["variant"]),
            valor=str(datos["value"]),
            error=str(datos["error"]),
            algoritmo=str(datos["algo"]),
            version=int(datos["version"]),
        )


class GestorCacheZeta:
    """
    Gestiona la caché persistente de valores zeta.

    Las escrituras se acumulan en memoria y se añaden al archivo con
    volcar(). Las operaciones que modifican estado están protegidas por
    un cerrojo.
    """

    VERSION_FORMATO = 1

    def __init__(self, ruta_base: str = "./storage/cache_zeta"):
        """
        Inicializa el gestor y carga las entradas existentes.

        Args:
            ruta_base: Directorio de la caché.

        Raises:
            ErrorVersionCache: Si el archivo tiene otra versión de formato.
            ErrorCacheCorrupta: Si alguna línea no es JSON válido.
        """
        self.ruta_base = Path(ruta_base)
        self.ruta_archivo = self.ruta_base / NOMBRE_ARCHIVO
        self._entradas: Dict[tuple, EntradaCacheZeta] = {}
        self._pendientes: List[EntradaCacheZeta] = []
        self._cerrojo = threading.Lock()
        self._cargar()

    def _cargar(self) -> None:
        """Lee el archivo de caché si existe."""
        if not self.ruta_archivo.exists():
            return
        with open(self.ruta_archivo, 'r', encoding='utf-8') as f:
            for numero, linea in enumerate(f, start=1):
                linea = linea.strip()
                if not linea:
                    continue
                try:
                    datos = json.loads(linea)
                    entrada = EntradaCacheZeta.from_dict(datos)
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                    raise ErrorCacheCorrupta(
                        f"Caché corrupta en {self.ruta_archivo}:{numero}: {e}. "
                        f"Ejecuta 'cache clear' para reconstruirla."
                    ) from None
                if entrada.version != self.VERSION_FORMATO:
                    raise ErrorVersionCache(
                        f"Versión de caché {entrada.version} incompatible "
                        f"(esperada {self.VERSION_FORMATO}) en {self.ruta_archivo}. "
                        f"Ejecuta 'cache clear' para reconstruirla."
                    )
                self._entradas[(entrada.indice, entrada.variante)] = entrada
        logger.debug("cache_cargada ruta=%s entradas=%d",
                     self.ruta_archivo, len(self._entradas))

    def obtener(self, indice: str, variante: str) -> Optional[EntradaCacheZeta]:
        """
        Busca un valor.

        Returns:
            La entrada o None si no está (fallo de caché).
        """
        return self._entradas.get((indice, variante))

    def guardar_entrada(self, entrada: EntradaCacheZeta) -> None:
        """Registra una entrada; se escribe en disco al volcar()."""
        with self._cerrojo:
            self._entradas[(entrada.indice, entrada.variante)] = entrada
            self._pendientes.append(entrada)

    def volcar(self) -> int:
        """
        Añade las entradas pendientes al archivo.

        Returns:
            Número de entradas escritas.
        """
        with self._cerrojo:
            if not self._pendientes:
                return 0
            self.ruta_base.mkdir(parents=True, exist_ok=True)
            with open(self.ruta_archivo, 'a', encoding='utf-8') as f:
                for entrada in self._pendientes:
                    f.write(json.dumps(entrada.to_dict(), ensure_ascii=False) + "\n")
            escritas = len(self._pendientes)
            self._pendientes = []
        logger.debug("cache_volcada ruta=%s escritas=%d", self.ruta_archivo, escritas)
        return escritas

    def listar_entradas(self) -> List[EntradaCacheZeta]:
        return [self._entradas[clave] for clave in sorted(self._entradas)]

    def estadisticas(self) -> Dict[str, Any]:
        """Número de entradas por variante y ubicación del archivo."""
        por_variante: Dict[str, int] = {}
        for indice, variante in self._entradas:
            por_variante[variante] = por_variante.get(variante, 0) + 1
        return {
            "ruta": str(self.ruta_archivo),
            "existe": self.ruta_archivo.exists(),
            "entradas": len(self._entradas),
            "por_variante": dict(sorted(por_variante.items())),
            "pendientes": len(self._pendientes),
        }

    def limpiar(self) -> bool:
        """
        Borra la caché en memoria y en disco.

        Returns:
            True si existía un archivo y se eliminó.
        """
        with self._cerrojo:
            self._entradas = {}
            self._pendientes = []
            if self.ruta_archivo.exists():
                self.ruta_archivo.unlink()
                return True
        return False


def borrar_cache(ruta_base: str) -> bool:
    """
    Elimina el archivo de caché sin leerlo (sirve también si está corrupto).

    Returns:
        True si existía un archivo y se eliminó.
    """
    ruta_archivo = Path(ruta_base) / NOMBRE_ARCHIVO
    if ruta_archivo.exists():
        ruta_archivo.unlink()
        logger.debug("cache_borrada ruta=%s", ruta_archivo)
        return True
    return False
