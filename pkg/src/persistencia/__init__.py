"""
Persistencia de valores zeta.

Caché en formato JSON Lines con versión de formato explícita.
"""

from .cache_zeta import (
    GestorCacheZeta, EntradaCacheZeta,
    ErrorCacheCorrupta, ErrorVersionCache, NOMBRE_ARCHIVO, borrar_cache,
)

__all__ = [
    'GestorCacheZeta',
    'EntradaCacheZeta',
    'ErrorCacheCorrupta',
    'ErrorVersionCache',
    'NOMBRE_ARCHIVO',
    'borrar_cache',
]
