"""
Series de potencias truncadas en X, Y, Z.
"""

from .serie import (
    SerieTruncada, ErrorOrdenSerie, ErrorTerminoConstante,
    sumas_potencias_newton, suma_series,
)

__all__ = [
    'SerieTruncada',
    'ErrorOrdenSerie',
    'ErrorTerminoConstante',
    'sumas_potencias_newton',
    'suma_series',
]
