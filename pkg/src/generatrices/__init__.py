"""
Funciones generatrices de valores zeta múltiples.

Series truncadas Φ por fuerza bruta, lados de las identidades y
evaluación puntual de las formas cerradas.
"""

from .parametros import Variante, ParametrosGF, ESPECIALIZACIONES
from .raices import (
    PuntoR3, ParRaices, raices_suma_producto, raices_oz,
    raices_alfa_beta, raices_eta_xi,
)
from .funciones import GeneratricesZeta, parametro_s
from .puntuales import EvaluadorPuntual, ResultadoPuntual, ErrorPrecondicion

__all__ = [
    'Variante',
    'ParametrosGF',
    'ESPECIALIZACIONES',
    'PuntoR3',
    'ParRaices',
    'raices_suma_producto',
    'raices_oz',
    'raices_alfa_beta',
    'raices_eta_xi',
    'GeneratricesZeta',
    'parametro_s',
    'EvaluadorPuntual',
    'ResultadoPuntual',
    'ErrorPrecondicion',
]
