"""
Motor de valores zeta múltiples.

ESTRUCTURA:
- indices.py: Índices, estadísticas, monomios u_k, enumeración, contracciones
- particiones.py: Particiones de conjuntos y polinomios c_r(t)
- zeta.py: Evaluación de las seis variantes (Hölder, directo, regularizado)
- muestreo.py: Muestreo reproducible de palabras e índices (solo para pruebas)
- utils.py: Normalización de nombres

PATRÓN DE INYECCIÓN:
- MotorZeta recibe la caché por constructor
- obtener_motor() solo debe usarse en cli_zeta.py
"""

from .indices import (
    Indice, ExponentesU, ErrorIndice, TipoIndice,
    como_indice, estadisticas, es_admisible, monomio_u, grado_u,
    invertir, concatenar, contracciones, composiciones,
    enumerar_indices, enumerar_por_grado, parsear_indice, formatear_indice,
)

from .particiones import (
    ParticionConjunto, particiones_conjunto, numero_bell, polinomio_c,
)

from .zeta import (
    MotorZeta, ValorReal, ModoT, ErrorPrecision, con_precision,
    obtener_motor, resetear_motor,
)

from .muestreo import GestorAleatorio

from .utils import normalizar_nombre, coincidencias_prefijo

__all__ = [
    # Índices
    'Indice', 'ExponentesU', 'ErrorIndice', 'TipoIndice',
    'como_indice', 'estadisticas', 'es_admisible', 'monomio_u', 'grado_u',
    'invertir', 'concatenar', 'contracciones', 'composiciones',
    'enumerar_indices', 'enumerar_por_grado', 'parsear_indice', 'formatear_indice',
    # Particiones
    'ParticionConjunto', 'particiones_conjunto', 'numero_bell', 'polinomio_c',
    # Zeta
    'MotorZeta', 'ValorReal', 'ModoT', 'ErrorPrecision', 'con_precision',
    'obtener_motor', 'resetear_motor',
    # Muestreo
    'GestorAleatorio',
    # Utilidades
    'normalizar_nombre', 'coincidencias_prefijo',
]
