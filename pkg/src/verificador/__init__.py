"""
Verificador de identidades.

Las identidades se registran automáticamente al importar sus módulos.

ESTRUCTURA:
- informe.py: Informes de verificación y su formato JSON
- identidad_base.py: Interfaz común de las identidades
- registro.py: Registro global, resolución por prefijo y ejecución
- comprobaciones.py: Contexto y comprobaciones por caso
- identidades.py: Las identidades registradas
"""

# Importar las identidades para que se registren
from . import identidades

from .comprobaciones import ContextoVerificacion
from .identidad_base import Identidad
from .informe import (
    EstadoInforme, InformeVerificacion, FORMATO_INFORME,
    combinar_informes, estado_por_desviacion, formatear_numero,
)
from .registro import (
    ErrorIdentidadDesconocida, RegistroIdentidades,
    obtener_registro, registrar_identidad,
)


def listar_identidades():
    """Lista todas las identidades registradas."""
    return obtener_registro().listar()


def ejecutar_identidad(nombre: str, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
    """Ejecuta una identidad por nombre o prefijo."""
    return obtener_registro().ejecutar(nombre, contexto, **kwargs)


__all__ = [
    'ContextoVerificacion', 'Identidad',
    'EstadoInforme', 'InformeVerificacion', 'FORMATO_INFORME',
    'combinar_informes', 'estado_por_desviacion', 'formatear_numero',
    'ErrorIdentidadDesconocida', 'RegistroIdentidades',
    'obtener_registro', 'registrar_identidad',
    'listar_identidades', 'ejecutar_identidad',
]
