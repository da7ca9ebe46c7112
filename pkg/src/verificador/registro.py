"""
Registro central de identidades verificables.

Permite registrar, listar, resolver por prefijo y ejecutar identidades.
"""

import logging
import time
from typing import Any, Dict, List, Optional

from configuracion import ErrorParametros, tolerancia
from generatrices.puntuales import ErrorPrecondicion
from motor.utils import coincidencias_prefijo, normalizar_nombre
from .identidad_base import Identidad
from .informe import EstadoInforme, InformeVerificacion

logger = logging.getLogger(__name__)


class ErrorIdentidadDesconocida(ValueError):
    """Nombre de identidad inexistente o ambiguo."""


class RegistroIdentidades:
    """Gestiona todas las identidades disponibles."""

    def __init__(self):
        self._identidades: Dict[str, Identidad] = {}

    def registrar(self, identidad: Identidad) -> None:
        """Registra una identidad en el sistema."""
        self._identidades[identidad.nombre] = identidad

    def obtener(self, nombre: str) -> Optional[Identidad]:
        """Obtiene una identidad por nombre exacto."""
        return self._identidades.get(nombre)

    def listar(self) -> List[str]:
        """Nombres registrados en orden alfabético."""
        return sorted(self._identidades)

    def resolver(self, nombre: str) -> Identidad:
        """
        Resuelve un nombre o un prefijo no ambiguo.

        Ejemplo:
            resolver("lemma5") → lemma5_antipode

        Raises:
            ErrorIdentidadDesconocida: Si no hay coincidencias o hay varias.
        """
        clave = normalizar_nombre(nombre)
        if clave in self._identidades:
            return self._identidades[clave]
        candidatos = coincidencias_prefijo(clave, self.listar())
        if len(candidatos) == 1:
            return self._identidades[candidatos[0]]
        disponibles = ", ".join(self.listar())
        if not candidatos:
            raise ErrorIdentidadDesconocida(
                f"Identidad '{nombre}' no encontrada. Disponibles: {disponibles}"
            )
        raise ErrorIdentidadDesconocida(
            f"Identidad '{nombre}' ambigua: {', '.join(candidatos)}"
        )

    def ejecutar(self, nombre: str, contexto, **kwargs) -> InformeVerificacion:
        """
        Ejecuta una identidad por nombre o prefijo.

        Returns:
            Informe de la identidad, con el tiempo de ejecución anotado.

        Raises:
            ErrorIdentidadDesconocida: Si el nombre no se puede resolver.
            ErrorParametros: Si los parámetros no son válidos.

        Una ErrorPrecondicion durante la ejecución no se propaga: se devuelve
        un informe fallido con el mensaje en la nota.
        """
        identidad = self.resolver(nombre)
        kwargs = {k: v for k, v in kwargs.items() if v is not None}

        valido, mensaje = identidad.validar_parametros(**kwargs)
        if not valido:
            raise ErrorParametros(mensaje)

        logger.info("identidad_inicio nombre=%s", identidad.nombre)
        inicio = time.perf_counter()
        try:
            informe = identidad.ejecutar(contexto, **kwargs)
        except ErrorPrecondicion as error:
            logger.error("precondicion_fallida nombre=%s mensaje=%s", identidad.nombre, error)
            informe = informe_precondicion(identidad.nombre, kwargs, error, contexto)
        informe.milisegundos = (time.perf_counter() - inicio) * 1000
        logger.info("identidad_fin nombre=%s estado=%s desviacion=%.3e ms=%.1f",
                    identidad.nombre, informe.estado.value,
                    informe.desviacion_maxima, informe.milisegundos)
        return informe

    def generar_documentacion(self) -> str:
        """Listado legible de identidades y sus parámetros."""
        lineas = ["IDENTIDADES DISPONIBLES:", ""]
        for nombre in self.listar():
            identidad = self._identidades[nombre]
            lineas.append(f"## {nombre}")
            lineas.append(f"   {identidad.descripcion}")
            lineas.append(f"   Enunciado: {identidad.enunciado}")
            lineas.append("   Parámetros:")
            for param, config in identidad.parametros.items():
                req = "(requerido)" if config.get("requerido") else "(opcional)"
                tipo = config.get("tipo", "any")
                desc = config.get("descripcion", "")
                lineas.append(f"   - {param} [{tipo}] {req}: {desc}")
            lineas.append("")
        return "\n".join(lineas)


def informe_precondicion(nombre: str, kwargs: Dict[str, Any], error: Exception,
                         contexto) -> InformeVerificacion:
    """Informe fallido de una identidad que no pudo evaluarse."""
    if kwargs.get("tolerancia") is not None:
        tol = float(kwargs["tolerancia"])
    else:
        tol = tolerancia(nombre, contexto.config)
    return InformeVerificacion(
        identidad=nombre,
        parametros={k: str(v) for k, v in sorted(kwargs.items())},
        desviacion_maxima=float("inf"),
        tolerancia=tol,
        estado=EstadoInforme.FALLA,
        nota=f"precondición no satisfecha: {error}",
        version=contexto.version,
    )


# Instancia global del registro
registro_global = RegistroIdentidades()


def registrar_identidad(identidad: Identidad) -> None:
    """Función helper para registrar en el registro global."""
    registro_global.registrar(identidad)


def obtener_registro() -> RegistroIdentidades:
    """Obtiene el registro global."""
    return registro_global
