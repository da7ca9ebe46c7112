"""
Clase base para todas las identidades verificables.

Cada identidad corresponde a un único enunciado matemático y se
comprueba sobre una rejilla de parámetros. Define una interfaz común
para registro, documentación y ejecución.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

from .informe import InformeVerificacion


class Identidad(ABC):
    """Clase base abstracta para identidades."""

    @property
    @abstractmethod
    def nombre(self) -> str:
        """Nombre único de la identidad (usado por la CLI)."""
        pass

    @property
    @abstractmethod
    def descripcion(self) -> str:
        """Descripción breve del enunciado que se comprueba."""
        pass

    @property
    @abstractmethod
    def enunciado(self) -> str:
        """Enunciado al que corresponde la identidad."""
        pass

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        """
        Parámetros que acepta ejecutar().

        Formato:
        {
            "nombre_param": {
                "tipo": "int|rational|rational_list|point_list",
                "descripcion": "Para qué sirve",
                "requerido": True/False,
            }
        }
        """
        return {
            "orden": {
                "tipo": "int",
                "descripcion": "Grado total de truncación o peso máximo",
                "requerido": False,
            },
        }

    @abstractmethod
    def ejecutar(self, contexto, **kwargs) -> InformeVerificacion:
        """
        Ejecuta la comprobación.

        Args:
            contexto: ContextoVerificacion con motor, generatrices y configuración.
            **kwargs: Parámetros específicos de la identidad.

        Returns:
            Informe combinado de todos los casos de la rejilla.
        """
        pass

    def to_dict(self) -> Dict[str, Any]:
        """Convierte la identidad a diccionario para listados."""
        return {
            "nombre": self.nombre,
            "descripcion": self.descripcion,
            "enunciado": self.enunciado,
            "parametros": self.parametros,
        }

    def validar_parametros(self, **kwargs) -> Tuple[bool, str]:
        """Valida que los parámetros requeridos estén presentes y sean conocidos."""
        for nombre, config in self.parametros.items():
            if config.get("requerido", False) and kwargs.get(nombre) is None:
                return False, f"Parámetro requerido '{nombre}' no proporcionado"
        desconocidos = sorted(set(kwargs) - set(self.parametros))
        if desconocidos:
            return False, (f"Parámetros no válidos para '{self.nombre}': "
                           f"{', '.join(desconocidos)}")
        return True, "OK"
