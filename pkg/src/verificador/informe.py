"""
Informes de verificación.

Un informe resume la comprobación de una identidad: parámetros, mayor
desviación, tabla de desviaciones, ramas de raíces usadas y estado. La
serialización JSON es determinista: los números se escriben como cadenas
con formato fijo y el tiempo solo aparece si se pide.

Formato JSON (versión 1):
    {"format": 1, "identity": "main", "params": {...}, "max_dev": "3.1e-12",
     "tolerance": "1.0e-08", "pass": true, "status": "pass", "branch": [...],
     "retries": 0, "note": "", "version": "1.0.0", "deviations": [...]}
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

FORMATO_INFORME = 1


class EstadoInforme(Enum):
    """Resultado de una comprobación."""
    PASA = "pass"
    FALLA = "fail"
    EXCLUIDA = "excluded"   # caso fuera de la identidad (pregunta abierta)
    INFO = "info"           # sondeo sin afirmación


def formatear_numero(valor: Any) -> str:
    """Número en notación científica con 3 decimales."""
    return f"{float(valor):.3e}"


@dataclass
class InformeVerificacion:
    """
    Informe de una identidad o de uno de sus casos.

    Attributes:
        identidad: Nombre registrado de la identidad.
        parametros: Parámetros como cadenas.
        desviacion_maxima: Mayor desviación (relativa) encontrada.
        tolerancia: Tolerancia aplicada.
        estado: pass, fail, excluded o info.
        desviaciones: Tabla de desviaciones (diccionarios de cadenas).
        ramas: Ramas de raíces usadas.
        reintentos: Reintentos con la rama intercambiada.
        nota: Observaciones.
        version: Versión del programa.
        milisegundos: Tiempo de ejecución (no se serializa por defecto).
    """
    identidad: str
    parametros: Dict[str, Any] = field(default_factory=dict)
    desviacion_maxima: float = 0.0
    tolerancia: float = 0.0
    estado: EstadoInforme = EstadoInforme.PASA
    desviaciones: List[Dict[str, Any]] = field(default_factory=list)
    ramas: List[str] = field(default_factory=list)
    reintentos: int = 0
    nota: str = ""
    version: str = "1.0.0"
    milisegundos: Optional[float] = None

    @property
    def pasa(self) -> Optional[bool]:
        """True/False, o None si el informe está excluido o es informativo."""
        if self.estado == EstadoInforme.PASA:
            return True
        if self.estado == EstadoInforme.FALLA:
            return False
        return None

    @property
    def falla(self) -> bool:
        return self.estado == EstadoInforme.FALLA

    def to_dict(self, incluir_tiempo: bool = False) -> Dict[str, Any]:
        """Convierte a diccionario serializable."""
        datos = {
            "format": FORMATO_INFORME,
            "identity": self.identidad,
            "params": self.parametros,
            "max_dev": formatear_numero(self.desviacion_maxima),
            "tolerance": formatear_numero(self.tolerancia),
            "pass": self.pasa,
            "status": self.estado.value,
            "branch": list(self.ramas),
            "retries": self.reintentos,
            "note": self.nota,
            "version": self.version,
            "deviations": self.desviaciones,
        }
        if incluir_tiempo and self.milisegundos is not None:
            datos["elapsed_ms"] = round(self.milisegundos, 1)
        return datos

    @classmethod
    def from_dict(cls, datos: Dict[str, Any]) -> "InformeVerificacion":
        if datos.get("format") != FORMATO_INFORME:
            raise ValueError(
                f"Formato de informe {datos.get('format')} no soportado "
                f"(esperado {FORMATO_INFORME})"
            )
        return cls(
            identidad=datos["identity"],
            parametros=datos.get("params", {}),
            desviacion_maxima=float(datos["max_dev"]),
            tolerancia=float(datos["tolerance"]),
            estado=EstadoInforme(datos["status"]),
            desviaciones=datos.get("deviations", []),
            ramas=list(datos.get("branch", [])),
            reintentos=int(datos.get("retries", 0)),
            nota=datos.get("note", ""),
            version=datos.get("version", "1.0.0"),
            milisegundos=datos.get("elapsed_ms"),
        )

    def __str__(self) -> str:
        simbolos = {
            EstadoInforme.PASA: "✓",
            EstadoInforme.FALLA: "✗",
            EstadoInforme.EXCLUIDA: "·",
            EstadoInforme.INFO: "i",
        }
        linea = (f"{simbolos[self.estado]} {self.identidad}: "
                 f"desviación {formatear_numero(self.desviacion_maxima)} "
                 f"(tolerancia {formatear_numero(self.tolerancia)}) [{self.estado.value}]")
        if self.ramas:
            linea += f" ramas={','.join(self.ramas)}"
        if self.reintentos:
            linea += f" reintentos={self.reintentos}"
        if self.nota:
            linea += f"\n  {self.nota}"
        return linea


def estado_por_desviacion(desviacion: Any, tolerancia: float) -> EstadoInforme:
    return EstadoInforme.PASA if float(desviacion) <= tolerancia else EstadoInforme.FALLA


def combinar_informes(identidad: str,
                      casos: Iterable[InformeVerificacion],
                      tolerancia: float,
                      parametros: Optional[Dict[str, Any]] = None,
                      version: str = "1.0.0") -> InformeVerificacion:
    """
    Resume varios casos en un único informe.

    Los casos excluidos o informativos no cuentan para la desviación
    máxima ni para el estado, pero aparecen en la tabla y en la nota.
    Si ningún caso afirma nada, el estado es el de los casos.
    """
    casos = list(casos)
    afirmativos = [c for c in casos if c.estado in (EstadoInforme.PASA, EstadoInforme.FALLA)]
    desviaciones: List[Dict[str, Any]] = []
    ramas: List[str] = []
    notas: List[str] = []
    for caso in casos:
        etiqueta = ",".join(f"{k}={v}" for k, v in caso.parametros.items())
        for fila in caso.desviaciones:
            desviaciones.append({"case": etiqueta, **fila})
        if not caso.desviaciones:
            desviaciones.append({
                "case": etiqueta,
                "dev": formatear_numero(caso.desviacion_maxima),
                "status": caso.estado.value,
            })
        for rama in caso.ramas:
            if rama not in ramas:
                ramas.append(rama)
        if caso.nota:
            notas.append(f"[{etiqueta}] {caso.nota}")

    if afirmativos:
        maxima = max(c.desviacion_maxima for c in afirmativos)
        estado = (EstadoInforme.FALLA if any(c.falla for c in afirmativos)
                  else EstadoInforme.PASA)
    else:
        maxima = max((c.desviacion_maxima for c in casos), default=0.0)
        estado = (EstadoInforme.INFO if any(c.estado == EstadoInforme.INFO for c in casos)
                  else EstadoInforme.EXCLUIDA)

    return InformeVerificacion(
        identidad=identidad,
        parametros=parametros or {},
        desviacion_maxima=float(maxima),
        tolerancia=tolerancia,
        estado=estado,
        desviaciones=desviaciones,
        ramas=ramas,
        reintentos=sum(c.reintentos for c in casos),
        nota="; ".join(notas),
        version=version,
    )
