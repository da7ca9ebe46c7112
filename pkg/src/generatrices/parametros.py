"""
Parámetros de las funciones generatrices.

Cada variante de Φ es un caso particular de Φ^t_{x,y}:

    plain   → (t, x, y) = (0, 1, 0)
    star    → (1, 1, 0)
    S       → (0, 1, -1)
    S_star  → (1, 1, -1)
    t       → (t, 1, 0)
    ipmzv   → (t, x, y) libres
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from algebra.polinomios import PolinomioT
from configuracion import ErrorParametros, formatear_racional


class Variante(Enum):
    """Variantes de valor zeta y de su función generatriz."""
    PLAIN = "plain"
    STAR = "star"
    T = "t"
    IPMZV = "ipmzv"
    S = "S"
    S_STAR = "S_star"

    @classmethod
    def desde_texto(cls, texto: str) -> "Variante":
        for variante in cls:
            if variante.value.lower() == texto.strip().lower():
                return variante
        opciones = ", ".join(v.value for v in cls)
        raise ErrorParametros(f"Variante desconocida '{texto}'. Opciones: {opciones}")


# (t, x, y) de las variantes con parámetros fijos
ESPECIALIZACIONES: Dict[Variante, Tuple[Fraction, Fraction, Fraction]] = {
    Variante.PLAIN: (Fraction(0), Fraction(1), Fraction(0)),
    Variante.STAR: (Fraction(1), Fraction(1), Fraction(0)),
    Variante.S: (Fraction(0), Fraction(1), Fraction(-1)),
    Variante.S_STAR: (Fraction(1), Fraction(1), Fraction(-1)),
}

ORDEN_MAXIMO = 12


@dataclass(frozen=True)
class ParametrosGF:
    """
    Parámetros de una función generatriz truncada.

    Attributes:
        variante: Variante de valor zeta.
        t: Parámetro de interpolación (Fraction o PolinomioT en 't').
        x, y: Parámetros de la versión polinomial.
        orden: Grado total de truncación N.
    """
    variante: Variante = Variante.IPMZV
    t: Any = Fraction(0)
    x: Fraction = Fraction(1)
    y: Fraction = Fraction(0)
    orden: int = 6

    def __post_init__(self):
        if self.orden < 0:
            raise ErrorParametros(f"El orden debe ser ≥ 0, recibido {self.orden}")
        if self.orden > ORDEN_MAXIMO:
            raise ErrorParametros(
                f"Orden {self.orden} demasiado alto (máximo {ORDEN_MAXIMO})"
            )
        if self.variante in ESPECIALIZACIONES:
            esperado = ESPECIALIZACIONES[self.variante]
            if (self.t, self.x, self.y) != esperado:
                raise ErrorParametros(
                    f"La variante {self.variante.value} fija (t, x, y) = "
                    f"{tuple(formatear_racional(v) for v in esperado)}"
                )
        if self.variante == Variante.T and (self.x, self.y) != (1, 0):
            raise ErrorParametros("La variante t fija (x, y) = (1, 0)")

    @classmethod
    def para(cls, variante: Variante, orden: int,
             t: Optional[Any] = None,
             x: Optional[Fraction] = None,
             y: Optional[Fraction] = None) -> "ParametrosGF":
        """
        Construye los parámetros completando los valores que fija la variante.

        Los valores que la variante no fija toman t = 0, x = 1, y = 0.
        """
        if variante in ESPECIALIZACIONES:
            t_fijo, x_fijo, y_fijo = ESPECIALIZACIONES[variante]
            return cls(variante, t_fijo, x_fijo, y_fijo, orden)
        if variante == Variante.T:
            return cls(variante, Fraction(0) if t is None else t, Fraction(1), Fraction(0), orden)
        return cls(
            variante,
            Fraction(0) if t is None else t,
            Fraction(1) if x is None else Fraction(x),
            Fraction(0) if y is None else Fraction(y),
            orden,
        )

    def como_ipmzv(self) -> "ParametrosGF":
        """Los mismos (t, x, y) vistos como variante ipmzv."""
        return ParametrosGF(Variante.IPMZV, self.t, self.x, self.y, self.orden)

    @property
    def t_simbolico(self) -> bool:
        return isinstance(self.t, PolinomioT)

    @property
    def peso_profundidad(self) -> Any:
        """Factor (1 - 2t) que multiplica cada componente."""
        return 1 - 2 * self.t

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variant": self.variante.value,
            "t": "t" if self.t_simbolico else formatear_racional(self.t),
            "x": formatear_racional(self.x),
            "y": formatear_racional(self.y),
            "N": self.orden,
        }

    def __str__(self) -> str:
        d = self.to_dict()
        return f"{d['variant']}(t={d['t']}, x={d['x']}, y={d['y']}, N={d['N']})"
