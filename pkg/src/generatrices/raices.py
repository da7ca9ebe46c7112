"""
Pares de raíces con suma y producto dados.

Las fórmulas cerradas usan pares (α, β) de los que solo se conocen las
funciones simétricas α + β y αβ. En un punto numérico concreto hay que
elegir cuál es cuál: β es la raíz de menor módulo, la que tiende a 0
cuando el producto tiende a 0. La raíz grande se calcula con la fórmula
estable (sin cancelación) y la pequeña como producto / grande.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

import mpmath
from mpmath import mpf

from algebra.polinomios import a_mpf

logger = logging.getLogger(__name__)

RAMA_NATURAL = "beta_menor"
RAMA_INTERCAMBIADA = "beta_mayor"


@dataclass(frozen=True)
class PuntoR3:
    """Punto numérico (X, Y, Z)."""
    X: Any
    Y: Any
    Z: Any

    @classmethod
    def desde(cls, valores) -> "PuntoR3":
        X, Y, Z = (mpmath.mpf(str(v)) if isinstance(v, str) else a_mpf(v) for v in valores)
        return cls(mpf(X), mpf(Y), mpf(Z))

    def __iter__(self):
        return iter((self.X, self.Y, self.Z))

    def to_dict(self) -> Dict[str, str]:
        return {
            "X": mpmath.nstr(self.X, 10),
            "Y": mpmath.nstr(self.Y, 10),
            "Z": mpmath.nstr(self.Z, 10),
        }

    def __str__(self) -> str:
        d = self.to_dict()
        return f"({d['X']}, {d['Y']}, {d['Z']})"


@dataclass(frozen=True)
class ParRaices:
    """
    Raíces α, β de λ² - suma·λ + producto.

    Attributes:
        suma: α + β.
        producto: αβ.
        alfa, beta: Las raíces (mpf, o mpc si el discriminante es negativo).
        rama: RAMA_NATURAL si |β| ≤ |α|, RAMA_INTERCAMBIADA si se cambiaron.
    """
    suma: Any
    producto: Any
    alfa: Any
    beta: Any
    rama: str = RAMA_NATURAL

    @property
    def discriminante(self) -> Any:
        return self.suma ** 2 - 4 * self.producto

    @property
    def son_reales(self) -> bool:
        return self.discriminante >= 0

    def intercambiada(self) -> "ParRaices":
        """Mismo par con α y β intercambiadas."""
        rama = RAMA_INTERCAMBIADA if self.rama == RAMA_NATURAL else RAMA_NATURAL
        return ParRaices(self.suma, self.producto, self.beta, self.alfa, rama)

    def residuo(self) -> Any:
        """Error con el que α, β reproducen suma y producto."""
        return max(abs(self.alfa + self.beta - self.suma),
                   abs(self.alfa * self.beta - self.producto))

    def to_dict(self) -> Dict[str, str]:
        return {
            "alpha": mpmath.nstr(self.alfa, 12),
            "beta": mpmath.nstr(self.beta, 12),
            "branch": self.rama,
        }


def raices_suma_producto(suma: Any, producto: Any) -> ParRaices:
    """
    Resuelve λ² - suma·λ + producto = 0 con β la raíz de menor módulo.

    Ejemplo:
        raices_suma_producto(3, 2) → α = 2, β = 1
    """
    suma = a_mpf(suma)
    producto = a_mpf(producto)
    discriminante = suma ** 2 - 4 * producto
    raiz = mpmath.sqrt(discriminante)
    # el signo que evita la cancelación da la raíz grande
    candidata_mas = suma + raiz
    candidata_menos = suma - raiz
    grande = candidata_mas if abs(candidata_mas) >= abs(candidata_menos) else candidata_menos
    alfa = grande / 2
    beta = producto / alfa if alfa != 0 else mpf(0)
    if isinstance(alfa, mpmath.mpc) and alfa.imag == 0 and beta.imag == 0:
        alfa, beta = alfa.real, beta.real
    return ParRaices(suma, producto, alfa, beta)


def raices_oz(punto: PuntoR3) -> ParRaices:
    """α + β = X + Y, αβ = Z."""
    return raices_suma_producto(punto.X + punto.Y, punto.Z)


def raices_alfa_beta(s: Any, punto: PuntoR3) -> ParRaices:
    """α_s + β_s = X + sY, α_sβ_s = s(XY - Z)."""
    s = a_mpf(s)
    return raices_suma_producto(punto.X + s * punto.Y, s * (punto.X * punto.Y - punto.Z))


def raices_eta_xi(punto: PuntoR3) -> ParRaices:
    """η + ξ = -X + Y, ηξ = -Z."""
    return raices_suma_producto(-punto.X + punto.Y, -punto.Z)
