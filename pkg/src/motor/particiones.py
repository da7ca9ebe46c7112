"""
Particiones de conjuntos y polinomios c_r(t).

Las particiones de {1, ..., r} se generan a partir de cadenas de
crecimiento restringido: a_1 = 0 y a_i ≤ max(a_1..a_{i-1}) + 1. Cada
cadena corresponde a una única partición (el elemento i va al bloque a_i),
así que no hay duplicados.

El polinomio c_r(t) = (r-1)!·(t^r - (t-1)^r) es el peso que recibe cada
índice de profundidad r al pasar de la suma sobre particiones a la
exponencial de la suma simétrica interpolada.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Tuple

from algebra.polinomios import PolinomioT


@dataclass(frozen=True)
class ParticionConjunto:
    """
    Partición de {1, ..., r} en bloques no vacíos.

    Attributes:
        r: Tamaño del conjunto.
        bloques: Bloques ordenados por su menor elemento.
    """
    r: int
    bloques: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        elementos = sorted(e for bloque in self.bloques for e in bloque)
        if elementos != list(range(1, self.r + 1)):
            raise ValueError(
                f"Partición inválida de {{1..{self.r}}}: {self.bloques}"
            )
        if any(not bloque for bloque in self.bloques):
            raise ValueError("Los bloques de una partición no pueden ser vacíos")

    @property
    def numero_bloques(self) -> int:
        return len(self.bloques)

    def __str__(self) -> str:
        return " | ".join(
            "{" + ",".join(str(e) for e in bloque) + "}" for bloque in self.bloques
        )


def _cadenas_crecimiento(r: int) -> Iterator[List[int]]:
    """Cadenas de crecimiento restringido de longitud r."""
    cadena = [0] * r
    maximos = [0] * r

    def recorrer(posicion: int):
        if posicion == r:
            yield list(cadena)
            return
        for valor in range(maximos[posicion - 1] + 2):
            cadena[posicion] = valor
            maximos[posicion] = max(maximos[posicion - 1], valor)
            yield from recorrer(posicion + 1)

    yield from recorrer(1)


def particiones_conjunto(r: int) -> List[ParticionConjunto]:
    """
    Todas las particiones de {1, ..., r}; hay Bell(r) de ellas.

    Raises:
        ValueError: Si r < 1.
    """
    if r < 1:
        raise ValueError(f"r debe ser ≥ 1, recibido {r}")

    resultado = []
    for cadena in _cadenas_crecimiento(r):
        numero = max(cadena) + 1
        bloques = tuple(
            tuple(i + 1 for i, b in enumerate(cadena) if b == bloque)
            for bloque in range(numero)
        )
        resultado.append(ParticionConjunto(r, bloques))
    return resultado


def numero_bell(r: int) -> int:
    """Número de Bell por el triángulo de Bell."""
    if r < 0:
        raise ValueError(f"r debe ser ≥ 0, recibido {r}")
    fila = [1]
    for _ in range(r):
        nueva = [fila[-1]]
        for valor in fila:
            nueva.append(nueva[-1] + valor)
        fila = nueva
    return fila[0]


def polinomio_c(r: int) -> PolinomioT:
    """
    c_r(t) = (r-1)!·(t^r - (t-1)^r), con coeficientes Fraction.

    Ejemplos:
        c_1 = 1, c_2 = 2t - 1, c_3 = 2(3t² - 3t + 1)

    Raises:
        ValueError: Si r < 1.
    """
    if r < 1:
        raise ValueError(f"r debe ser ≥ 1, recibido {r}")
    base = factorial(r - 1)
    coefs = []
    for j in range(r + 1):
        # (t-1)^r = Σ_j C(r,j) t^j (-1)^(r-j)
        termino = -comb(r, j) * (-1) ** (r - j)
        if j == r:
            termino += 1
        coefs.append(Fraction(base * termino))
    return PolinomioT(coefs, "t")
