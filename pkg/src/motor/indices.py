"""
Índices de valores zeta múltiples y su combinatoria.

Un índice es una sucesión finita, posiblemente vacía, de enteros
positivos k = (k1, ..., kr). Es admisible si es vacío o si kr ≥ 2.

ESTADÍSTICAS:
- peso wt(k) = k1 + ... + kr
- profundidad dep(k) = r
- altura ht(k) = número de componentes ≥ 2

Cada índice k se codifica por el monomio
    u_k = X^(wt-dep-ht) · Y^(dep-ht) · Z^ht,
que es multiplicativo respecto a la concatenación. Una componente 1 aporta
grado 1 (factor Y) y una componente p ≥ 2 aporta grado p-1 (X^(p-2)·Z).
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Tuple, Union


class ErrorIndice(ValueError):
    """Índice mal formado o no admisible donde se exige admisibilidad."""


# =============================================================================
# TIPOS
# =============================================================================

@dataclass(frozen=True)
class Indice:
    """
    Índice inmutable (k1, ..., kr).

    Attributes:
        partes: Componentes del índice, todas ≥ 1.
    """
    partes: Tuple[int, ...] = ()

    def __post_init__(self):
        partes = tuple(int(p) for p in self.partes)
        for p in partes:
            if p < 1:
                raise ErrorIndice(
                    f"Índice inválido {partes}: todas las componentes deben ser ≥ 1"
                )
        object.__setattr__(self, "partes", partes)

    @property
    def peso(self) -> int:
        return sum(self.partes)

    @property
    def profundidad(self) -> int:
        return len(self.partes)

    @property
    def altura(self) -> int:
        return sum(1 for p in self.partes if p >= 2)

    @property
    def es_vacio(self) -> bool:
        return not self.partes

    @property
    def es_admisible(self) -> bool:
        return not self.partes or self.partes[-1] >= 2

    def __len__(self) -> int:
        return len(self.partes)

    def __iter__(self):
        return iter(self.partes)

    def __getitem__(self, posicion):
        if isinstance(posicion, slice):
            return Indice(self.partes[posicion])
        return self.partes[posicion]

    def __add__(self, otro: "Indice") -> "Indice":
        return concatenar(self, otro)

    def __str__(self) -> str:
        return formatear_indice(self)


@dataclass(frozen=True)
class ExponentesU:
    """Exponentes (i, j, k) del monomio X^i·Y^j·Z^k."""
    i: int
    j: int
    k: int

    @property
    def grado(self) -> int:
        """Grado total i + j + k."""
        return self.i + self.j + self.k

    @property
    def peso(self) -> int:
        """Peso i + j + 2k (Z tiene peso 2)."""
        return self.i + self.j + 2 * self.k

    @property
    def como_tupla(self) -> Tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def __add__(self, otro: "ExponentesU") -> "ExponentesU":
        return ExponentesU(self.i + otro.i, self.j + otro.j, self.k + otro.k)

    def a_estadisticas(self) -> Tuple[int, int, int]:
        """Recupera (peso, profundidad, altura) del índice que lo produjo."""
        altura = self.k
        profundidad = self.j + altura
        peso = self.i + profundidad + altura
        return peso, profundidad, altura


TipoIndice = Union[Indice, Sequence[int]]


def como_indice(valor: TipoIndice) -> Indice:
    """Acepta un Indice o cualquier secuencia de enteros."""
    if isinstance(valor, Indice):
        return valor
    return Indice(tuple(valor))


# =============================================================================
# OPERACIONES BÁSICAS
# =============================================================================

def estadisticas(indice: TipoIndice) -> Tuple[int, int, int]:
    """Devuelve (peso, profundidad, altura)."""
    k = como_indice(indice)
    return k.peso, k.profundidad, k.altura


def es_admisible(indice: TipoIndice) -> bool:
    return como_indice(indice).es_admisible


def monomio_u(indice: TipoIndice) -> ExponentesU:
    """Exponentes del monomio u_k."""
    peso, profundidad, altura = estadisticas(indice)
    return ExponentesU(peso - profundidad - altura, profundidad - altura, altura)


def grado_u(indice: TipoIndice) -> int:
    """Grado total del monomio u_k, es decir peso - altura."""
    peso, _, altura = estadisticas(indice)
    return peso - altura


def invertir(indice: TipoIndice) -> Indice:
    return Indice(tuple(reversed(como_indice(indice).partes)))


def concatenar(a: TipoIndice, b: TipoIndice) -> Indice:
    return Indice(como_indice(a).partes + como_indice(b).partes)


def contracciones(indice: TipoIndice) -> List[Tuple[Indice, int]]:
    """
    Todas las contracciones de un índice.

    Cada una de las r-1 comas puede sustituirse por un '+'. Se devuelve la
    lista de pares (índice contraído, número de comas sustituidas), con
    2^(r-1) elementos para r ≥ 1 y [(∅, 0)] para el índice vacío.

    Ejemplo:
        contracciones((1, 2)) → [((1, 2), 0), ((3,), 1)]
    """
    partes = como_indice(indice).partes
    if not partes:
        return [(Indice(), 0)]

    resultado = []
    for fusiones in product((False, True), repeat=len(partes) - 1):
        contraido = [partes[0]]
        for fusionar, parte in zip(fusiones, partes[1:]):
            if fusionar:
                contraido[-1] += parte
            else:
                contraido.append(parte)
        resultado.append((Indice(tuple(contraido)), sum(fusiones)))
    return resultado


# =============================================================================
# ENUMERACIÓN
# =============================================================================

def composiciones(peso: int) -> Iterator[Tuple[int, ...]]:
    """Composiciones de un entero en orden lexicográfico."""
    if peso == 0:
        yield ()
        return
    for primera in range(1, peso + 1):
        for resto in composiciones(peso - primera):
            yield (primera,) + resto


def enumerar_indices(peso_maximo: int,
                     solo_admisibles: bool = False) -> Iterator[Indice]:
    """
    Todos los índices de peso ≤ peso_maximo.

    Orden: por peso creciente y, dentro de cada peso, lexicográfico.
    El índice vacío (peso 0) va primero.
    """
    if peso_maximo < 0:
        return
    for peso in range(peso_maximo + 1):
        for partes in composiciones(peso):
            if solo_admisibles and partes and partes[-1] < 2:
                continue
            yield Indice(partes)


def _partes_por_grado(grado: int) -> Iterator[Tuple[int, ...]]:
    """Sucesiones de componentes cuyo monomio u tiene grado total exacto."""
    if grado == 0:
        yield ()
        return
    for primera in range(1, grado + 2):
        aporte = 1 if primera == 1 else primera - 1
        if aporte > grado:
            continue
        for resto in _partes_por_grado(grado - aporte):
            yield (primera,) + resto


def enumerar_por_grado(grado_maximo: int,
                       solo_admisibles: bool = False) -> List[Indice]:
    """
    Índices cuyo monomio u_k tiene grado total ≤ grado_maximo.

    Son exactamente los índices que contribuyen a los coeficientes de una
    serie truncada en grado total grado_maximo. Orden: por grado, luego
    peso, luego lexicográfico.
    """
    resultado = []
    for grado in range(max(grado_maximo, -1) + 1):
        for partes in _partes_por_grado(grado):
            if solo_admisibles and partes and partes[-1] < 2:
                continue
            resultado.append(Indice(partes))
    resultado.sort(key=lambda k: (grado_u(k), k.peso, k.partes))
    return resultado


# =============================================================================
# TEXTO
# =============================================================================

def parsear_indice(texto: str) -> Indice:
    """
    Lee un índice escrito como "1,2,3". "-" o "" representan el vacío.

    Raises:
        ErrorIndice: Si alguna componente no es un entero positivo.
    """
    texto = texto.strip().strip("()")
    if texto in ("", "-"):
        return Indice()
    try:
        partes = tuple(int(p) for p in texto.split(","))
    except ValueError:
        raise ErrorIndice(
            f"Índice inválido: '{texto}'. Formato esperado: k1,k2,...,kr"
        ) from None
    return Indice(partes)


def formatear_indice(indice: TipoIndice) -> str:
    partes = como_indice(indice).partes
    if not partes:
        return "-"
    return ",".join(str(p) for p in partes)
