"""
Álgebra armónica (quasi-shuffle) y regularización.

Las palabras son tuplas de enteros positivos (letras z_k). El producto
armónico ∗ se define por la recursión sobre la última letra:

    w ∗ ∅ = ∅ ∗ w = w
    (u·a) ∗ (v·b) = (u ∗ v·b)·a + (u·a ∗ v)·b + (u ∗ v)·(a+b)

La regularización reg: H¹ → H⁰[T] es el único morfismo de álgebras que
fija las palabras admisibles y envía z_1 a T. Se calcula recursivamente:
si w = v·z_1^m con v admisible,

    m·reg(w) = reg(v·z_1^(m-1))·T - Σ reg(resto de (v·z_1^(m-1)) ∗ z_1)

donde el resto tiene siempre menos de m unos finales.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from .polinomios import PolinomioT, a_mpf

Palabra = Tuple[int, ...]


# =============================================================================
# ELEMENTOS DEL ÁLGEBRA
# =============================================================================

class ElementoH:
    """
    Combinación lineal finita de palabras con coeficientes racionales.

    Se considera inmutable: las operaciones devuelven elementos nuevos.
    """

    __slots__ = ("_terminos",)

    def __init__(self, terminos: Dict[Palabra, Fraction] = None):
        limpio: Dict[Palabra, Fraction] = {}
        for palabra, coef in (terminos or {}).items():
            if coef != 0:
                limpio[tuple(palabra)] = Fraction(coef)
        self._terminos = limpio

    @classmethod
    def palabra(cls, palabra: Iterable[int], coef=1) -> "ElementoH":
        return cls({tuple(palabra): Fraction(coef)})

    @classmethod
    def unidad(cls) -> "ElementoH":
        return cls({(): Fraction(1)})

    @classmethod
    def cero(cls) -> "ElementoH":
        return cls()

    def coeficiente(self, palabra: Iterable[int]) -> Fraction:
        return self._terminos.get(tuple(palabra), Fraction(0))

    def terminos(self) -> List[Tuple[Palabra, Fraction]]:
        """Términos en orden determinista (peso, palabra)."""
        return sorted(self._terminos.items(), key=lambda par: (sum(par[0]), par[0]))

    def soporte(self) -> List[Palabra]:
        return [palabra for palabra, _ in self.terminos()]

    def es_cero(self) -> bool:
        return not self._terminos

    def es_admisible(self) -> bool:
        """Todas las palabras del soporte son admisibles."""
        return all(not p or p[-1] >= 2 for p in self._terminos)

    def __len__(self) -> int:
        return len(self._terminos)

    def __iter__(self) -> Iterator[Tuple[Palabra, Fraction]]:
        return iter(self.terminos())

    def __add__(self, otro: "ElementoH") -> "ElementoH":
        suma = dict(self._terminos)
        for palabra, coef in otro._terminos.items():
            suma[palabra] = suma.get(palabra, Fraction(0)) + coef
        return ElementoH(suma)

    def __neg__(self) -> "ElementoH":
        return ElementoH({p: -c for p, c in self._terminos.items()})

    def __sub__(self, otro: "ElementoH") -> "ElementoH":
        return self + (-otro)

    def escalar(self, factor) -> "ElementoH":
        factor = Fraction(factor)
        return ElementoH({p: c * factor for p, c in self._terminos.items()})

    def __mul__(self, otro: "ElementoH") -> "ElementoH":
        """Producto armónico."""
        if not isinstance(otro, ElementoH):
            return self.escalar(otro)
        return producto_armonico(self, otro)

    def __eq__(self, otro: object) -> bool:
        return isinstance(otro, ElementoH) and self._terminos == otro._terminos

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terminos:
            return "0"
        return " + ".join(
            f"{c}·z{list(p)}" for p, c in self.terminos()
        )


# =============================================================================
# PRODUCTO ARMÓNICO
# =============================================================================

@lru_cache(maxsize=None)
def _producto_palabras(a: Palabra, b: Palabra) -> Tuple[Tuple[Palabra, int], ...]:
    """Producto armónico de dos palabras, como tupla inmutable (palabra, coef)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)

    u, letra_a = a[:-1], a[-1]
    v, letra_b = b[:-1], b[-1]
    acumulado: Dict[Palabra, int] = {}

    for palabra, c in _producto_palabras(u, b):
        clave = palabra + (letra_a,)
        acumulado[clave] = acumulado.get(clave, 0) + c
    for palabra, c in _producto_palabras(a, v):
        clave = palabra + (letra_b,)
        acumulado[clave] = acumulado.get(clave, 0) + c
    for palabra, c in _producto_palabras(u, v):
        clave = palabra + (letra_a + letra_b,)
        acumulado[clave] = acumulado.get(clave, 0) + c

    return tuple(sorted((p, c) for p, c in acumulado.items() if c))


def producto_palabras(a: Iterable[int], b: Iterable[int]) -> ElementoH:
    """
    Producto armónico de dos palabras.

    Ejemplos:
        z1 ∗ z1 = 2·z1z1 + z2
        z2 ∗ z3 = z2z3 + z3z2 + z5
    """
    return ElementoH(dict(_producto_palabras(tuple(a), tuple(b))))


def producto_armonico(a: ElementoH, b: ElementoH) -> ElementoH:
    """Extensión bilineal del producto de palabras."""
    acumulado: Dict[Palabra, Fraction] = {}
    for p, cp in a.terminos():
        for q, cq in b.terminos():
            factor = cp * cq
            for palabra, c in _producto_palabras(p, q):
                acumulado[palabra] = acumulado.get(palabra, Fraction(0)) + factor * c
    return ElementoH(acumulado)


# =============================================================================
# POLINOMIOS EN T CON COEFICIENTES EN H⁰
# =============================================================================

class PolinomioReg:
    """
    Polinomio Σ_n A_n·T^n con A_n elementos admisibles de H.

    El producto usa el producto armónico en los coeficientes.
    """

    __slots__ = ("coeficientes",)

    def __init__(self, coeficientes: Iterable[ElementoH] = ()):
        lista = list(coeficientes)
        while lista and lista[-1].es_cero():
            lista.pop()
        self.coeficientes: Tuple[ElementoH, ...] = tuple(lista)

    @property
    def grado(self) -> int:
        return len(self.coeficientes) - 1

    def coeficiente(self, n: int) -> ElementoH:
        if 0 <= n < len(self.coeficientes):
            return self.coeficientes[n]
        return ElementoH()

    def por_T(self) -> "PolinomioReg":
        return PolinomioReg((ElementoH(),) + self.coeficientes)

    def escalar(self, factor) -> "PolinomioReg":
        return PolinomioReg([c.escalar(factor) for c in self.coeficientes])

    def __add__(self, otro: "PolinomioReg") -> "PolinomioReg":
        n = max(len(self.coeficientes), len(otro.coeficientes))
        return PolinomioReg(
            [self.coeficiente(i) + otro.coeficiente(i) for i in range(n)]
        )

    def __sub__(self, otro: "PolinomioReg") -> "PolinomioReg":
        return self + otro.escalar(-1)

    def __mul__(self, otro: "PolinomioReg") -> "PolinomioReg":
        if not self.coeficientes or not otro.coeficientes:
            return PolinomioReg()
        producto = [ElementoH() for _ in range(len(self.coeficientes) + len(otro.coeficientes) - 1)]
        for i, a in enumerate(self.coeficientes):
            for j, b in enumerate(otro.coeficientes):
                producto[i + j] = producto[i + j] + producto_armonico(a, b)
        return PolinomioReg(producto)

    def __eq__(self, otro: object) -> bool:
        return isinstance(otro, PolinomioReg) and self.coeficientes == otro.coeficientes

    __hash__ = None

    def __repr__(self) -> str:
        return "PolinomioReg(" + ", ".join(
            f"T^{n}: {c!r}" for n, c in enumerate(self.coeficientes)
        ) + ")"


# =============================================================================
# REGULARIZACIÓN
# =============================================================================

def _unos_finales(palabra: Palabra) -> int:
    m = 0
    for letra in reversed(palabra):
        if letra != 1:
            break
        m += 1
    return m


@lru_cache(maxsize=None)
def _regularizar_palabra(palabra: Palabra) -> PolinomioReg:
    m = _unos_finales(palabra)
    if m == 0:
        return PolinomioReg([ElementoH.palabra(palabra)])

    base = palabra[:-1]
    resultado = _regularizar_palabra(base).por_T()
    multiplicidad = 0
    for otra, c in _producto_palabras(base, (1,)):
        if otra == palabra:
            multiplicidad = c
            continue
        resultado = resultado - _regularizar_palabra(otra).escalar(c)

    if multiplicidad != m:
        raise ArithmeticError(
            f"Regularización inconsistente para {palabra}: multiplicidad {multiplicidad}"
        )
    return resultado.escalar(Fraction(1, m))


def regularizar(palabra: Iterable[int]) -> PolinomioReg:
    """
    Regularización armónica de una palabra.

    Ejemplos:
        reg(z2)   = z2
        reg(z1)   = T
        reg(z2z1) = z2·T - z1z2 - z3
        reg(z1z1) = T²/2 - z2/2

    El resultado se comparte entre llamadas y no debe modificarse.
    """
    return _regularizar_palabra(tuple(palabra))


def regularizar_elemento(elemento: ElementoH) -> PolinomioReg:
    """Extensión lineal de la regularización."""
    resultado = PolinomioReg()
    for palabra, coef in elemento.terminos():
        resultado = resultado + regularizar(palabra).escalar(coef)
    return resultado


def evaluar_elemento(elemento: ElementoH, evaluador: Callable[[Palabra], object]):
    """Σ c·ζ(w) para un elemento admisible, con ζ dado por el evaluador."""
    total = 0
    for palabra, coef in elemento.terminos():
        total = total + a_mpf(coef) * evaluador(palabra)
    return total


def evaluar_reg(polinomio: PolinomioReg,
                evaluador: Callable[[Palabra], object],
                simbolico: bool = False):
    """
    Evalúa un polinomio regularizado con un evaluador de palabras admisibles.

    Args:
        polinomio: Resultado de regularizar().
        evaluador: Función palabra admisible → valor numérico.
        simbolico: Si True, devuelve un PolinomioT en 'T'; si False,
            devuelve el término constante (T = 0).
    """
    if not simbolico:
        return evaluar_elemento(polinomio.coeficiente(0), evaluador)
    return PolinomioT(
        [evaluar_elemento(c, evaluador) for c in polinomio.coeficientes],
        "T",
    )
