"""
Polinomios univariados y bivariados sobre anillos genéricos.

PolinomioT representa un polinomio en una variable con nombre ('t' para el
parámetro de interpolación, 'T' para la variable de regularización). Los
coeficientes pueden ser Fraction, mpf o a su vez PolinomioT en otra
variable, lo que permite trabajar con t y T simbólicos a la vez.

PolinomioXY representa polinomios en los parámetros (x, y) con
coeficientes arbitrarios; se usa en la suma simétrica interpolada.

REGLA DE CONVERSIÓN:
- Nunca se mezclan Fraction y mpf directamente: la suma mpf + Fraction
  degrada a float. Usar a_mpf() antes de combinar valores exactos con
  valores de precisión múltiple.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

import mpmath


# =============================================================================
# CONVERSIONES
# =============================================================================

def es_cero(valor: Any) -> bool:
    """Indica si un coeficiente es exactamente cero (recursivo)."""
    if isinstance(valor, (PolinomioT, PolinomioXY)):
        return valor.es_cero()
    return valor == 0


def norma(valor: Any) -> Any:
    """Máximo valor absoluto de los coeficientes (recursivo)."""
    if isinstance(valor, (PolinomioT, PolinomioXY)):
        return valor.norma()
    return abs(valor)


def a_mpf(valor: Any) -> Any:
    """
    Convierte un valor exacto a mpf.

    Fraction e int pasan a mpf; los polinomios convierten sus coeficientes;
    mpf y mpc se devuelven sin cambios.
    """
    if isinstance(valor, Fraction):
        return mpmath.mpf(valor.numerator) / valor.denominator
    if isinstance(valor, int):
        return mpmath.mpf(valor)
    if isinstance(valor, PolinomioT):
        return PolinomioT([a_mpf(c) for c in valor.coefs], valor.variable)
    if isinstance(valor, PolinomioXY):
        return PolinomioXY({m: a_mpf(c) for m, c in valor.terminos.items()})
    return valor


def dividir(valor: Any, divisor: int) -> Any:
    """Divide por un entero sin pasar nunca por float."""
    if isinstance(valor, int) and not isinstance(valor, bool):
        return Fraction(valor, divisor)
    return valor / divisor


# =============================================================================
# POLINOMIO EN UNA VARIABLE
# =============================================================================

class PolinomioT:
    """
    Polinomio en una variable con coeficientes genéricos.

    Los coeficientes se guardan de grado bajo a alto sin ceros finales.
    Un operando PolinomioT en otra variable se trata como escalar, de modo
    que PolinomioT('t') con coeficientes PolinomioT('T') funciona.

    Uso:
        t = PolinomioT.generador('t')
        p = (1 + t) * Fraction(1, 2)
        p.evaluar(Fraction(1, 3))
    """

    __slots__ = ("coefs", "variable")

    def __init__(self, coefs: Iterable[Any] = (), variable: str = "t"):
        lista = list(coefs)
        while lista and es_cero(lista[-1]):
            lista.pop()
        self.coefs: Tuple[Any, ...] = tuple(lista)
        self.variable = variable

    @classmethod
    def constante(cls, valor: Any, variable: str = "t") -> "PolinomioT":
        return cls([valor], variable)

    @classmethod
    def generador(cls, variable: str = "t") -> "PolinomioT":
        return cls([0, 1], variable)

    @property
    def grado(self) -> int:
        """Grado del polinomio; -1 para el polinomio nulo."""
        return len(self.coefs) - 1

    def coeficiente(self, n: int) -> Any:
        if 0 <= n < len(self.coefs):
            return self.coefs[n]
        return 0

    def es_cero(self) -> bool:
        return not self.coefs

    def norma(self) -> Any:
        if not self.coefs:
            return 0
        return max(norma(c) for c in self.coefs)

    def evaluar(self, valor: Any) -> Any:
        """Evalúa por Horner."""
        resultado: Any = 0
        for c in reversed(self.coefs):
            resultado = resultado * valor + c
        return resultado

    def _misma_variable(self, otro: Any) -> bool:
        return isinstance(otro, PolinomioT) and otro.variable == self.variable

    # -------------------------------------------------------------------------
    # Aritmética
    # -------------------------------------------------------------------------

    def __add__(self, otro: Any) -> "PolinomioT":
        if self._misma_variable(otro):
            n = max(len(self.coefs), len(otro.coefs))
            return PolinomioT(
                [self.coeficiente(i) + otro.coeficiente(i) for i in range(n)],
                self.variable,
            )
        if not self.coefs:
            return PolinomioT([otro], self.variable)
        return PolinomioT((self.coefs[0] + otro,) + self.coefs[1:], self.variable)

    def __radd__(self, otro: Any) -> "PolinomioT":
        if not self.coefs:
            return PolinomioT([otro], self.variable)
        return PolinomioT((otro + self.coefs[0],) + self.coefs[1:], self.variable)

    def __neg__(self) -> "PolinomioT":
        return PolinomioT([-c for c in self.coefs], self.variable)

    def __sub__(self, otro: Any) -> "PolinomioT":
        return self + (-otro)

    def __rsub__(self, otro: Any) -> "PolinomioT":
        return (-self) + otro

    def __mul__(self, otro: Any) -> "PolinomioT":
        if self._misma_variable(otro):
            if not self.coefs or not otro.coefs:
                return PolinomioT([], self.variable)
            producto: list = [0] * (len(self.coefs) + len(otro.coefs) - 1)
            for i, a in enumerate(self.coefs):
                if es_cero(a):
                    continue
                for j, b in enumerate(otro.coefs):
                    producto[i + j] = producto[i + j] + a * b
            return PolinomioT(producto, self.variable)
        return PolinomioT([c * otro for c in self.coefs], self.variable)

    def __rmul__(self, otro: Any) -> "PolinomioT":
        return PolinomioT([otro * c for c in self.coefs], self.variable)

    def __truediv__(self, divisor: Any) -> "PolinomioT":
        if isinstance(divisor, int):
            return PolinomioT([dividir(c, divisor) for c in self.coefs], self.variable)
        return PolinomioT([c / divisor for c in self.coefs], self.variable)

    def __pow__(self, exponente: int) -> "PolinomioT":
        if not isinstance(exponente, int) or exponente < 0:
            raise ValueError(f"Exponente inválido para polinomio: {exponente}")
        resultado = PolinomioT([1], self.variable)
        base = self
        while exponente:
            if exponente & 1:
                resultado = resultado * base
            base = base * base
            exponente >>= 1
        return resultado

    def __eq__(self, otro: object) -> bool:
        if isinstance(otro, PolinomioT):
            return self.variable == otro.variable and self.coefs == otro.coefs
        if len(self.coefs) <= 1:
            return self.coeficiente(0) == otro
        return False

    __hash__ = None

    def __repr__(self) -> str:
        return f"PolinomioT({list(self.coefs)!r}, '{self.variable}')"

    def __str__(self) -> str:
        if not self.coefs:
            return "0"
        partes = []
        for n, c in enumerate(self.coefs):
            if es_cero(c):
                continue
            texto = mpmath.nstr(c, 15) if isinstance(c, mpmath.mpf) else str(c)
            if n == 0:
                partes.append(texto)
            elif n == 1:
                partes.append(f"({texto})·{self.variable}")
            else:
                partes.append(f"({texto})·{self.variable}^{n}")
        return " + ".join(partes)


# =============================================================================
# POLINOMIO EN (x, y)
# =============================================================================

class PolinomioXY:
    """
    Polinomio en las variables x, y con coeficientes genéricos.

    Los términos se guardan en un diccionario {(a, b): coeficiente} que
    representa coeficiente·x^a·y^b.
    """

    __slots__ = ("terminos",)

    def __init__(self, terminos: Dict[Tuple[int, int], Any] = None):
        limpio: Dict[Tuple[int, int], Any] = {}
        for monomio, c in (terminos or {}).items():
            if not es_cero(c):
                limpio[tuple(monomio)] = c
        self.terminos = limpio

    @classmethod
    def monomio(cls, a: int, b: int, coeficiente: Any = 1) -> "PolinomioXY":
        return cls({(a, b): coeficiente})

    def coeficiente(self, a: int, b: int) -> Any:
        return self.terminos.get((a, b), 0)

    def es_cero(self) -> bool:
        return not self.terminos

    def norma(self) -> Any:
        if not self.terminos:
            return 0
        return max(norma(c) for c in self.terminos.values())

    def evaluar(self, x: Any, y: Any) -> Any:
        total: Any = 0
        for (a, b), c in self.terminos.items():
            total = total + c * (x ** a) * (y ** b)
        return total

    def __add__(self, otro: "PolinomioXY") -> "PolinomioXY":
        suma = dict(self.terminos)
        for m, c in otro.terminos.items():
            suma[m] = suma[m] + c if m in suma else c
        return PolinomioXY(suma)

    def __neg__(self) -> "PolinomioXY":
        return PolinomioXY({m: -c for m, c in self.terminos.items()})

    def __sub__(self, otro: "PolinomioXY") -> "PolinomioXY":
        return self + (-otro)

    def __mul__(self, otro: Any) -> "PolinomioXY":
        if isinstance(otro, PolinomioXY):
            producto: Dict[Tuple[int, int], Any] = {}
            for (a1, b1), c1 in self.terminos.items():
                for (a2, b2), c2 in otro.terminos.items():
                    m = (a1 + a2, b1 + b2)
                    producto[m] = producto[m] + c1 * c2 if m in producto else c1 * c2
            return PolinomioXY(producto)
        return PolinomioXY({m: c * otro for m, c in self.terminos.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"PolinomioXY({self.terminos!r})"
