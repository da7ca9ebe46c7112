"""
Muestreo reproducible de índices y palabras.

Herramienta de pruebas: ningún cálculo de la biblioteca ni de la CLI lo
usa. Las pruebas de propiedades (conmutatividad, asociatividad, leyes de
anillo) toman muestras aleatorias; con una semilla fija cada ejecución
repite las mismas muestras.

Uso:
    from motor import GestorAleatorio
    gestor = GestorAleatorio(seed=12345)
    palabra = gestor.palabra(peso_maximo=6)
"""

import random
from fractions import Fraction
from typing import Optional, Tuple

from .indices import Indice, composiciones


class GestorAleatorio:
    """
    Gestor del generador de números aleatorios.

    Permite fijar una semilla para reproducibilidad en pruebas.
    """

    def __init__(self, seed: Optional[int] = None):
        self._seed: Optional[int] = None
        self._rng = random.Random()
        if seed is not None:
            self.set_seed(seed)

    def set_seed(self, seed: int) -> None:
        """Establece una semilla fija."""
        self._seed = seed
        self._rng.seed(seed)

    def get_seed(self) -> Optional[int]:
        """Retorna la semilla actual o None si es aleatorio."""
        return self._seed

    def reset(self) -> None:
        """Vuelve al modo completamente aleatorio."""
        self._seed = None
        self._rng = random.Random()

    def randint(self, a: int, b: int) -> int:
        """Entero entre a y b (inclusive)."""
        return self._rng.randint(a, b)

    def palabra(self, peso_maximo: int, peso_minimo: int = 0) -> Tuple[int, ...]:
        """Composición uniforme entre las de un peso elegido al azar."""
        peso = self.randint(peso_minimo, peso_maximo)
        if peso == 0:
            return ()
        # cada uno de los peso-1 huecos corta o no con probabilidad 1/2
        partes = [1]
        for _ in range(peso - 1):
            if self._rng.random() < 0.5:
                partes.append(1)
            else:
                partes[-1] += 1
        return tuple(partes)

    def indice_admisible(self, peso_maximo: int) -> Indice:
        """Índice admisible no vacío de peso entre 2 y peso_maximo."""
        peso = self.randint(2, peso_maximo)
        opciones = [p for p in composiciones(peso) if p[-1] >= 2]
        return Indice(self._rng.choice(opciones))

    def racional(self, cota: int = 5) -> Fraction:
        """Racional p/q con |p| ≤ cota y 1 ≤ q ≤ cota."""
        return Fraction(self.randint(-cota, cota), self.randint(1, cota))
