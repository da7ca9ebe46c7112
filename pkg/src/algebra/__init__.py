"""
Álgebra exacta: polinomios y álgebra armónica con regularización.
"""

from .polinomios import PolinomioT, PolinomioXY, a_mpf, es_cero, norma, dividir
from .armonico import (
    ElementoH, PolinomioReg, Palabra,
    producto_palabras, producto_armonico,
    regularizar, regularizar_elemento, evaluar_elemento, evaluar_reg,
)

__all__ = [
    'PolinomioT',
    'PolinomioXY',
    'a_mpf',
    'es_cero',
    'norma',
    'dividir',
    'ElementoH',
    'PolinomioReg',
    'Palabra',
    'producto_palabras',
    'producto_armonico',
    'regularizar',
    'regularizar_elemento',
    'evaluar_elemento',
    'evaluar_reg',
]
