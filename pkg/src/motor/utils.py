"""
Utilidades comunes del motor.
"""

import re
import unicodedata
from typing import Iterable, List


def normalizar_nombre(s: str) -> str:
    """
    Normaliza un nombre para comparación (slugify).

    Ejemplos:
        "Lemma5 Antipode" -> "lemma5_antipode"
        "oz-gamma" -> "oz_gamma"
        "Suma Simétrica" -> "suma_simetrica"
    """
    s = unicodedata.normalize("NFKD", s).encode("ascii", "ignore").decode("ascii")
    s = s.lower()
    s = re.sub(r"[^a-z0-9]+", "_", s)
    return s.strip("_")


def coincidencias_prefijo(nombre: str, candidatos: Iterable[str]) -> List[str]:
    """
    Candidatos que coinciden exactamente o empiezan por el nombre normalizado.

    Una coincidencia exacta tiene prioridad sobre los prefijos.
    """
    clave = normalizar_nombre(nombre)
    candidatos = sorted(candidatos)
    exactos = [c for c in candidatos if normalizar_nombre(c) == clave]
    if exactos:
        return exactos
    return [c for c in candidatos if normalizar_nombre(c).startswith(clave)]
