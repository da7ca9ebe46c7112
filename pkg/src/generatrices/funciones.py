"""
Funciones generatrices truncadas y lados de las identidades.

Todas las series se truncan en grado total N en (X, Y, Z). Los índices que
contribuyen a grado ≤ N son los de enumerar_por_grado(N), de modo que
cada coeficiente calculado es exacto (salvo el error numérico de los
valores zeta).

Las identidades con prefactor Z/(XY - Z) se comparan en forma
multiplicada, sin dividir por XY - Z.

PATRÓN DE INYECCIÓN:
- GeneratricesZeta recibe el MotorZeta por constructor.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

from algebra.polinomios import a_mpf, es_cero
from motor.indices import Indice, enumerar_por_grado, monomio_u
from motor.particiones import polinomio_c
from motor.zeta import ModoT, MotorZeta, con_precision
from series.serie import SerieTruncada, sumas_potencias_newton
from .parametros import ParametrosGF, Variante

logger = logging.getLogger(__name__)


def _potencia(base: Any, exponente: int) -> Any:
    resultado: Any = 1
    for _ in range(exponente):
        resultado = resultado * base
    return resultado


def parametro_s(t: Fraction) -> Fraction:
    """s = t(1 - 2t), el parámetro de γ_t y δ_t."""
    return t * (1 - 2 * t)


class GeneratricesZeta:
    """
    Construye las funciones generatrices Φ y los lados de las identidades.

    Uso:
        gen = GeneratricesZeta(motor)
        phi = gen.phi_fuerza_bruta(ParametrosGF.para(Variante.PLAIN, 6))
        lhs, rhs = gen.lados_oz(8)
    """

    def __init__(self, motor: MotorZeta):
        self.motor = motor
        self._memo_phi: Dict[Tuple, SerieTruncada] = {}
        self._memo_exponente: Dict[Tuple, SerieTruncada] = {}

    # =========================================================================
    # FUERZA BRUTA
    # =========================================================================

    def coeficiente_indice(self, indice: Indice, params: ParametrosGF,
                           modo: ModoT = ModoT.CONSTANTE) -> Any:
        """
        Contribución (1 - 2t)^dep·ζ^t_{x,y}(k) de un índice.

        Cada variante usa su propio camino de evaluación, de modo que las
        comparaciones del retículo de especializaciones no son triviales.
        """
        motor = self.motor
        partes = indice.partes
        r = len(partes)
        variante = params.variante
        if variante == Variante.PLAIN:
            return motor.zeta_holder(partes).valor
        if variante == Variante.STAR:
            return (-1) ** r * motor.zeta_estrella(partes)
        if variante == Variante.S:
            return motor.zeta_s(partes)
        if variante == Variante.S_STAR:
            return (-1) ** r * motor.zeta_s_estrella(partes)

        peso = _potencia(a_mpf(params.peso_profundidad), r)
        if es_cero(peso):
            return 0
        if variante == Variante.T:
            return peso * motor.zeta_t(partes, params.t)
        return peso * motor.zeta_xy(partes, params.t, params.x, params.y, modo)

    def _clave(self, params: ParametrosGF, todos: bool) -> Optional[Tuple]:
        if params.t_simbolico:
            return None
        return (params.variante, params.t, params.x, params.y, params.orden, todos)

    @con_precision
    def phi_fuerza_bruta(self, params: ParametrosGF) -> SerieTruncada:
        """
        Σ_{k ∈ I} (1 - 2t)^dep(k)·ζ^t_{x,y}(k)·u_k truncada en grado N.

        Ejemplo:
            plain, coeficiente de Z → ζ(2)
        """
        clave = self._clave(params, False)
        if clave is not None and clave in self._memo_phi:
            return self._memo_phi[clave]

        coefs: Dict[Tuple[int, int, int], Any] = {}
        for indice in enumerar_por_grado(params.orden, solo_admisibles=True):
            if indice.es_vacio:
                continue
            valor = self.coeficiente_indice(indice, params)
            if es_cero(valor):
                continue
            monomio = monomio_u(indice).como_tupla
            coefs[monomio] = coefs[monomio] + valor if monomio in coefs else valor
        serie = SerieTruncada(params.orden, coefs)
        logger.debug("phi_construida params=%s terminos=%d", params, len(serie))

        if clave is not None:
            self._memo_phi[clave] = serie
        return serie

    @con_precision
    def phi_todos_indices(self, params: ParametrosGF,
                          modo: ModoT = ModoT.CONSTANTE) -> SerieTruncada:
        """
        Σ_k (1 - 2t)^dep(k)·ζ^t_{x,y}(k)·u_k sobre todos los índices.

        Incluye el vacío (término constante 1) y los no admisibles con
        valores regularizados en T = 0, o como polinomios en T si el modo
        es simbólico.
        """
        params = params.como_ipmzv()
        clave = self._clave(params, True)
        if clave is not None:
            clave = clave + (modo,)
            if clave in self._memo_phi:
                return self._memo_phi[clave]

        coefs: Dict[Tuple[int, int, int], Any] = {(0, 0, 0): 1}
        for indice in enumerar_por_grado(params.orden):
            if indice.es_vacio:
                continue
            valor = self.coeficiente_indice(indice, params, modo)
            if es_cero(valor):
                continue
            monomio = monomio_u(indice).como_tupla
            coefs[monomio] = coefs[monomio] + valor if monomio in coefs else valor
        serie = SerieTruncada(params.orden, coefs)

        if clave is not None:
            self._memo_phi[clave] = serie
        return serie

    @con_precision
    def suma_diferencia_estrella(self, orden: int) -> SerieTruncada:
        """Σ_{k ∈ I} (ζ_S⋆(k) - ζ⋆(k))·u_k."""
        coefs: Dict[Tuple[int, int, int], Any] = {}
        for indice in enumerar_por_grado(orden, solo_admisibles=True):
            if indice.es_vacio:
                continue
            valor = self.motor.zeta_s_estrella(indice) - self.motor.zeta_estrella(indice)
            monomio = monomio_u(indice).como_tupla
            coefs[monomio] = coefs[monomio] + valor if monomio in coefs else valor
        return SerieTruncada(orden, coefs)

    def phi_por_variante(self, variante: Variante, orden: int,
                         t: Any = None) -> SerieTruncada:
        return self.phi_fuerza_bruta(ParametrosGF.para(variante, orden, t=t))

    def phi_t(self, t: Fraction, orden: int) -> SerieTruncada:
        """Φ^t con el peso (1 - 2t)^dep."""
        return self.phi_fuerza_bruta(ParametrosGF.para(Variante.T, orden, t=t))

    @con_precision
    def cotas_error(self, params: ParametrosGF) -> Dict[Tuple[int, int, int], Any]:
        """Cota de error de cada coeficiente de phi_fuerza_bruta (t, x, y numéricos)."""
        cotas: Dict[Tuple[int, int, int], Any] = {}
        factor = abs(a_mpf(params.peso_profundidad))
        for indice in enumerar_por_grado(params.orden, solo_admisibles=True):
            if indice.es_vacio:
                continue
            cota = factor ** indice.profundidad * self.motor.cota_xy(
                indice, params.t, params.x, params.y)
            monomio = monomio_u(indice).como_tupla
            cotas[monomio] = cotas.get(monomio, 0) + cota
        return cotas

    # =========================================================================
    # SERIES AUXILIARES
    # =========================================================================

    @staticmethod
    def variables(orden: int) -> Tuple[SerieTruncada, SerieTruncada, SerieTruncada]:
        return (SerieTruncada.variable(orden, "X"),
                SerieTruncada.variable(orden, "Y"),
                SerieTruncada.variable(orden, "Z"))

    @con_precision
    def sumas_potencias(self, s: Fraction, orden: int) -> List[SerieTruncada]:
        """
        p_k = α_s^k + β_s^k para k = 1..2N, con coeficientes racionales exactos.

        α_s + β_s = X + sY, α_sβ_s = s(XY - Z).
        """
        X, Y, Z = self.variables(orden)
        e1 = X + Y * s
        e2 = (X * Y - Z) * s
        return sumas_potencias_newton(e1, e2, 2 * orden)

    def _zeta_entero(self, k: int) -> Any:
        return self.motor.zeta_holder((k,)).valor

    @con_precision
    def exponente_generatriz(self, t: Fraction, x: Fraction, y: Fraction,
                             orden: int) -> SerieTruncada:
        """
        Σ_{k=2}^{2N} ζ(k)/k·(x^k + y^k)·(γ_t^k + δ_t^k - γ_{1-t}^k - δ_{1-t}^k).

        El término de orden k tiene grado ≥ ⌈k/2⌉, así que llegar a 2N
        basta para que la serie sea exacta en grado ≤ N.
        """
        clave = (Fraction(t), Fraction(x), Fraction(y), orden)
        if clave in self._memo_exponente:
            return self._memo_exponente[clave]

        t = Fraction(t)
        p_t = self.sumas_potencias(parametro_s(t), orden)
        p_1t = self.sumas_potencias(parametro_s(1 - t), orden)
        exponente = SerieTruncada.cero(orden)
        for k in range(2, 2 * orden + 1):
            factor_xy = Fraction(x) ** k + Fraction(y) ** k
            if factor_xy == 0:
                continue
            diferencia = (p_t[k - 1] - p_1t[k - 1]) * factor_xy
            if diferencia.es_cero():
                continue
            exponente = exponente + diferencia.mapear(lambda _, c: a_mpf(c)) * (
                self._zeta_entero(k) / k)

        self._memo_exponente[clave] = exponente
        return exponente

    @con_precision
    def exponente_por_particiones(self, t: Fraction, x: Fraction, y: Fraction,
                                  orden: int) -> SerieTruncada:
        """
        Σ_{r≥1} (1-2t)^r/r!·c_r(t)·Σ_{dep(k)=r} ζ_{x,y}(wt(k))·u_k.

        ζ_{x,y}(n) = ζ(n)(x^n + y^n), con ζ_{x,y}(1) = 0 (T = 0).
        """
        t = Fraction(t)
        pesos_r: Dict[int, Fraction] = {}
        coefs: Dict[Tuple[int, int, int], Any] = {}
        for indice in enumerar_por_grado(orden):
            if indice.es_vacio or indice.peso < 2:
                continue
            r = indice.profundidad
            if r not in pesos_r:
                pesos_r[r] = (1 - 2 * t) ** r / factorial(r) * polinomio_c(r).evaluar(t)
            factor_xy = Fraction(x) ** indice.peso + Fraction(y) ** indice.peso
            racional = pesos_r[r] * factor_xy
            if racional == 0:
                continue
            valor = a_mpf(racional) * self._zeta_entero(indice.peso)
            monomio = monomio_u(indice).como_tupla
            coefs[monomio] = coefs[monomio] + valor if monomio in coefs else valor
        return SerieTruncada(orden, coefs)

    # =========================================================================
    # TEOREMA DE OHNO-ZAGIER
    # =========================================================================

    @con_precision
    def exponente_oz(self, orden: int) -> SerieTruncada:
        """Σ_{k=2}^{2N} ζ(k)/k·(X^k + Y^k - α^k - β^k) con α + β = X + Y, αβ = Z."""
        X, Y, Z = self.variables(orden)
        potencias = sumas_potencias_newton(X + Y, Z, 2 * orden)
        exponente = SerieTruncada.cero(orden)
        for k in range(2, 2 * orden + 1):
            diferencia = X ** k + Y ** k - potencias[k - 1]
            if diferencia.es_cero():
                continue
            exponente = exponente + diferencia.mapear(lambda _, c: a_mpf(c)) * (
                self._zeta_entero(k) / k)
        return exponente

    @con_precision
    def lados_oz(self, orden: int) -> Tuple[SerieTruncada, SerieTruncada]:
        """
        (XY - Z)·Φ  frente a  Z·(1 - exp(S)).

        Returns:
            (lado izquierdo, lado derecho).
        """
        X, Y, Z = self.variables(orden)
        phi = self.phi_por_variante(Variante.PLAIN, orden)
        izquierdo = (X * Y - Z) * phi
        derecho = Z * (1 - self.exponente_oz(orden).exp())
        return izquierdo, derecho

    # =========================================================================
    # GENERATRIZ INTERPOLADA Y REESCALADO EN (x, y)
    # =========================================================================

    @con_precision
    def lado_derecho_principal(self, t: Fraction, x: Fraction, y: Fraction,
                               orden: int) -> SerieTruncada:
        """
        Φ^t(xX, xY, x²Z) - Φ^{1-t}(yX, yY, y²Z)·exp(exponente_generatriz).
        """
        t = Fraction(t)
        primero = self.phi_t(t, orden).reescalar_peso(a_mpf(Fraction(x)))
        segundo = self.phi_t(1 - t, orden).reescalar_peso(a_mpf(Fraction(y)))
        if segundo.es_cero():
            return primero
        factor = self.exponente_generatriz(t, x, y, orden).exp()
        return primero - segundo * factor

    @con_precision
    def lados_principal(self, t: Fraction, x: Fraction, y: Fraction,
                        orden: int) -> Tuple[SerieTruncada, SerieTruncada]:
        izquierdo = self.phi_fuerza_bruta(ParametrosGF.para(Variante.IPMZV, orden, t, x, y))
        return izquierdo, self.lado_derecho_principal(t, x, y, orden)

    @con_precision
    def lados_lema4(self, t: Fraction, x: Fraction, y: Fraction,
                    orden: int) -> Tuple[SerieTruncada, SerieTruncada]:
        """
        Φ^t(xX, xY, x²Z) - Φ^t_{x,y}  frente a  Φ^{1-t}(yX, yY, y²Z)·Σ_k (1-2t)^dep ζ^t_{x,y}(k)u_k.
        """
        t = Fraction(t)
        params = ParametrosGF.para(Variante.IPMZV, orden, t, x, y)
        izquierdo = (self.phi_t(t, orden).reescalar_peso(a_mpf(Fraction(x)))
                     - self.phi_fuerza_bruta(params))
        derecho = (self.phi_t(1 - t, orden).reescalar_peso(a_mpf(Fraction(y)))
                   * self.phi_todos_indices(params))
        return izquierdo, derecho

    @con_precision
    def lados_lema4_indice(self, indice: Indice, t: Fraction, x: Fraction,
                           y: Fraction) -> Tuple[Any, Any]:
        """
        Forma por índice de la descomposición de lados_lema4:

        Σ_{j<r} (-1)^{r-j} ζ^t_{x,y}(k1..kj)·ζ^{1-t}(k_{j+1}..kr)·y^{k_{j+1}+..+kr}
        frente a ζ^t(k)·x^wt - ζ^t_{x,y}(k).
        """
        motor = self.motor
        partes = indice.partes
        r = len(partes)
        t = Fraction(t)
        y_real = a_mpf(Fraction(y))
        izquierdo: Any = 0
        for j in range(r):
            sufijo = partes[j:]
            signo = -1 if (r - j) % 2 else 1
            factor = signo * y_real ** sum(sufijo)
            if es_cero(factor):
                continue
            izquierdo = izquierdo + factor * motor.zeta_xy(partes[:j], t, x, y) * motor.zeta_t(sufijo, 1 - t)
        derecho = (motor.zeta_t(partes, t) * a_mpf(Fraction(x)) ** indice.peso
                   - motor.zeta_xy(partes, t, x, y))
        return izquierdo, derecho

    # =========================================================================
    # VARIANTE SIMÉTRICA
    # =========================================================================

    @con_precision
    def exponente_par(self, t: Fraction, orden: int) -> Tuple[SerieTruncada, List[Fraction]]:
        """
        Σ_{k par} 2ζ(k)/k·(p_k^(t) - p_k^(1-t)) y los factores 1 + (-1)^k de k impar.

        Los factores estructurales son racionales exactos y valen 0.
        """
        t = Fraction(t)
        p_t = self.sumas_potencias(parametro_s(t), orden)
        p_1t = self.sumas_potencias(parametro_s(1 - t), orden)
        exponente = SerieTruncada.cero(orden)
        estructurales: List[Fraction] = []
        for k in range(2, 2 * orden + 1):
            factor = Fraction(1) ** k + Fraction(-1) ** k
            if k % 2:
                estructurales.append(factor)
                continue
            diferencia = (p_t[k - 1] - p_1t[k - 1]) * factor
            if diferencia.es_cero():
                continue
            exponente = exponente + diferencia.mapear(lambda _, c: a_mpf(c)) * (
                self._zeta_entero(k) / k)
        return exponente, estructurales

    @con_precision
    def lados_cor1(self, t: Fraction, orden: int
                   ) -> Tuple[SerieTruncada, SerieTruncada, List[Fraction]]:
        """
        Φ^t_S  frente a  Φ^t - Φ^{1-t}(-X, -Y, Z)·exp(exponente_par).

        Returns:
            (lado izquierdo, lado derecho, factores estructurales de k impar).
        """
        t = Fraction(t)
        izquierdo = self.phi_fuerza_bruta(ParametrosGF.para(Variante.IPMZV, orden, t, 1, -1))
        exponente, estructurales = self.exponente_par(t, orden)
        segundo = self.phi_t(1 - t, orden).reescalar_peso(-1)
        derecho = self.phi_t(t, orden) - segundo * exponente.exp()
        return izquierdo, derecho, estructurales

    @con_precision
    def lados_cor2(self, orden: int) -> Dict[str, SerieTruncada]:
        """
        Cadena de series para ζ_S⋆ - ζ⋆.

        Returns:
            Diccionario con:
            - "suma": Σ (ζ_S⋆ - ζ⋆)(k)·u_k
            - "sustitucion": (Φ_S⋆ - Φ⋆)(X, -Y, -Z)
            - "cadena": -Φ(-X, Y, -Z)·E(X, -Y, -Z), E el factor par en t = 1
        """
        suma = self.suma_diferencia_estrella(orden)
        diferencia = (self.phi_por_variante(Variante.S_STAR, orden)
                      - self.phi_por_variante(Variante.STAR, orden))
        sustitucion = diferencia.sustituir_signos(1, -1, -1)

        exponente, _ = self.exponente_par(Fraction(1), orden)
        factor = exponente.exp().sustituir_signos(1, -1, -1)
        phi = self.phi_por_variante(Variante.PLAIN, orden).sustituir_signos(-1, 1, -1)
        cadena = -(phi * factor)
        return {"suma": suma, "sustitucion": sustitucion, "cadena": cadena}
